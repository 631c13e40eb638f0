#include "tilespace/matrix.hpp"

#include <stdexcept>

namespace tilespace {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntegerMatrix IntegerMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntegerMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    IntegerMatrix b(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            b(r, c) = (*this)(r, cols[c]);
    return b;
}

bool IntegerMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0)
            (*this)(dst, c) += k * (*this)(src, c);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, src) != 0)
            (*this)(r, dst) += k * (*this)(r, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    p(i, j) += x * b(k, j);
        }
    return p;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    IntegerMatrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s(i, j) += b(i, j);
    return s;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) { return a + Integer(-1) * b; }

IntegerMatrix operator*(const Integer& k, const IntegerMatrix& a) {
    IntegerMatrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            s(i, j) *= k;
    return s;
}

IntegerMatrix power(const IntegerMatrix& m, unsigned n) {
    if (!m.square())
        throw std::invalid_argument("power of a non-square matrix");
    IntegerMatrix result = IntegerMatrix::identity(m.rows());
    IntegerMatrix base = m;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1u;
        if (n)
            base = base * base;
    }
    return result;
}

IntegerMatrix entrywise_abs(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (a(i, j) < 0)
                a(i, j) = -a(i, j);
    return a;
}

namespace {

// Bareiss elimination in place; returns rank and, for square input, the
// signed determinant in `det`.
std::size_t bareiss(IntegerMatrix a, Integer* det) {
    std::size_t rows = a.rows(), cols = a.cols();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a(pivot, c) == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != r) {
            a.swap_rows(pivot, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    if (det) {
        if (r < rows)
            *det = 0;
        else
            *det = sign * prev;
    }
    return r;
}

}  // namespace

std::size_t rank(const IntegerMatrix& m) { return bareiss(m, nullptr); }

Integer determinant(const IntegerMatrix& m) {
    if (!m.square())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    Integer det;
    bareiss(m, &det);
    return det;
}

std::string to_string(const IntegerMatrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += "[";
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? " " : "") + m(i, j).str();
        s += "]\n";
    }
    return s;
}

}  // namespace tilespace
