#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tilespace {

using Integer = boost::multiprecision::cpp_int;

/** Dense row-major matrix of arbitrary-precision integers. */
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntegerMatrix transpose() const;
    /** Rows [r0, r0+nr) and columns [c0, c0+nc). */
    IntegerMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    IntegerMatrix select_columns(const std::vector<std::size_t>& cols) const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /** row[dst] += k * row[src] */
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /** col[dst] += k * col[src] */
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix operator*(const Integer& k, const IntegerMatrix& a);

IntegerMatrix power(const IntegerMatrix& m, unsigned n);
IntegerMatrix entrywise_abs(const IntegerMatrix& m);

/** Rank over the rationals by fraction-free (Bareiss) elimination. */
std::size_t rank(const IntegerMatrix& m);
/** Exact determinant by Bareiss elimination. */
Integer determinant(const IntegerMatrix& m);

std::string to_string(const IntegerMatrix& m);

}  // namespace tilespace
