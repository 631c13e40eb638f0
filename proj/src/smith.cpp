#include "tilespace/smith.hpp"

namespace tilespace {

std::vector<Integer> SNFResult::invariant_factors() const {
    std::vector<Integer> f;
    for (std::size_t i = 0; i < rank; ++i)
        f.push_back(D(i, i));
    return f;
}

namespace {

struct Workspace {
    SNFResult r;

    void swap_rows(std::size_t a, std::size_t b) {
        r.D.swap_rows(a, b);
        r.U.swap_rows(a, b);
        r.U_inv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        r.D.swap_cols(a, b);
        r.V.swap_cols(a, b);
        r.V_inv.swap_rows(a, b);
    }
    // row[dst] += k row[src]
    void add_row(std::size_t dst, std::size_t src, const Integer& k) {
        r.D.add_row_multiple(dst, src, k);
        r.U.add_row_multiple(dst, src, k);
        r.U_inv.add_col_multiple(src, dst, -k);
    }
    // col[dst] += k col[src]
    void add_col(std::size_t dst, std::size_t src, const Integer& k) {
        r.D.add_col_multiple(dst, src, k);
        r.V.add_col_multiple(dst, src, k);
        r.V_inv.add_row_multiple(src, dst, -k);
    }
    void negate_row(std::size_t i) {
        r.D.negate_row(i);
        r.U.negate_row(i);
        r.U_inv.negate_col(i);
    }
};

Integer magnitude(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SNFResult smith_normal_form(const IntegerMatrix& m) {
    Workspace w;
    w.r.D = m;
    w.r.U = w.r.U_inv = IntegerMatrix::identity(m.rows());
    w.r.V = w.r.V_inv = IntegerMatrix::identity(m.cols());
    IntegerMatrix& D = w.r.D;
    const std::size_t rows = m.rows(), cols = m.cols();

    std::size_t t = 0;
    for (; t < rows && t < cols; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool any = false;
        std::size_t pr = t, pc = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (D(i, j) != 0 && (!any || magnitude(D(i, j)) < magnitude(D(pr, pc)))) {
                    any = true;
                    pr = i;
                    pc = j;
                }
        if (!any)
            break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (D(i, t) != 0) {
                    w.add_row(i, t, -(D(i, t) / D(t, t)));
                    if (D(i, t) != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (D(t, j) != 0) {
                    w.add_col(j, t, -(D(t, j) / D(t, t)));
                    if (D(t, j) != 0)
                        clean = false;
                }
            if (!clean) {
                // A remainder smaller than the pivot is left; promote it.
                std::size_t br = t, bc = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (D(i, t) != 0 && magnitude(D(i, t)) < magnitude(D(br, bc))) {
                        br = i;
                        bc = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D(t, j) != 0 && magnitude(D(t, j)) < magnitude(D(br, bc))) {
                        br = t;
                        bc = j;
                    }
                w.swap_rows(t, br);
                w.swap_cols(t, bc);
                continue;
            }
            std::size_t bad_row = rows;
            for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (bad_row == rows)
                break;
            w.add_row(t, bad_row, 1);
        }
        if (D(t, t) < 0)
            w.negate_row(t);
    }
    w.r.rank = t;
    return w.r;
}

}  // namespace tilespace
