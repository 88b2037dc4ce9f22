#include "delsarte/hermite.hpp"

namespace delsarte {

IntMatrix HermiteForm::basis() const {
    IntMatrix b(rank(), H.cols());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j) b.at(i, j) = H.at(i, j);
    return b;
}

IntMatrix HermiteForm::left_kernel() const {
    std::size_t r = rank();
    IntMatrix k(H.rows() - r, U.cols());
    for (std::size_t i = r; i < H.rows(); ++i)
        for (std::size_t j = 0; j < U.cols(); ++j) k.at(i - r, j) = U.at(i, j);
    return k;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;

    for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
        // reduce column `col` below `row` to a single entry by gcd steps
        for (;;) {
            std::size_t best = h.rows();
            for (std::size_t i = row; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == h.rows() || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (best == h.rows()) break;  // column empty below
            h.swap_rows(row, best);
            u.swap_rows(row, best);
            if (h.at(row, col) < 0) {
                h.negate_row(row);
                u.negate_row(row);
            }
            bool done = true;
            for (std::size_t i = row + 1; i < h.rows(); ++i) {
                if (h.at(i, col) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                h.add_row(i, row, -q);
                u.add_row(i, row, -q);
                if (h.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (row < h.rows() && h.at(row, col) != 0) {
            // reduce entries above the pivot into [0, pivot)
            for (std::size_t i = 0; i < row; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                h.add_row(i, row, -q);
                u.add_row(i, row, -q);
            }
            pivots.push_back(col);
            ++row;
        }
    }
    return HermiteForm{std::move(h), std::move(u), std::move(pivots)};
}

std::optional<std::vector<Int>> solve_in_echelon(const HermiteForm& h, const std::vector<Int>& v) {
    std::vector<Int> rem = v;
    std::vector<Int> x(h.rank());
    for (std::size_t i = 0; i < h.rank(); ++i) {
        std::size_t c = h.pivot_cols[i];
        const Int& p = h.H.at(i, c);
        if (!divides(p, rem[c])) return std::nullopt;
        Int q = rem[c] / p;
        if (q != 0)
            for (std::size_t j = 0; j < h.H.cols(); ++j) rem[j] -= q * h.H.at(i, j);
        x[i] = q;
    }
    for (const Int& r : rem)
        if (r != 0) return std::nullopt;
    return x;
}

}  // namespace delsarte
