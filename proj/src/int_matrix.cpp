#include "delsarte/int_matrix.hpp"

#include <algorithm>
#include <ostream>

namespace delsarte {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw validation_error("ragged initializer for IntMatrix");
        for (long v : r) e_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

void IntMatrix::set_row(std::size_t i, const std::vector<Int>& r) {
    std::copy(r.begin(), r.end(), e_.begin() + i * cols_);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row(std::size_t i, std::size_t k, const Int& c) {
    if (c == 0) return;
    for (std::size_t l = 0; l < cols_; ++l) at(i, l) += c * at(k, l);
}

void IntMatrix::add_col(std::size_t j, std::size_t k, const Int& c) {
    if (c == 0) return;
    for (std::size_t l = 0; l < rows_; ++l) at(l, j) += c * at(l, k);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw internal_error("matrix product dimension mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw internal_error("determinant of non-square matrix");
    if (rows_ == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < rows_; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < rows_ && a.at(p, k) == 0) ++p;
            if (p == rows_) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < rows_; ++i) {
            for (std::size_t j = k + 1; j < rows_; ++j) {
                Int v = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int d = a.at(rows_ - 1, rows_ - 1);
    return sign > 0 ? d : Int(-d);
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
    if (below.rows_ == 0) return *this;
    if (rows_ == 0) return below;
    if (cols_ != below.cols_) throw internal_error("stack dimension mismatch");
    IntMatrix s(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) s.at(rows_ + i, j) = below.at(i, j);
    return s;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw internal_error("ragged row list");
        m.set_row(i, rows[i]);
    }
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m.at(i, j).get_str();
        }
        os << ']';
    }
    return os << ']';
}

void SparseIntMatrix::add(std::size_t i, std::size_t j, const Int& v) {
    if (v == 0) return;
    entries[i].emplace_back(j, v);
}

void SparseIntMatrix::finalize() {
    for (auto& row : entries) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<std::size_t, Int>> merged;
        for (auto& [c, v] : row) {
            if (!merged.empty() && merged.back().first == c)
                merged.back().second += v;
            else
                merged.emplace_back(c, v);
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        row = std::move(merged);
    }
}

IntMatrix SparseIntMatrix::dense() const {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (const auto& [j, v] : entries[i]) m.at(i, j) += v;
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
    SparseIntMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) s.entries[i].emplace_back(j, m.at(i, j));
    return s;
}

}  // namespace delsarte
