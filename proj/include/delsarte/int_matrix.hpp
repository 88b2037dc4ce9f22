#pragma once

#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "delsarte/numeric.hpp"

namespace delsarte {

// Dense matrix of arbitrary-precision integers, row-major.  All exact
// decompositions in the library run over this type or over SparseIntMatrix;
// the two storages are interchangeable and must agree on every operation.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;
    void set_row(std::size_t i, const std::vector<Int>& r);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i += c * row k
    void add_row(std::size_t i, std::size_t k, const Int& c);
    // col j += c * col k
    void add_col(std::size_t j, std::size_t k, const Int& c);

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Exact determinant by fraction-free (Bareiss) elimination; square only.
    Int det() const;

    // Stacks rows of `below` underneath this matrix; column counts must match.
    IntMatrix stacked(const IntMatrix& below) const;

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Coordinate-format sparse matrix used to build the large group-ring
// expansions without materialising zeros.  Semantics match IntMatrix.
struct SparseIntMatrix {
    std::size_t rows = 0, cols = 0;
    // per-row list of (col, value), columns strictly increasing
    std::vector<std::vector<std::pair<std::size_t, Int>>> entries;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}

    void add(std::size_t i, std::size_t j, const Int& v);
    void finalize();  // sort columns, merge duplicates, drop zeros
    IntMatrix dense() const;
    static SparseIntMatrix from_dense(const IntMatrix& m);
};

}  // namespace delsarte
