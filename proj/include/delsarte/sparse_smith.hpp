#pragma once

#include <vector>

#include "delsarte/int_matrix.hpp"
#include "delsarte/smith.hpp"

namespace delsarte {

// Diagonal of the Smith form with zero entries dropped: the nonzero
// invariant chain d1 | d2 | ... (ones included).
struct SmithInvariants {
    std::vector<Int> chain;

    std::size_t rank() const { return chain.size(); }
    std::vector<Int> nontrivial() const;
    AbelianGroupStructure cokernel(std::size_t ambient_cols) const;
};

// Optimized kernel for the large group-ring expansions: a sparse phase that
// strips unit pivots (Markowitz-style fill control), then a dense sweep on
// the remaining core.  Matches smith_diagonal_reference on every input.
SmithInvariants smith_invariants(const SparseIntMatrix& a);
SmithInvariants smith_invariants(const IntMatrix& a);

// Dense diagonal sweep used for the core; row updates run under OpenMP when
// `parallel` is set.  Exposed for the serial-vs-parallel benchmark.
std::vector<Int> dense_smith_diagonal(IntMatrix a, bool parallel);

}  // namespace delsarte
