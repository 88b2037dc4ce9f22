#pragma once

#include <vector>

#include "delsarte/int_matrix.hpp"

namespace delsarte {

// Canonical form of a finitely generated abelian group: free rank plus the
// divisibility chain of torsion factors (each >= 2, a1 | a2 | ...).
struct AbelianGroupStructure {
    long free_rank = 0;
    std::vector<Int> torsion_factors;

    bool operator==(const AbelianGroupStructure& o) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion_factors.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const;                       // product of torsion factors; requires finite
    Int exponent() const;                    // last torsion factor, or 1
    long length() const { return static_cast<long>(torsion_factors.size()); }
    std::string str() const;                 // e.g. "Z^2 + Z/2 + Z/4", "0"
};

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... >= 0.
struct SmithForm {
    IntMatrix U, D, V;
    std::vector<Int> diagonal() const;
    AbelianGroupStructure cokernel_structure(std::size_t ambient_cols) const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Diagonal-only reference computation, textbook elimination on a dense
// matrix.  Kept deliberately simple; the optimized sparse kernel is checked
// against it (see sparse_smith.hpp).
std::vector<Int> smith_diagonal_reference(IntMatrix a);

// Structure of Z^cols / (row span of a) given the SNF diagonal of a.
AbelianGroupStructure cokernel_of_diagonal(const std::vector<Int>& diag, std::size_t cols);

}  // namespace delsarte
