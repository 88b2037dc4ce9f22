#pragma once

#include <optional>
#include <vector>

#include "delsarte/hermite.hpp"
#include "delsarte/int_matrix.hpp"
#include "delsarte/smith.hpp"
#include "delsarte/sparse_smith.hpp"

namespace delsarte {

// Canonical (Hermite) basis of the lattice generated by the rows.
IntMatrix lattice_basis(const IntMatrix& gens);

// Generators of span(b1) ∩ span(b2), both sublattices of the same Z^n,
// computed by the stacked-kernel method; rows returned in Hermite form.
IntMatrix lattice_intersection(const IntMatrix& b1, const IntMatrix& b2);

// Hermite basis of span(b1) + span(b2).
IntMatrix lattice_sum(const IntMatrix& b1, const IntMatrix& b2);

// Integer x with x * B = v, or nothing when v is outside the row span.
std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& b, const std::vector<Int>& v);

// Order of x + span(modulus) in Z^n / span(modulus); the span must have
// full rank n so the quotient is finite.
Int order_in_quotient(const HermiteForm& modulus, const std::vector<Int>& x);

// |Z^n / span(gens)|; requires full rank.
Int quotient_order(const IntMatrix& gens);

// Structure of (span(upper)+span(relations)) / (span(lower)+span(relations)).
// Containment of the lower subgroup is checked; a violating generator is
// reported by index in the error message.
AbelianGroupStructure abelian_subquotient(std::size_t ambient_rank, const IntMatrix& relations,
                                          const IntMatrix& upper, const IntMatrix& lower);

// Sparse echelon basis of a row span: unit-pivot sparse phase, dense Hermite
// sweep on the leftover core.  Supports membership solves against the basis.
class SparseEchelon {
  public:
    explicit SparseEchelon(const SparseIntMatrix& a);

    std::size_t rank() const { return rows_.size(); }
    // coefficients of v in the echelon basis, or nothing if not a member
    std::optional<std::vector<Int>> solve(std::vector<Int> v) const;

  private:
    struct EchRow {
        std::size_t pivot_col;
        std::vector<std::pair<std::size_t, Int>> entries;  // sorted by column
    };
    std::vector<EchRow> rows_;
    std::size_t cols_ = 0;
};

// Sparse counterpart of abelian_subquotient for the big module expansions.
AbelianGroupStructure abelian_subquotient_sparse(const SparseIntMatrix& relations,
                                                 const SparseIntMatrix& upper,
                                                 const SparseIntMatrix& lower);

}  // namespace delsarte
