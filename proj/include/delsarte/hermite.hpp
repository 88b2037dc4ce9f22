#pragma once

#include <optional>
#include <vector>

#include "delsarte/int_matrix.hpp"

namespace delsarte {

// Row-style Hermite form: U * A = H with U unimodular, pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
    IntMatrix H, U;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row of H
    std::size_t rank() const { return pivot_cols.size(); }

    // The nonzero rows of H: a canonical basis of the row span of A.
    IntMatrix basis() const;
    // Rows of U mapping onto the zero rows of H: a basis of the left kernel.
    IntMatrix left_kernel() const;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

// Integer solution x of x * B = v for the row span basis `H` of a HermiteForm
// (nonzero rows, echelon order).  Returns nothing when v is not a member.
std::optional<std::vector<Int>> solve_in_echelon(const HermiteForm& h, const std::vector<Int>& v);

}  // namespace delsarte
