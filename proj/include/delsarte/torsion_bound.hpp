#pragma once

#include <array>
#include <vector>

#include "delsarte/quotient.hpp"

namespace delsarte {

// Filtration bound on the torsion of the line submodule: three layers whose
// orders multiply to an annihilator of the whole torsion group.  All
// parameters depend on the chosen labelling of the four generators.
struct TorsionBoundParams {
    IndexPermutation permutation{0, 1, 2, 3};
    std::array<long, 3> m{};       // orders of the images of t1, t2, t3
    std::array<long, 3> n{};       // n_1, n_2, n_3
    std::array<long, 3> n_pair{};  // n_23, n_13, n_12
    std::array<long, 3> nbar{};
    std::array<long, 2> p{};     // p_2, p_3
    std::array<long, 2> pbar{};  // p_2 / |G_3|, p_3 / |G_2|
    long qbar = 1;
    long sbar = 1;

    // layer groups: (Z/qbar + Z/sbar), (Z/pbar2 + Z/pbar3), (Z/nbar1..3)
    std::array<std::vector<long>, 3> layers() const {
        return {std::vector<long>{qbar, sbar}, std::vector<long>{pbar[0], pbar[1]},
                std::vector<long>{nbar[0], nbar[1], nbar[2]}};
    }
    Int layer_order_product() const;
    int nontrivial_factor_count() const;
};

TorsionBoundParams torsion_bound(const FiniteQuotient& q, const IndexPermutation& perm);

// Evaluates all 24 labellings and keeps the bound with the smallest layer
// order product, then the fewest nontrivial factors, then the
// lexicographically smallest permutation.
TorsionBoundParams best_torsion_bound(const FiniteQuotient& q);

std::vector<TorsionBoundParams> all_torsion_bounds(const FiniteQuotient& q);

}  // namespace delsarte
