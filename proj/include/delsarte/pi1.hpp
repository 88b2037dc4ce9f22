#pragma once

#include "delsarte/quotient.hpp"
#include "delsarte/smith.hpp"

namespace delsarte {

// Fundamental group of the surface attached to a finite quotient: the kernel
// lattice modulo the sum of its intersections with the six coordinate pairs.
// Always finite cyclic, of order dividing the height.
struct Pi1Result {
    AbelianGroupStructure structure;
    Int order;
};

Pi1Result pi1(const FiniteQuotient& q);

}  // namespace delsarte
