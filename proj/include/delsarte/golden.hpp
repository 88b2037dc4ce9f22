#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "delsarte/report.hpp"

namespace delsarte {

struct GoldenCheck {
    std::string table;  // which published table the case comes from
    std::string name;
    bool pass = false;
    std::string expected;
    std::string got;
};

// The published example tables, reproduced exactly:
//  - nine quotients with torsion of maximal length,
//  - four quotients with group order prime to six,
//  - four diagonal quotients realising the diagonal torsion formula,
//  - the cyclic order-12 study with its filtration and permuted bounds.
std::vector<GoldenCheck> run_golden_checks();

// Prints one line per check; returns 0 when everything matches, 3 otherwise.
int paper_examples(std::ostream& out);

// Diagonal torsion order: lcm of the pairwise gcds over gcd(m1, m2, m3).
long diagonal_sbar(long m1, long m2, long m3);

}  // namespace delsarte
