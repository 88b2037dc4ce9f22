#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "delsarte/poly.hpp"
#include "delsarte/quotient.hpp"
#include "delsarte/smith.hpp"

namespace delsarte {

// Weight data of a cyclic quotient: a canonical generator of G is fixed and
// each t_i maps to its weights[i]-th power.  Invariants: weights sum to zero
// mod m, gcd(m, w1, w2, w3) = 1, pair gcds agree on complementary pairs and
// gcd(m12, m13, m23) = 2^delta.
struct CyclicData {
    long m = 1;
    std::array<long, 4> weights{};    // w0..w3 in [0, m)
    std::array<long, 3> pair_gcds{};  // m_12, m_13, m_23 with m_ij = gcd(m, w_i + w_j)
    int delta = 0;

    long pair_gcd(int i, int j) const;  // any pair 0..3, via complements
    // lexicographically smallest unit multiple of the weight quadruple
    std::array<long, 4> canonical_weights() const;
};

CyclicData cyclic_weights(const FiniteQuotient& q);

// Formal product of cyclotomic polynomials, d -> multiplicity.
struct CyclotomicProduct {
    std::map<long, int> factors;

    bool operator==(const CyclotomicProduct&) const = default;
    long degree() const;
    IntPoly expand() const;
    std::string str() const;  // e.g. "Phi(1)Phi(2)^2"
};

// The six invariant factors of the cyclic relation matrix in closed form:
// f1 = f2 = f3 = Phi(1), f4 = (t+1)^delta (t-1), f6 = t^m - 1, and f5 the
// product of Phi(d) over qualifying divisors of m (d = 1 included).  In
// positive characteristic the answer is the mod-p reduction of the same
// product, so the structure returned does not depend on the field.
std::array<CyclotomicProduct, 6> closed_form_factors(const CyclicData& c, long characteristic);

// The 9x6 relation matrix of the cyclic module over k[t], entries built from
// t^{w_i}-1, t^m-1 and t^{m_ij}-1.
FieldPolyMatrix relation_matrix(const CyclicData& c, long characteristic);

struct CyclicVerification {
    CyclicData data;
    std::vector<long> fields;  // 0 for the rationals, then each prime dividing m
    bool factors_match = false;
    bool degree_sums_match = false;
    bool integer_torsion_empty = false;
    long degree_sum = 0;  // common value, equals the rank of the module
    std::vector<std::string> mismatches;

    bool ok() const { return factors_match && degree_sums_match && integer_torsion_empty; }
};

// Cross-validates the closed form against the polynomial Smith form in every
// relevant characteristic and against the integer path.  Mismatches are
// reported in the record, not thrown.  The second form reuses an already
// computed integer-path structure of the module.
CyclicVerification verify_cyclic(const FiniteQuotient& q);
CyclicVerification verify_cyclic(const FiniteQuotient& q,
                                 const AbelianGroupStructure& integer_path);

}  // namespace delsarte
