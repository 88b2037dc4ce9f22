#include "delsarte/cyclic.hpp"

#include <algorithm>
#include <sstream>

#include "delsarte/group_module.hpp"

namespace delsarte {

long CyclicData::pair_gcd(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 1 && j == 2) return pair_gcds[0];
    if (i == 1 && j == 3) return pair_gcds[1];
    if (i == 2 && j == 3) return pair_gcds[2];
    // complementary pairs carry the same gcd
    if (i == 0 && j == 3) return pair_gcds[0];
    if (i == 0 && j == 2) return pair_gcds[1];
    if (i == 0 && j == 1) return pair_gcds[2];
    throw internal_error("pair_gcd: bad indices");
}

std::array<long, 4> CyclicData::canonical_weights() const {
    std::array<long, 4> best = weights;
    for (long u = 1; u < m; ++u) {
        if (gcd_l(u, m) != 1) continue;
        std::array<long, 4> cand;
        for (int i = 0; i < 4; ++i) cand[i] = (weights[i] * u) % m;
        if (cand < best) best = cand;
    }
    return best;
}

CyclicData cyclic_weights(const FiniteQuotient& q) {
    if (!q.is_cyclic_group()) throw validation_error("quotient group is not cyclic");
    CyclicData c;
    c.m = q.order_l();
    for (int i = 0; i < 4; ++i) {
        // the Smith basis generator has coordinates (0,0,1)
        GroupElement e = q.generator_image(i);
        c.weights[i] = e[2];
    }
    long g = gcd_l(c.m, gcd_l(c.weights[1], gcd_l(c.weights[2], c.weights[3])));
    if (g != 1) throw internal_error("cyclic weights violate the gcd normalisation");
    if ((c.weights[0] + c.weights[1] + c.weights[2] + c.weights[3]) % c.m != 0)
        throw internal_error("cyclic weights do not sum to zero");

    auto mij = [&](int i, int j) { return gcd_l(c.m, c.weights[i] + c.weights[j]); };
    c.pair_gcds = {mij(1, 2), mij(1, 3), mij(2, 3)};
    if (mij(0, 3) != c.pair_gcds[0] || mij(0, 2) != c.pair_gcds[1] || mij(0, 1) != c.pair_gcds[2])
        throw internal_error("complementary pair gcds disagree");

    bool odd_weights = (c.weights[1] % 2) && (c.weights[2] % 2) && (c.weights[3] % 2);
    c.delta = (c.m % 2 == 0 && odd_weights) ? 1 : 0;
    long g_ij = gcd_l(c.pair_gcds[0], gcd_l(c.pair_gcds[1], c.pair_gcds[2]));
    if (g_ij != (c.delta ? 2 : 1))
        throw internal_error("gcd(m12, m13, m23) is not 2^delta");
    return c;
}

long CyclotomicProduct::degree() const {
    long d = 0;
    for (const auto& [order, mult] : factors) d += mult * poly_deg(cyclotomic(order));
    return d;
}

IntPoly CyclotomicProduct::expand() const {
    IntPoly p = poly_from({1});
    for (const auto& [order, mult] : factors)
        for (int k = 0; k < mult; ++k) p = poly_mul(p, cyclotomic(order));
    return p;
}

std::string CyclotomicProduct::str() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (const auto& [order, mult] : factors) {
        os << "Phi(" << order << ")";
        if (mult > 1) os << "^" << mult;
    }
    return os.str();
}

namespace {

// Qualifying divisors for the fifth factor: d | m such that either two of
// the four weights or two of the pair gcds at a common index are divisible
// by d.  For d > 2 the two conditions must exclude each other and determine
// a unique witness; violations indicate an engine bug.
bool divisor_qualifies(const CyclicData& c, long d) {
    int pair_hits = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (c.weights[i] % d == 0 && c.weights[j] % d == 0) ++pair_hits;
    int index_hits = 0;
    if (c.pair_gcds[0] % d == 0 && c.pair_gcds[1] % d == 0) ++index_hits;  // i = 1
    if (c.pair_gcds[0] % d == 0 && c.pair_gcds[2] % d == 0) ++index_hits;  // i = 2
    if (c.pair_gcds[1] % d == 0 && c.pair_gcds[2] % d == 0) ++index_hits;  // i = 3
    if (d > 2) {
        if (pair_hits > 0 && index_hits > 0)
            throw internal_error("divisor " + std::to_string(d) +
                                 " satisfies both exclusive conditions");
        if (pair_hits > 1 || index_hits > 1)
            throw internal_error("divisor " + std::to_string(d) +
                                 " has a non-unique witness");
    }
    return pair_hits > 0 || index_hits > 0;
}

void check_characteristic(long characteristic) {
    if (characteristic == 0) return;
    if (characteristic < 2) throw validation_error("characteristic must be 0 or a prime");
    for (long f = 2; f * f <= characteristic; ++f)
        if (characteristic % f == 0)
            throw validation_error("characteristic must be 0 or a prime");
}

}  // namespace

std::array<CyclotomicProduct, 6> closed_form_factors(const CyclicData& c, long characteristic) {
    check_characteristic(characteristic);
    std::array<CyclotomicProduct, 6> f;
    f[0].factors[1] = 1;
    f[1].factors[1] = 1;
    f[2].factors[1] = 1;
    f[3].factors[1] = 1;
    if (c.delta) f[3].factors[2] = 1;
    f[4].factors[1] = 1;
    for (long d = 2; d <= c.m; ++d)
        if (c.m % d == 0 && divisor_qualifies(c, d)) f[4].factors[d] += 1;
    for (long d = 1; d <= c.m; ++d)
        if (c.m % d == 0) f[5].factors[d] = 1;  // t^m - 1
    return f;
}

FieldPolyMatrix relation_matrix(const CyclicData& c, long characteristic) {
    check_characteristic(characteristic);
    IntPoly phi = poly_t_pow_minus_one(c.m);
    std::array<IntPoly, 4> phi_i;
    for (int i = 0; i < 4; ++i) phi_i[i] = poly_t_pow_minus_one(c.weights[i]);
    IntPoly phi_23 = poly_t_pow_minus_one(c.pair_gcds[2]);
    IntPoly phi_13 = poly_t_pow_minus_one(c.pair_gcds[1]);
    IntPoly phi_12 = poly_t_pow_minus_one(c.pair_gcds[0]);
    IntPoly zero;

    auto neg = [](const IntPoly& p) { return poly_sub({}, p); };
    // columns a1, a2, a3, c1, c2, c3
    std::array<std::array<IntPoly, 6>, 9> rows{{
        {zero, phi_i[3], neg(phi_i[2]), phi_i[3], zero, zero},
        {phi_i[3], zero, neg(phi_i[1]), zero, phi_i[3], zero},
        {neg(phi_i[2]), phi_i[1], zero, zero, zero, phi_i[1]},
        {phi, zero, zero, zero, zero, zero},
        {zero, phi, zero, zero, zero, zero},
        {zero, zero, phi, zero, zero, zero},
        {zero, zero, zero, phi_23, zero, zero},
        {zero, zero, zero, zero, phi_13, zero},
        {zero, zero, zero, zero, zero, phi_12},
    }};
    FieldPolyMatrix m(characteristic, 9, 6);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 6; ++j) m.set(i, j, rows[i][j]);
    return m;
}

CyclicVerification verify_cyclic(const FiniteQuotient& q) {
    return verify_cyclic(q, module_rank_torsion(alexander_module(q)));
}

CyclicVerification verify_cyclic(const FiniteQuotient& q,
                                 const AbelianGroupStructure& integer_path) {
    CyclicVerification v;
    v.data = cyclic_weights(q);
    const CyclicData& c = v.data;

    v.fields.push_back(0);
    for (long p = 2; p <= c.m; ++p)
        if (c.m % p == 0) {
            bool prime = true;
            for (long f = 2; f * f <= p; ++f)
                if (p % f == 0) prime = false;
            if (prime) v.fields.push_back(p);
        }

    auto closed = closed_form_factors(c, 0);
    std::vector<long> degree_sums;
    bool all_match = true;

    for (long field : v.fields) {
        FieldPolyMatrix m = relation_matrix(c, field);
        long dsum = 0;
        for (int k = 0; k < 6; ++k) {
            IntPoly expected = closed[k].expand();
            bool match;
            long deg;
            if (field == 0) {
                auto factors = m.invariant_factors_q();
                match = factors[k] == to_rational(expected);
                deg = static_cast<long>(factors[k].size()) - 1;
            } else {
                auto factors = m.invariant_factors_p();
                match = factors[k] == reduce_mod(expected, field);
                deg = static_cast<long>(factors[k].size()) - 1;
            }
            if (deg < 0) {
                std::ostringstream os;
                os << "field " << field << ": factor " << k + 1 << " vanished";
                v.mismatches.push_back(os.str());
                all_match = false;
                continue;
            }
            dsum += deg;
            if (!match) {
                std::ostringstream os;
                os << "field " << field << ": factor " << k + 1 << " != " << closed[k].str();
                v.mismatches.push_back(os.str());
                all_match = false;
            }
        }
        degree_sums.push_back(dsum);
    }
    v.factors_match = all_match;

    v.integer_torsion_empty = integer_path.torsion_factors.empty();
    if (!v.integer_torsion_empty)
        v.mismatches.push_back("integer path reports torsion " + integer_path.str());

    v.degree_sum = degree_sums.empty() ? 0 : degree_sums.front();
    v.degree_sums_match = true;
    for (long s : degree_sums)
        if (s != v.degree_sum) v.degree_sums_match = false;
    if (v.degree_sum != integer_path.free_rank) {
        v.degree_sums_match = false;
        std::ostringstream os;
        os << "degree sum " << v.degree_sum << " differs from integer rank "
           << integer_path.free_rank;
        v.mismatches.push_back(os.str());
    }
    return v;
}

}  // namespace delsarte
