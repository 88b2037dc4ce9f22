#include "delsarte/torsion_bound.hpp"

#include <sstream>

#include "delsarte/lattice.hpp"

namespace delsarte {

Int TorsionBoundParams::layer_order_product() const {
    Int prod = 1;
    for (const auto& layer : layers())
        for (long f : layer) prod *= f;
    return prod;
}

int TorsionBoundParams::nontrivial_factor_count() const {
    int count = 0;
    for (const auto& layer : layers())
        for (long f : layer) count += f > 1;
    return count;
}

namespace {

long checked_ratio(long num, long den, const char* what) {
    if (den == 0 || num % den != 0) {
        std::ostringstream os;
        os << "torsion bound: " << what << " = " << num << "/" << den << " is not an integer";
        throw internal_error(os.str());
    }
    return num / den;
}

}  // namespace

TorsionBoundParams torsion_bound(const FiniteQuotient& q, const IndexPermutation& perm) {
    TorsionBoundParams b;
    b.permutation = perm;

    // generator vectors in the permuted labelling
    std::array<std::vector<Int>, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = FiniteQuotient::generator_vector(perm[i]);

    auto pair_order = [&](int i, int j) {
        IntMatrix gens(2, 3);
        gens.set_row(0, w[i]);
        gens.set_row(1, w[j]);
        return to_long(quotient_order(q.kernel().stacked(gens)), "pair order");
    };
    auto part_order = [&](int i) {
        int j = i == 1 ? 2 : 1;
        int k = i == 3 ? 2 : 3;
        IntMatrix gens(2, 3);
        for (int c = 0; c < 3; ++c) {
            gens.at(0, c) = w[i][c] + w[j][c];
            gens.at(1, c) = w[i][c] + w[k][c];
        }
        return to_long(quotient_order(q.kernel().stacked(gens)), "partition order");
    };

    for (int i = 1; i <= 3; ++i) b.m[i - 1] = q.element_order(q.encode(w[i]));

    for (int i = 1; i <= 3; ++i) {
        int j = i == 1 ? 2 : 1;
        int k = i == 3 ? 2 : 3;
        IntMatrix mod(1, 3);
        for (int c = 0; c < 3; ++c) mod.at(0, c) = w[0][c] + w[i][c];
        HermiteForm h = hermite_normal_form(q.kernel().stacked(mod));
        b.n[i - 1] = to_long(order_in_quotient(h, w[i]), "n_i");
        long nj = to_long(order_in_quotient(h, w[j]), "n_jk");
        long nk = to_long(order_in_quotient(h, w[k]), "n_jk");
        if (nj != nk) throw internal_error("torsion bound: n_jk differs between j and k");
        b.n_pair[i - 1] = nj;

        long g_jk = pair_order(j, k);
        long g_0i = pair_order(0, i);
        long nbar_a = checked_ratio(b.n[i - 1], g_jk, "nbar (n_i route)");
        long nbar_b = checked_ratio(b.n_pair[i - 1], g_0i, "nbar (n_jk route)");
        if (nbar_a != nbar_b) throw internal_error("torsion bound: nbar routes disagree");
        b.nbar[i - 1] = nbar_a;
    }

    for (int i = 2; i <= 3; ++i) {
        long pi = gcd_l(b.n[i - 1], b.n_pair[i - 1]);
        b.p[i - 2] = pi;
        int l = 5 - i;
        b.pbar[i - 2] = checked_ratio(pi, part_order(l), "pbar");
    }
    long g1 = part_order(1);
    b.qbar = checked_ratio(gcd_l(b.p[0], b.p[1]), g1, "qbar");

    int delta = subgroup_orders(q).delta();
    if (delta == 1) {
        // annihilators of the level-1 generator come from the orders of the
        // two generators acting on each c'' piece: lcm(n_i, n_jk)
        long s2 = lcm_l(b.n[1], b.n_pair[1]);
        long s3 = lcm_l(b.n[2], b.n_pair[2]);
        long s = gcd_l(s2, s3);
        b.sbar = checked_ratio(s, g1, "sbar");
        if (b.sbar % b.qbar != 0) throw internal_error("torsion bound: qbar does not divide sbar");
    } else {
        b.sbar = 1;
    }
    return b;
}

std::vector<TorsionBoundParams> all_torsion_bounds(const FiniteQuotient& q) {
    std::vector<TorsionBoundParams> out;
    out.reserve(24);
    for (const auto& perm : all_index_permutations()) out.push_back(torsion_bound(q, perm));
    return out;
}

TorsionBoundParams best_torsion_bound(const FiniteQuotient& q) {
    const TorsionBoundParams* best = nullptr;
    std::vector<TorsionBoundParams> bounds = all_torsion_bounds(q);
    for (const auto& b : bounds) {
        if (!best) {
            best = &b;
            continue;
        }
        Int pb = b.layer_order_product(), pbest = best->layer_order_product();
        if (pb < pbest ||
            (pb == pbest && b.nontrivial_factor_count() < best->nontrivial_factor_count()))
            best = &b;
        // ties keep the earlier (lexicographically smaller) permutation
    }
    if (!best) throw internal_error("no permutations evaluated");
    return *best;
}

}  // namespace delsarte
