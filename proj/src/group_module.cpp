#include "delsarte/group_module.hpp"

#include "delsarte/lattice.hpp"
#include "delsarte/sparse_smith.hpp"

namespace delsarte {

GroupRing ring_one(const FiniteQuotient& q) {
    return {{q.index_of(GroupElement{0, 0, 0}), Int(1)}};
}

GroupRing ring_generator(const FiniteQuotient& q, int i) {
    return {{q.index_of(q.generator_image(i)), Int(1)}};
}

GroupRing ring_generator_inverse(const FiniteQuotient& q, int i) {
    return {{q.index_of(q.neg(q.generator_image(i))), Int(1)}};
}

GroupRing ring_add(const GroupRing& a, const GroupRing& b) {
    GroupRing r = a;
    for (const auto& [g, c] : b) {
        Int& v = r[g];
        v += c;
        if (v == 0) r.erase(g);
    }
    return r;
}

GroupRing ring_sub(const GroupRing& a, const GroupRing& b) {
    GroupRing r = a;
    for (const auto& [g, c] : b) {
        Int& v = r[g];
        v -= c;
        if (v == 0) r.erase(g);
    }
    return r;
}

GroupRing ring_mul(const FiniteQuotient& q, const GroupRing& a, const GroupRing& b) {
    GroupRing r;
    for (const auto& [ga, ca] : a)
        for (const auto& [gb, cb] : b) {
            long g = q.index_of(q.add(q.element_at(ga), q.element_at(gb)));
            Int& v = r[g];
            v += ca * cb;
            if (v == 0) r.erase(g);
        }
    return r;
}

GroupRing ring_tminus1(const FiniteQuotient& q, int i) {
    return ring_sub(ring_generator(q, i), ring_one(q));
}

SparseIntMatrix ModulePresentation::expansion() const {
    const long n = quotient.element_count();
    SparseIntMatrix m(expansion_rows(), expansion_cols());
    for (std::size_t r = 0; r < relations.size(); ++r)
        for (long h = 0; h < n; ++h) {
            std::size_t row = r * n + h;
            GroupElement he = quotient.element_at(h);
            for (std::size_t g = 0; g < generators(); ++g)
                for (const auto& [idx, coeff] : relations[r][g]) {
                    long col_elt = quotient.index_of(quotient.add(he, quotient.element_at(idx)));
                    m.add(row, g * n + col_elt, coeff);
                }
        }
    m.finalize();
    return m;
}

namespace {

GroupRing pair_minus1(const FiniteQuotient& q, int i, int j) {
    // t_i t_j - 1
    return ring_sub(ring_mul(q, ring_generator(q, i), ring_generator(q, j)), ring_one(q));
}

}  // namespace

ModulePresentation alexander_module(const FiniteQuotient& q) {
    ModulePresentation p;
    p.quotient = q;
    p.generator_names = {"a1", "a2", "a3", "c1", "c2", "c3"};
    auto zero = GroupRing{};
    auto rel = [&](std::initializer_list<std::pair<int, GroupRing>> terms) {
        std::vector<GroupRing> row(6);
        for (const auto& [gen, r] : terms) row[gen] = r;
        return row;
    };
    // indices: a1,a2,a3 = 0..2, c1,c2,c3 = 3..5
    p.relations.push_back(rel({{3, pair_minus1(q, 2, 3)}}));
    p.relations.push_back(rel({{4, pair_minus1(q, 1, 3)}}));
    p.relations.push_back(rel({{5, pair_minus1(q, 1, 2)}}));
    // (t3-1)c1 + (t3-1)a2 - (t2-1)a3 = 0
    p.relations.push_back(rel({{3, ring_tminus1(q, 3)},
                               {1, ring_tminus1(q, 3)},
                               {2, ring_sub(zero, ring_tminus1(q, 2))}}));
    // (t3-1)c2 + (t3-1)a1 - (t1-1)a3 = 0
    p.relations.push_back(rel({{4, ring_tminus1(q, 3)},
                               {0, ring_tminus1(q, 3)},
                               {2, ring_sub(zero, ring_tminus1(q, 1))}}));
    // (t1-1)c3 + (t1-1)a2 - (t2-1)a1 = 0
    p.relations.push_back(rel({{5, ring_tminus1(q, 1)},
                               {1, ring_tminus1(q, 1)},
                               {0, ring_sub(zero, ring_tminus1(q, 2))}}));
    return p;
}

ModulePresentation line_module_simplified(const FiniteQuotient& q) {
    ModulePresentation p;
    p.quotient = q;
    p.generator_names = {"c1", "c2", "c3"};
    auto rel = [&](std::initializer_list<std::pair<int, GroupRing>> terms) {
        std::vector<GroupRing> row(3);
        for (const auto& [gen, r] : terms) row[gen] = r;
        return row;
    };
    p.relations.push_back(rel({{0, pair_minus1(q, 2, 3)}}));
    p.relations.push_back(rel({{1, pair_minus1(q, 1, 3)}}));
    p.relations.push_back(rel({{2, pair_minus1(q, 1, 2)}}));
    // (t1-1)(t3-1)c1 = (t2-1)(t3-1)c2 + (t3-1)(t1-1)c3
    GroupRing c1pp = ring_mul(q, ring_tminus1(q, 1), ring_tminus1(q, 3));
    GroupRing c2pp = ring_mul(q, ring_tminus1(q, 2), ring_tminus1(q, 3));
    GroupRing c3pp = ring_mul(q, ring_tminus1(q, 3), ring_tminus1(q, 1));
    p.relations.push_back(rel({{0, c1pp},
                               {1, ring_sub(GroupRing{}, c2pp)},
                               {2, ring_sub(GroupRing{}, c3pp)}}));
    return p;
}

AbelianGroupStructure module_rank_torsion(const ModulePresentation& p) {
    return smith_invariants(p.expansion()).cokernel(p.expansion_cols());
}

namespace {

// base filtration elements as (generator, ring element) pairs
std::vector<std::pair<int, GroupRing>> filtration_gens(const FiniteQuotient& q,
                                                       LineModuleKind kind, int level) {
    const int c1 = kind == LineModuleKind::embedded ? 3 : 0;
    const int c2 = c1 + 1, c3 = c1 + 2;
    GroupRing t1m1 = ring_tminus1(q, 1);
    GroupRing t2m1 = ring_tminus1(q, 2);
    GroupRing t3m1 = ring_tminus1(q, 3);
    switch (level) {
        case 0:
            return {};
        case 1: {
            GroupRing c2pp = ring_mul(q, t2m1, t3m1);
            GroupRing u = ring_mul(
                q, ring_sub(ring_generator(q, 2), ring_generator_inverse(q, 3)), c2pp);
            return {{c2, u}};
        }
        case 2:
            return {{c1, ring_mul(q, t1m1, t3m1)},
                    {c2, ring_mul(q, t2m1, t3m1)},
                    {c3, ring_mul(q, t3m1, t1m1)}};
        case 3:
            return {{c1, t3m1}, {c2, t3m1}, {c3, t1m1}};
        case 4:
            return {{c1, ring_one(q)}, {c2, ring_one(q)}, {c3, ring_one(q)}};
    }
    throw validation_error("filtration level must be between 0 and 4");
}

// all G-translates of the base elements, as rows in the expansion space
SparseIntMatrix orbit_rows(const FiniteQuotient& q, std::size_t cols,
                           const std::vector<std::pair<int, GroupRing>>& gens) {
    const long n = q.element_count();
    SparseIntMatrix m(gens.size() * n, cols);
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const auto& [gen, ring] = gens[k];
        for (long h = 0; h < n; ++h) {
            GroupElement he = q.element_at(h);
            for (const auto& [idx, coeff] : ring)
                m.add(k * n + h, gen * n + q.index_of(q.add(he, q.element_at(idx))), coeff);
        }
    }
    m.finalize();
    return m;
}

AbelianGroupStructure level_quotient(const FiniteQuotient& q, LineModuleKind kind, int upper,
                                     int lower) {
    ModulePresentation p =
        kind == LineModuleKind::embedded ? alexander_module(q) : line_module_simplified(q);
    SparseIntMatrix relations = p.expansion();
    SparseIntMatrix up = orbit_rows(q, p.expansion_cols(), filtration_gens(q, kind, upper));
    SparseIntMatrix low = orbit_rows(q, p.expansion_cols(), filtration_gens(q, kind, lower));
    return abelian_subquotient_sparse(relations, up, low);
}

}  // namespace

AbelianGroupStructure filtration_subquotient(const FiniteQuotient& q, LineModuleKind kind,
                                             int level) {
    if (level < 1 || level > 4) throw validation_error("filtration level must be 1..4");
    return level_quotient(q, kind, level, level - 1);
}

AbelianGroupStructure filtration_level(const FiniteQuotient& q, LineModuleKind kind, int level) {
    if (level < 0 || level > 4) throw validation_error("filtration level must be 0..4");
    return level_quotient(q, kind, level, 0);
}

}  // namespace delsarte
