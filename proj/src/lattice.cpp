#include "delsarte/lattice.hpp"

#include <map>
#include <set>
#include <sstream>

namespace delsarte {

IntMatrix lattice_basis(const IntMatrix& gens) {
    return hermite_normal_form(gens).basis();
}

IntMatrix lattice_intersection(const IntMatrix& b1, const IntMatrix& b2) {
    if (b1.cols() != b2.cols()) throw internal_error("lattice_intersection: ambient mismatch");
    HermiteForm h = hermite_normal_form(b1.stacked(b2));
    IntMatrix kernel = h.left_kernel();  // rows (a | b) with a*b1 + b*b2 = 0
    IntMatrix gens(kernel.rows(), b1.cols());
    for (std::size_t i = 0; i < kernel.rows(); ++i)
        for (std::size_t k = 0; k < b1.rows(); ++k)
            for (std::size_t j = 0; j < b1.cols(); ++j)
                gens.at(i, j) += kernel.at(i, k) * b1.at(k, j);
    return lattice_basis(gens);
}

IntMatrix lattice_sum(const IntMatrix& b1, const IntMatrix& b2) {
    return lattice_basis(b1.stacked(b2));
}

std::optional<std::vector<Int>> solve_in_lattice(const IntMatrix& b, const std::vector<Int>& v) {
    HermiteForm h = hermite_normal_form(b);
    auto y = solve_in_echelon(h, v);
    if (!y) return std::nullopt;
    std::vector<Int> x(b.rows());
    for (std::size_t i = 0; i < h.rank(); ++i)
        if ((*y)[i] != 0)
            for (std::size_t j = 0; j < b.rows(); ++j) x[j] += (*y)[i] * h.U.at(i, j);
    return x;
}

Int order_in_quotient(const HermiteForm& modulus, const std::vector<Int>& x) {
    if (modulus.rank() != modulus.H.cols())
        throw internal_error("order_in_quotient: modulus lattice is not finite index");
    std::vector<Rat> rem(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) rem[j] = Rat(x[j]);
    Int order = 1;
    for (std::size_t i = 0; i < modulus.rank(); ++i) {
        std::size_t c = modulus.pivot_cols[i];
        if (rem[c] == 0) continue;
        Rat q = rem[c] / Rat(modulus.H.at(i, c));
        for (std::size_t j = 0; j < x.size(); ++j) rem[j] -= q * Rat(modulus.H.at(i, j));
        order = lcm(order, Int(q.get_den()));
    }
    for (const Rat& r : rem)
        if (r != 0) throw internal_error("order_in_quotient: residual after full-rank solve");
    return order;
}

Int quotient_order(const IntMatrix& gens) {
    auto inv = smith_invariants(SparseIntMatrix::from_dense(gens));
    if (inv.rank() != gens.cols()) throw internal_error("quotient_order: not finite index");
    Int o = 1;
    for (const Int& d : inv.chain) o *= d;
    return o;
}

namespace {

std::vector<Int> sparse_to_dense_row(const std::vector<std::pair<std::size_t, Int>>& row,
                                     std::size_t n) {
    std::vector<Int> v(n);
    for (const auto& [c, val] : row) v[c] = val;
    return v;
}

}  // namespace

SparseEchelon::SparseEchelon(const SparseIntMatrix& a) : cols_(a.cols) {
    // active working set, same layout as the Smith eliminator
    std::vector<std::map<std::size_t, Int>> work(a.rows);
    std::vector<std::set<std::size_t>> col_rows(a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (const auto& [c, v] : a.entries[i]) {
            work[i][c] = v;
            col_rows[c].insert(i);
        }
    std::set<std::pair<std::size_t, std::size_t>> colq;
    for (std::size_t c = 0; c < a.cols; ++c)
        if (!col_rows[c].empty()) colq.insert({col_rows[c].size(), c});

    std::set<std::size_t> frozen;
    auto colq_resize = [&](std::size_t c, std::size_t before, std::size_t after) {
        if (before) colq.erase({before, c});
        if (after) colq.insert({after, c});
    };

    // unit-pivot phase, row operations only; pivot rows freeze in order
    for (;;) {
        std::size_t best_r = a.rows, best_c = a.cols, best_cost = static_cast<std::size_t>(-1);
        std::size_t scanned = 0;
        for (const auto& [occ, c] : colq) {
            for (std::size_t r : col_rows[c]) {
                if (frozen.count(r)) continue;
                const Int& v = work[r].at(c);
                if (v != 1 && v != -1) continue;
                std::size_t cost = (work[r].size() - 1) * (occ - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                }
                if (cost == 0) break;
            }
            ++scanned;
            if (best_cost == 0 || (best_r != a.rows && scanned >= 48)) break;
        }
        if (best_r == a.rows) break;

        std::size_t r = best_r, c = best_c;
        if (work[r][c] == -1)
            for (auto& [cc, v] : work[r]) v = -v;
        std::vector<std::size_t> targets;
        for (std::size_t t : col_rows[c])
            if (t != r && !frozen.count(t)) targets.push_back(t);
        for (std::size_t t : targets) {
            Int k = work[t].at(c);
            for (const auto& [cc, v] : work[r]) {
                auto it = work[t].find(cc);
                if (it == work[t].end()) {
                    work[t].emplace(cc, -k * v);
                    std::size_t occ = col_rows[cc].size();
                    col_rows[cc].insert(t);
                    colq_resize(cc, occ, occ + 1);
                } else {
                    it->second -= k * v;
                    if (it->second == 0) {
                        work[t].erase(it);
                        std::size_t occ = col_rows[cc].size();
                        col_rows[cc].erase(t);
                        colq_resize(cc, occ, occ - 1);
                    }
                }
            }
        }
        frozen.insert(r);
        EchRow er;
        er.pivot_col = c;
        er.entries.assign(work[r].begin(), work[r].end());
        rows_.push_back(std::move(er));
        // a frozen row no longer participates in pivot search; drop it from
        // the occupancy index so later scans skip it
        for (const auto& [cc, v] : work[r]) {
            std::size_t occ = col_rows[cc].size();
            col_rows[cc].erase(r);
            colq_resize(cc, occ, occ - 1);
        }
        work[r].clear();
    }

    // leftover core: dense Hermite sweep over the live columns
    std::vector<std::size_t> live_rows;
    for (std::size_t i = 0; i < a.rows; ++i)
        if (!work[i].empty()) live_rows.push_back(i);
    if (!live_rows.empty()) {
        std::vector<std::size_t> live_cols;
        std::vector<std::size_t> colmap(a.cols, 0);
        std::set<std::size_t> used;
        for (std::size_t i : live_rows)
            for (const auto& [c, v] : work[i]) used.insert(c);
        for (std::size_t c : used) {
            colmap[c] = live_cols.size();
            live_cols.push_back(c);
        }
        IntMatrix core(live_rows.size(), live_cols.size());
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : work[live_rows[i]]) core.at(i, colmap[c]) = v;
        HermiteForm h = hermite_normal_form(core);
        for (std::size_t i = 0; i < h.rank(); ++i) {
            EchRow er;
            er.pivot_col = live_cols[h.pivot_cols[i]];
            for (std::size_t j = 0; j < h.H.cols(); ++j)
                if (h.H.at(i, j) != 0) er.entries.emplace_back(live_cols[j], h.H.at(i, j));
            rows_.push_back(std::move(er));
        }
    }
}

std::optional<std::vector<Int>> SparseEchelon::solve(std::vector<Int> v) const {
    if (v.size() != cols_) throw internal_error("SparseEchelon::solve: dimension mismatch");
    std::vector<Int> x(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const EchRow& r = rows_[i];
        const Int& piv = [&]() -> const Int& {
            for (const auto& [c, val] : r.entries)
                if (c == r.pivot_col) return val;
            throw internal_error("echelon row lost its pivot");
        }();
        Int& target = v[r.pivot_col];
        if (target == 0) continue;
        if (!divides(piv, target)) return std::nullopt;
        Int q = target / piv;
        for (const auto& [c, val] : r.entries) v[c] -= q * val;
        x[i] = std::move(q);
    }
    for (const Int& rv : v)
        if (rv != 0) return std::nullopt;
    return x;
}

AbelianGroupStructure abelian_subquotient_sparse(const SparseIntMatrix& relations,
                                                 const SparseIntMatrix& upper,
                                                 const SparseIntMatrix& lower) {
    const std::size_t n = relations.cols;
    if (upper.cols != n || lower.cols != n)
        throw internal_error("abelian_subquotient: ambient mismatch");

    SparseIntMatrix span(upper.rows + relations.rows, n);
    span.entries.clear();
    span.entries.insert(span.entries.end(), upper.entries.begin(), upper.entries.end());
    span.entries.insert(span.entries.end(), relations.entries.begin(), relations.entries.end());
    SparseEchelon basis(span);

    const std::size_t r = basis.rank();
    SparseIntMatrix coeffs(lower.rows + relations.rows, r);
    auto express = [&](const std::vector<std::pair<std::size_t, Int>>& row, std::size_t out,
                       const char* kind, std::size_t index) {
        auto x = basis.solve(sparse_to_dense_row(row, n));
        if (!x) {
            std::ostringstream os;
            os << "abelian_subquotient: " << kind << " generator " << index
               << " lies outside the upper subgroup";
            throw validation_error(os.str());
        }
        for (std::size_t j = 0; j < r; ++j)
            if ((*x)[j] != 0) coeffs.entries[out].emplace_back(j, std::move((*x)[j]));
    };
    for (std::size_t i = 0; i < lower.rows; ++i) express(lower.entries[i], i, "lower", i);
    for (std::size_t i = 0; i < relations.rows; ++i)
        express(relations.entries[i], lower.rows + i, "relation", i);

    return smith_invariants(coeffs).cokernel(r);
}

AbelianGroupStructure abelian_subquotient(std::size_t ambient_rank, const IntMatrix& relations,
                                          const IntMatrix& upper, const IntMatrix& lower) {
    auto widen = [&](const IntMatrix& m) {
        SparseIntMatrix s(m.rows(), ambient_rank);
        if (m.rows() && m.cols() != ambient_rank)
            throw validation_error("abelian_subquotient: generator width differs from ambient rank");
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (m.at(i, j) != 0) s.entries[i].emplace_back(j, m.at(i, j));
        return s;
    };
    return abelian_subquotient_sparse(widen(relations), widen(upper), widen(lower));
}

}  // namespace delsarte
