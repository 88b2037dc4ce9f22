#include "delsarte/sparse_smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace delsarte {

std::vector<Int> SmithInvariants::nontrivial() const {
    std::vector<Int> out;
    for (const Int& d : chain)
        if (d > 1) out.push_back(d);
    return out;
}

AbelianGroupStructure SmithInvariants::cokernel(std::size_t ambient_cols) const {
    AbelianGroupStructure s;
    s.free_rank = static_cast<long>(ambient_cols) - static_cast<long>(rank());
    s.torsion_factors = nontrivial();
    return s;
}

namespace {

// Sparse unit-pivot elimination.  Rows are maps col -> value; a column
// occupancy index drives pivot selection.  Eliminating a +-1 pivot clears
// its column with row operations only; the pivot row and column then split
// off as a diagonal 1 and are removed.
class SparseEliminator {
  public:
    explicit SparseEliminator(const SparseIntMatrix& a) : rows_(a.rows), col_rows_(a.cols) {
        for (std::size_t i = 0; i < a.rows; ++i)
            for (const auto& [c, v] : a.entries[i]) {
                rows_[i][c] = v;
                col_rows_[c].insert(i);
            }
        for (std::size_t c = 0; c < a.cols; ++c)
            if (!col_rows_[c].empty()) colq_.insert({col_rows_[c].size(), c});
    }

    std::size_t run() {
        std::size_t units = 0;
        while (true) {
            auto [r, c] = find_unit_pivot();
            if (r == npos) break;
            eliminate(r, c);
            ++units;
        }
        return units;
    }

    // Remaining core as a dense matrix (active rows x active columns).
    IntMatrix core() const {
        std::vector<std::size_t> live_rows, live_cols;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (!rows_[i].empty()) live_rows.push_back(i);
        std::vector<std::size_t> colmap(col_rows_.size(), npos);
        for (std::size_t c = 0; c < col_rows_.size(); ++c)
            if (!col_rows_[c].empty()) {
                colmap[c] = live_cols.size();
                live_cols.push_back(c);
            }
        IntMatrix m(live_rows.size(), live_cols.size());
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (const auto& [c, v] : rows_[live_rows[i]]) m.at(i, colmap[c]) = v;
        return m;
    }

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::map<std::size_t, Int>> rows_;
    std::vector<std::set<std::size_t>> col_rows_;
    std::set<std::pair<std::size_t, std::size_t>> colq_;  // (occupancy, col)

    void colq_resize(std::size_t c, std::size_t before, std::size_t after) {
        if (before) colq_.erase({before, c});
        if (after) colq_.insert({after, c});
    }

    // Scans the sparsest columns for a +-1 entry, preferring the pivot with
    // the lowest Markowitz fill estimate (nnz_row-1)*(nnz_col-1).
    std::pair<std::size_t, std::size_t> find_unit_pivot() const {
        constexpr std::size_t scan_limit = 48;
        std::size_t best_r = npos, best_c = npos, best_cost = npos;
        std::size_t scanned = 0;
        for (const auto& [occ, c] : colq_) {
            for (std::size_t r : col_rows_[c]) {
                const Int& v = rows_[r].at(c);
                if (v != 1 && v != -1) continue;
                std::size_t cost = (rows_[r].size() - 1) * (occ - 1);
                if (cost < best_cost || best_cost == npos) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                }
                if (cost == 0) break;
            }
            ++scanned;
            if (best_cost == 0) break;
            if (best_cost != npos && scanned >= scan_limit) break;
        }
        return {best_r, best_c};
    }

    void eliminate(std::size_t r, std::size_t c) {
        if (rows_[r][c] == -1)
            for (auto& [cc, v] : rows_[r]) v = -v;

        std::vector<std::size_t> targets(col_rows_[c].begin(), col_rows_[c].end());
        for (std::size_t t : targets) {
            if (t == r) continue;
            Int k = rows_[t].at(c);
            for (const auto& [cc, v] : rows_[r]) {
                auto it = rows_[t].find(cc);
                if (it == rows_[t].end()) {
                    Int nv = -k * v;
                    if (nv != 0) {
                        rows_[t].emplace(cc, std::move(nv));
                        std::size_t occ = col_rows_[cc].size();
                        col_rows_[cc].insert(t);
                        colq_resize(cc, occ, occ + 1);
                    }
                } else {
                    it->second -= k * v;
                    if (it->second == 0) {
                        rows_[t].erase(it);
                        std::size_t occ = col_rows_[cc].size();
                        col_rows_[cc].erase(t);
                        colq_resize(cc, occ, occ - 1);
                    }
                }
            }
        }
        // retire the pivot row and column
        for (const auto& [cc, v] : rows_[r]) {
            std::size_t occ = col_rows_[cc].size();
            col_rows_[cc].erase(r);
            colq_resize(cc, occ, occ - 1);
        }
        rows_[r].clear();
    }
};

bool find_min_pivot(const IntMatrix& a, std::size_t from, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = from; i < a.rows(); ++i)
        for (std::size_t j = from; j < a.cols(); ++j) {
            const Int& v = a.at(i, j);
            if (v == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

std::vector<Int> dense_smith_diagonal(IntMatrix a, bool parallel) {
    const std::size_t n = std::min(a.rows(), a.cols());
    const long rows = static_cast<long>(a.rows());
    const long cols = static_cast<long>(a.cols());
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        // re-select the submatrix minimum before every pass; this contains
        // the coefficient growth of the reduction
        std::size_t pi, pj;
        if (!find_min_pivot(a, k, pi, pj)) break;
        ++rank;
        for (;;) {
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);
            if (a.at(k, k) < 0) a.negate_row(k);

            bool dirty = false;
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : dirty) \
    if (parallel && rows - (long)k > 32)
            for (long i = (long)k + 1; i < rows; ++i) {
                if (a.at(i, k) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, k).get_mpz_t());
                a.add_row(i, k, -q);
                dirty = dirty || a.at(i, k) != 0;
            }
#pragma omp parallel for schedule(dynamic, 8) reduction(|| : dirty) \
    if (parallel && cols - (long)k > 32)
            for (long j = (long)k + 1; j < cols; ++j) {
                if (a.at(k, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(), a.at(k, k).get_mpz_t());
                a.add_col(j, k, -q);
                dirty = dirty || a.at(k, j) != 0;
            }
            if (!dirty) break;
            if (!find_min_pivot(a, k, pi, pj))
                throw internal_error("pivot vanished during reduction");
        }
    }
    std::vector<Int> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(abs(a.at(i, i)));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            Int g = gcd(d[i], d[j]);
            if (g == d[i]) continue;
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    return d;
}

SmithInvariants smith_invariants(const SparseIntMatrix& a) {
    SparseEliminator elim(a);
    std::size_t units = elim.run();
    std::vector<Int> core_diag = dense_smith_diagonal(elim.core(), true);

    SmithInvariants inv;
    inv.chain.assign(units, Int(1));
    for (Int& d : core_diag)
        if (d != 0) inv.chain.push_back(std::move(d));
    return inv;
}

SmithInvariants smith_invariants(const IntMatrix& a) {
    return smith_invariants(SparseIntMatrix::from_dense(a));
}

}  // namespace delsarte
