#include "delsarte/smith.hpp"

#include <sstream>

namespace delsarte {

Int AbelianGroupStructure::order() const {
    if (free_rank != 0) throw internal_error("order of an infinite group");
    Int o = 1;
    for (const Int& f : torsion_factors) o *= f;
    return o;
}

Int AbelianGroupStructure::exponent() const {
    if (free_rank != 0) throw internal_error("exponent of an infinite group");
    return torsion_factors.empty() ? Int(1) : torsion_factors.back();
}

std::string AbelianGroupStructure::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& f : torsion_factors) {
        if (!first) os << " + ";
        os << "Z/" << f.get_str();
        first = false;
    }
    return os.str();
}

std::vector<Int> SmithForm::diagonal() const {
    std::vector<Int> d;
    std::size_t n = std::min(D.rows(), D.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

AbelianGroupStructure SmithForm::cokernel_structure(std::size_t ambient_cols) const {
    return cokernel_of_diagonal(diagonal(), ambient_cols);
}

AbelianGroupStructure cokernel_of_diagonal(const std::vector<Int>& diag, std::size_t cols) {
    AbelianGroupStructure s;
    std::size_t nonzero = 0;
    for (const Int& d : diag) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) s.torsion_factors.push_back(d);
    }
    s.free_rank = static_cast<long>(cols) - static_cast<long>(nonzero);
    return s;
}

namespace {

// Locates the nonzero entry of minimal absolute value at or below/right of
// (from,from); ties resolved by lowest row, then column.  Re-selecting the
// global minimum before every reduction pass is what keeps the coefficient
// growth of the elimination in check.
bool find_pivot(const IntMatrix& a, std::size_t from, std::size_t& pi, std::size_t& pj) {
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

struct Transformed {
    IntMatrix a, u, v;

    void swap_rows(std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        u.swap_rows(i, j);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        v.swap_cols(i, j);
    }
    void negate_row(std::size_t i) {
        a.negate_row(i);
        u.negate_row(i);
    }
    void add_row(std::size_t i, std::size_t k, const Int& c) {
        a.add_row(i, k, c);
        u.add_row(i, k, c);
    }
    void add_col(std::size_t j, std::size_t k, const Int& c) {
        a.add_col(j, k, c);
        v.add_col(j, k, c);
    }
    // rows (i1, i2) <- (w00*i1 + w01*i2, w10*i1 + w11*i2), det(w) = +-1
    void mix_rows(std::size_t i1, std::size_t i2, const Int& w00, const Int& w01, const Int& w10,
                  const Int& w11) {
        auto apply = [&](IntMatrix& m) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Int x = m.at(i1, j), y = m.at(i2, j);
                m.at(i1, j) = w00 * x + w01 * y;
                m.at(i2, j) = w10 * x + w11 * y;
            }
        };
        apply(a);
        apply(u);
    }
    // cols (j1, j2) <- (w00*j1 + w10*j2, w01*j1 + w11*j2), det(w) = +-1
    void mix_cols(std::size_t j1, std::size_t j2, const Int& w00, const Int& w01, const Int& w10,
                  const Int& w11) {
        auto apply = [&](IntMatrix& m) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Int x = m.at(i, j1), y = m.at(i, j2);
                m.at(i, j1) = w00 * x + w10 * y;
                m.at(i, j2) = w01 * x + w11 * y;
            }
        };
        apply(a);
        apply(v);
    }
};

// One diagonalisation step: bring the submatrix minimum to (k,k) and clear
// its row and column, re-selecting the minimum after every pass.
template <class Ops>
bool diagonalize_position(Ops& t, IntMatrix& a, std::size_t k) {
    for (;;) {
        std::size_t pi, pj;
        if (!find_pivot(a, k, pi, pj)) return false;
        t.swap_rows(k, pi);
        t.swap_cols(k, pj);
        if (a.at(k, k) < 0) t.negate_row(k);

        bool dirty = false;
        for (std::size_t i = k + 1; i < a.rows(); ++i) {
            if (a.at(i, k) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, k).get_mpz_t(), a.at(k, k).get_mpz_t());
            t.add_row(i, k, -q);
            dirty |= a.at(i, k) != 0;
        }
        for (std::size_t j = k + 1; j < a.cols(); ++j) {
            if (a.at(k, j) == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(k, j).get_mpz_t(), a.at(k, k).get_mpz_t());
            t.add_col(j, k, -q);
            dirty |= a.at(k, j) != 0;
        }
        if (!dirty) return true;
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    Transformed t{input, IntMatrix::identity(input.rows()), IntMatrix::identity(input.cols())};
    const std::size_t n = std::min(input.rows(), input.cols());

    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!diagonalize_position(t, t.a, k)) break;
        ++rank;
    }

    // enforce the divisibility chain by 2x2 Bezout folds on the diagonal:
    // diag(a, b) -> diag(gcd, lcm)
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            const Int a = t.a.at(i, i), b = t.a.at(j, j);
            if (divides(a, b)) continue;
            Int g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int ag = a / g, bg = b / g;
            t.mix_rows(i, j, p, q, -bg, ag);
            t.mix_cols(i, j, Int(1), -q * bg, Int(1), p * ag);
        }

    for (std::size_t i = 0; i < n; ++i)
        if (t.a.at(i, i) < 0) t.negate_row(i);

    return SmithForm{std::move(t.u), std::move(t.a), std::move(t.v)};
}

std::vector<Int> smith_diagonal_reference(IntMatrix a) {
    struct PlainOps {
        IntMatrix& m;
        void swap_rows(std::size_t i, std::size_t j) { m.swap_rows(i, j); }
        void swap_cols(std::size_t i, std::size_t j) { m.swap_cols(i, j); }
        void negate_row(std::size_t i) { m.negate_row(i); }
        void add_row(std::size_t i, std::size_t k, const Int& c) { m.add_row(i, k, c); }
        void add_col(std::size_t j, std::size_t k, const Int& c) { m.add_col(j, k, c); }
    } ops{a};

    const std::size_t n = std::min(a.rows(), a.cols());
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!diagonalize_position(ops, a, k)) break;
        ++rank;
    }
    std::vector<Int> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(abs(a.at(i, i)));
    // numeric chain normalisation; transforms are not tracked here
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            Int g = gcd(d[i], d[j]);
            if (g == d[i]) continue;
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    return d;
}

}  // namespace delsarte
