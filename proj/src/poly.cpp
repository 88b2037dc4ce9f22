#include "delsarte/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace delsarte {

long poly_deg(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

void poly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_from(std::initializer_list<long> coeffs) {
    IntPoly p;
    for (long c : coeffs) p.emplace_back(c);
    poly_trim(p);
    return p;
}

IntPoly poly_t_pow_minus_one(long n) {
    if (n < 0) throw internal_error("poly_t_pow_minus_one: negative exponent");
    if (n == 0) return {};
    IntPoly p(n + 1);
    p[0] = -1;
    p[n] = 1;
    return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly p(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    }
    poly_trim(p);
    return p;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly p = a;
    if (p.size() < b.size()) p.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) p[i] -= b[i];
    poly_trim(p);
    return p;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw internal_error("poly_divexact: division by zero");
    IntPoly rem = a, q;
    long db = poly_deg(b);
    if (poly_deg(rem) >= db) q.resize(poly_deg(rem) - db + 1);
    while (poly_deg(rem) >= db) {
        long shift = poly_deg(rem) - db;
        Int c = rem.back() / b.back();
        if (c * b.back() != rem.back()) throw internal_error("poly_divexact: inexact division");
        q[shift] = c;
        for (long i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
        poly_trim(rem);
    }
    if (!rem.empty()) throw internal_error("poly_divexact: nonzero remainder");
    poly_trim(q);
    return q;
}

bool poly_monic(const IntPoly& p) { return !p.empty() && p.back() == 1; }

std::string poly_str(const IntPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = poly_deg(p); i >= 0; --i) {
        const Int& c = p[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// cache shared across threads; batch workers hit this concurrently
std::mutex cyclotomic_mutex;
std::map<long, IntPoly> cyclotomic_cache;

IntPoly cyclotomic_locked(long d) {
    auto it = cyclotomic_cache.find(d);
    if (it != cyclotomic_cache.end()) return it->second;
    if (d < 1) throw internal_error("cyclotomic: order must be positive");
    IntPoly p = poly_t_pow_minus_one(d);
    for (long e = 1; e < d; ++e)
        if (d % e == 0) p = poly_divexact(p, cyclotomic_locked(e));
    return cyclotomic_cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

IntPoly cyclotomic(long d) {
    std::lock_guard<std::mutex> lock(cyclotomic_mutex);
    return cyclotomic_locked(d);
}

RatPoly to_rational(const IntPoly& p) {
    RatPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rat(p[i]);
    return q;
}

ModPoly reduce_mod(const IntPoly& p, long prime) {
    ModPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Int r = p[i] % prime;
        if (r < 0) r += prime;
        q[i] = r.get_si();
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

namespace {

// Field policies for the generic polynomial Smith reduction.
struct RatField {
    using Elem = Rat;
    using Poly = RatPoly;
    static Elem zero() { return Rat(0); }
    static bool is_zero(const Elem& e) { return e == 0; }
    static Elem neg(const Elem& e) { return -e; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    Poly lift(const IntPoly& p) const { return to_rational(p); }
};

struct ModField {
    long p;
    using Elem = long;
    using Poly = ModPoly;
    static Elem zero() { return 0; }
    static bool is_zero(const Elem& e) { return e == 0; }
    Elem neg(const Elem& e) const { return e == 0 ? 0 : p - e; }
    Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
    Elem mul(const Elem& a, const Elem& b) const {
        return static_cast<long>((static_cast<unsigned long long>(a) * b) % p);
    }
    Elem inv(Elem a) const {
        long t = 0, nt = 1, r = p, nr = a % p;
        while (nr != 0) {
            long q = r / nr;
            t -= q * nt;
            std::swap(t, nt);
            r -= q * nr;
            std::swap(r, nr);
        }
        if (r != 1) throw internal_error("ModField: modulus not prime");
        return ((t % p) + p) % p;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Poly lift(const IntPoly& q) const { return reduce_mod(q, p); }
};

template <class F>
long fdeg(const typename F::Poly& p) {
    return static_cast<long>(p.size()) - 1;
}

template <class F>
void ftrim(const F&, typename F::Poly& p) {
    while (!p.empty() && F::is_zero(p.back())) p.pop_back();
}

template <class F>
typename F::Poly fsubmul(const F& f, const typename F::Poly& a, const typename F::Poly& q,
                         const typename F::Poly& b) {
    // a - q*b
    typename F::Poly r = a;
    if (!q.empty() && !b.empty()) {
        std::size_t need = q.size() + b.size() - 1;
        if (r.size() < need) r.resize(need, F::zero());
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (F::is_zero(q[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = f.add(r[i + j], f.neg(f.mul(q[i], b[j])));
        }
    }
    ftrim(f, r);
    return r;
}

template <class F>
std::pair<typename F::Poly, typename F::Poly> fdivmod(const F& f, const typename F::Poly& a,
                                                      const typename F::Poly& b) {
    typename F::Poly rem = a, q;
    long db = fdeg<F>(b);
    if (db < 0) throw internal_error("poly division by zero");
    if (fdeg<F>(rem) >= db) q.assign(fdeg<F>(rem) - db + 1, F::zero());
    while (fdeg<F>(rem) >= db) {
        long shift = fdeg<F>(rem) - db;
        typename F::Elem c = f.div(rem.back(), b.back());
        q[shift] = c;
        for (long i = 0; i <= db; ++i)
            rem[shift + i] = f.add(rem[shift + i], f.neg(f.mul(c, b[i])));
        ftrim(f, rem);
    }
    return {q, rem};
}

// Smith reduction of a matrix over k[t]; returns monic invariant factors.
template <class F>
std::vector<typename F::Poly> poly_smith(const F& f, std::vector<typename F::Poly> m,
                                         std::size_t rows, std::size_t cols) {
    auto at = [&](std::size_t i, std::size_t j) -> typename F::Poly& { return m[i * cols + j]; };
    const std::size_t n = std::min(rows, cols);

    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            // minimal-degree nonzero pivot
            std::size_t pi = rows, pj = cols;
            long best = -1;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    long d = fdeg<F>(at(i, j));
                    if (d < 0) continue;
                    if (best < 0 || d < best) {
                        best = d;
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0) goto done;
            if (pi != k)
                for (std::size_t j = 0; j < cols; ++j) std::swap(at(k, j), at(pi, j));
            if (pj != k)
                for (std::size_t i = 0; i < rows; ++i) std::swap(at(i, k), at(i, pj));

            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (fdeg<F>(at(i, k)) < 0) continue;
                auto [q, r] = fdivmod(f, at(i, k), at(k, k));
                for (std::size_t j = k; j < cols; ++j)
                    at(i, j) = fsubmul(f, at(i, j), q, at(k, j));
                if (!at(i, k).empty()) clean = false;  // remainder of lower degree
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (fdeg<F>(at(k, j)) < 0) continue;
                auto [q, r] = fdivmod(f, at(k, j), at(k, k));
                for (std::size_t i = k; i < rows; ++i)
                    at(i, j) = fsubmul(f, at(i, j), q, at(i, k));
                if (!at(k, j).empty()) clean = false;
            }
            if (!clean) continue;

            bool divides_all = true;
            for (std::size_t i = k + 1; i < rows && divides_all; ++i)
                for (std::size_t j = k + 1; j < cols; ++j) {
                    auto [q, r] = fdivmod(f, at(i, j), at(k, k));
                    if (!r.empty()) {
                        // fold the offending row into the pivot row and redo
                        typename F::Poly minus_one{f.neg(f.div(at(k, k).back(), at(k, k).back()))};
                        for (std::size_t jj = k; jj < cols; ++jj)
                            at(k, jj) = fsubmul(f, at(k, jj), minus_one, at(i, jj));
                        divides_all = false;
                        break;
                    }
                }
            if (divides_all) break;
        }
    }
done:;
    std::vector<typename F::Poly> factors(n);
    for (std::size_t i = 0; i < n; ++i) {
        typename F::Poly p = at(i, i);
        if (!p.empty() && !F::is_zero(p.back())) {
            typename F::Elem lead = p.back();
            for (auto& c : p) c = f.div(c, lead);
        }
        factors[i] = std::move(p);
    }
    return factors;
}

}  // namespace

FieldPolyMatrix::FieldPolyMatrix(long characteristic, std::size_t rows, std::size_t cols)
    : char_(characteristic), rows_(rows), cols_(cols), e_(rows * cols) {
    if (char_ < 0 || char_ == 1) throw validation_error("characteristic must be 0 or a prime");
}

void FieldPolyMatrix::set(std::size_t i, std::size_t j, IntPoly p) {
    poly_trim(p);
    e_[i * cols_ + j] = std::move(p);
}

const IntPoly& FieldPolyMatrix::entry_template(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
}

std::vector<RatPoly> FieldPolyMatrix::invariant_factors_q() const {
    if (char_ != 0) throw internal_error("invariant_factors_q on a positive characteristic matrix");
    RatField f;
    std::vector<RatPoly> m(rows_ * cols_);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = f.lift(e_[i]);
    return poly_smith(f, std::move(m), rows_, cols_);
}

std::vector<ModPoly> FieldPolyMatrix::invariant_factors_p() const {
    if (char_ == 0) throw internal_error("invariant_factors_p on a characteristic-0 matrix");
    ModField f{char_};
    std::vector<ModPoly> m(rows_ * cols_);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = f.lift(e_[i]);
    return poly_smith(f, std::move(m), rows_, cols_);
}

std::vector<long> FieldPolyMatrix::invariant_degrees() const {
    std::vector<long> deg;
    if (char_ == 0)
        for (const auto& p : invariant_factors_q()) deg.push_back(static_cast<long>(p.size()) - 1);
    else
        for (const auto& p : invariant_factors_p()) deg.push_back(static_cast<long>(p.size()) - 1);
    return deg;
}

}  // namespace delsarte
