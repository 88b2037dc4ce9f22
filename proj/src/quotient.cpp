#include "delsarte/quotient.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "delsarte/lattice.hpp"

namespace delsarte {

std::vector<Int> FiniteQuotient::generator_vector(int i) {
    switch (i) {
        case 0: return {Int(-1), Int(-1), Int(-1)};
        case 1: return {Int(1), Int(0), Int(0)};
        case 2: return {Int(0), Int(1), Int(0)};
        case 3: return {Int(0), Int(0), Int(1)};
    }
    throw internal_error("generator index out of range");
}

GroupElement FiniteQuotient::encode(const std::vector<Int>& x) const {
    GroupElement e{};
    for (int j = 0; j < 3; ++j) {
        Int v = 0;
        for (int i = 0; i < 3; ++i) v += x[i] * encode_v_.at(i, j);
        Int r = v % diag_[j];
        if (r < 0) r += diag_[j];
        e[j] = to_long(r, "group coordinate");
    }
    return e;
}

long FiniteQuotient::element_order(const GroupElement& a) const {
    long o = 1;
    for (int j = 0; j < 3; ++j) {
        long dj = d_[j];
        long oj = a[j] == 0 ? 1 : dj / gcd_l(dj, a[j]);
        o = lcm_l(o, oj);
    }
    return o;
}

FiniteQuotient FiniteQuotient::from_kernel_matrix(const IntMatrix& gamma) {
    if (gamma.rows() != 3 || gamma.cols() != 3)
        throw validation_error("kernel matrix must be 3x3");
    if (gamma.det() == 0) throw validation_error("kernel not finite index");

    FiniteQuotient q;
    q.gamma_ = gamma;
    q.hermite_ = hermite_normal_form(gamma).basis();

    SmithForm s = smith_normal_form(gamma);
    q.order_ = 1;
    for (int i = 0; i < 3; ++i) {
        q.diag_[i] = s.D.at(i, i);
        q.order_ *= q.diag_[i];
        q.d_[i] = to_long(q.diag_[i], "group invariant factor");
    }
    q.order_l_ = to_long(q.order_, "group order");
    q.encode_v_ = s.V;
    for (int i = 0; i < 4; ++i) q.t_img_[i] = q.encode(generator_vector(i));

    // exp G annihilates G: m * Z^3 inside the kernel
    for (int i = 0; i < 3; ++i) {
        std::vector<Int> v(3);
        v[i] = q.diag_[2];
        if (q.encode(v) != GroupElement{0, 0, 0})
            throw internal_error("exponent does not annihilate the quotient");
    }
    return q;
}

FiniteQuotient FiniteQuotient::fermat(long m) {
    if (m < 1) throw validation_error("fermat degree must be positive");
    IntMatrix g = IntMatrix::identity(3);
    for (int i = 0; i < 3; ++i) g.at(i, i) = m;
    return from_kernel_matrix(g);
}

FiniteQuotient FiniteQuotient::diagonal(long m1, long m2, long m3) {
    if (m1 < 1 || m2 < 1 || m3 < 1) throw validation_error("diagonal exponents must be positive");
    return from_kernel_matrix(IntMatrix::diagonal({Int(m1), Int(m2), Int(m3)}));
}

FiniteQuotient FiniteQuotient::cyclic(long m, const std::array<long, 4>& w) {
    if (m < 1) throw validation_error("cyclic order must be positive");
    for (long wi : w)
        if (wi < 0) throw validation_error("cyclic weights must be nonnegative");
    if ((w[0] + w[1] + w[2] + w[3]) % m != 0)
        throw validation_error("cyclic weights must sum to zero modulo the order");
    long g = gcd_l(m, gcd_l(w[1], gcd_l(w[2], w[3])));
    if (g != 1) throw validation_error("cyclic weights violate gcd(m, m1, m2, m3) = 1");

    // kernel of (r1,r2,r3) -> r1 w1 + r2 w2 + r3 w3 mod m, via the integer
    // kernel of the augmented column (w1, w2, w3, m)
    IntMatrix col(4, 1);
    col.at(0, 0) = w[1];
    col.at(1, 0) = w[2];
    col.at(2, 0) = w[3];
    col.at(3, 0) = m;
    IntMatrix ker = hermite_normal_form(col).left_kernel();
    if (ker.rows() != 3) throw internal_error("cyclic kernel has unexpected rank");
    IntMatrix gamma(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) gamma.at(i, j) = ker.at(i, j);

    FiniteQuotient q = from_kernel_matrix(gamma);
    if (q.order() != m || !q.is_cyclic_group())
        throw internal_error("cyclic constructor produced a wrong group");
    return q;
}

FiniteQuotient FiniteQuotient::from_exponent_matrix(const IntMatrix& a) {
    if (a.rows() != 4 || a.cols() != 4) throw validation_error("exponent matrix must be 4x4");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (a.at(i, j) < 0)
                throw validation_error("exponent matrix condition 1 violated: negative entry");
    for (std::size_t j = 0; j < 4; ++j) {
        bool zero = false;
        for (std::size_t i = 0; i < 4; ++i) zero |= a.at(i, j) == 0;
        if (!zero)
            throw validation_error("exponent matrix condition 2 violated: column without a zero");
    }
    Int rowsum = 0;
    for (std::size_t j = 0; j < 4; ++j) rowsum += a.at(0, j);
    for (std::size_t i = 1; i < 4; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < 4; ++j) s += a.at(i, j);
        if (s != rowsum)
            throw validation_error("exponent matrix condition 3 violated: row sums differ");
    }
    Int det = a.det();
    if (det == 0) throw validation_error("exponent matrix condition 4 violated: determinant zero");

    // d = gcd of the cofactor matrix, m = |det| / d
    Int d = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            IntMatrix minor(3, 3);
            for (std::size_t r = 0, rr = 0; r < 4; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < 4; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = a.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            d = gcd(d, minor.det());
        }
    Int m = abs(det) / d;

    // column action: t_j maps to the product over i of t_i^{a_ij}; the kernel
    // is the image of the induced endomorphism plus m * Z^3
    IntMatrix gens(6, 3);
    for (std::size_t j = 1; j < 4; ++j)
        for (std::size_t k = 1; k < 4; ++k) gens.at(j - 1, k - 1) = a.at(k, j) - a.at(0, j);
    for (std::size_t i = 0; i < 3; ++i) gens.at(3 + i, i) = m;
    IntMatrix basis = lattice_basis(gens);
    if (basis.rows() != 3) throw internal_error("exponent matrix kernel has unexpected rank");
    IntMatrix gamma(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) gamma.at(i, j) = basis.at(i, j);
    return from_kernel_matrix(gamma);
}

std::vector<Int> FiniteQuotient::group_factors() const {
    std::vector<Int> f;
    for (const Int& d : diag_)
        if (d > 1) f.push_back(d);
    return f;
}

Int FiniteQuotient::element_order_in_quotient(
    const std::array<long, 4>& word, const std::vector<std::array<long, 4>>& modulo_words) const {
    std::vector<Int> x(3);
    for (int i = 0; i < 4; ++i) {
        auto v = generator_vector(i);
        for (int j = 0; j < 3; ++j) x[j] += word[i] * v[j];
    }
    IntMatrix extra(modulo_words.size(), 3);
    for (std::size_t k = 0; k < modulo_words.size(); ++k)
        for (int i = 0; i < 4; ++i) {
            auto v = generator_vector(i);
            for (int j = 0; j < 3; ++j) extra.at(k, j) += modulo_words[k][i] * v[j];
        }
    HermiteForm h = hermite_normal_form(gamma_.stacked(extra));
    return order_in_quotient(h, x);
}

std::string FiniteQuotient::canonical_text() const { return matrix_text(hermite_); }

int SubgroupOrders::pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == 0) return j - 1;  // 01, 02, 03
    if (i == 1) return j + 1;  // 12, 13
    return 5;                  // 23
}

SubgroupOrders subgroup_orders(const FiniteQuotient& q) {
    SubgroupOrders s{};
    static const std::array<std::pair<int, int>, 6> pairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    for (std::size_t k = 0; k < 6; ++k) {
        auto [i, j] = pairs[k];
        IntMatrix gens(2, 3);
        gens.set_row(0, FiniteQuotient::generator_vector(i));
        gens.set_row(1, FiniteQuotient::generator_vector(j));
        s.g_ij[k] = to_long(quotient_order(q.kernel().stacked(gens)), "subgroup order");
    }
    for (int i = 1; i <= 3; ++i) {
        int j = i == 1 ? 2 : 1;
        int k = i == 3 ? 2 : 3;
        IntMatrix gens(2, 3);
        auto vi = FiniteQuotient::generator_vector(i);
        auto vj = FiniteQuotient::generator_vector(j);
        auto vk = FiniteQuotient::generator_vector(k);
        for (int c = 0; c < 3; ++c) {
            gens.at(0, c) = vi[c] + vj[c];
            gens.at(1, c) = vi[c] + vk[c];
        }
        s.g_i[i - 1] = to_long(quotient_order(q.kernel().stacked(gens)), "subgroup order");
    }
    IntMatrix even(3, 3);
    even.set_row(0, {Int(1), Int(1), Int(0)});
    even.set_row(1, {Int(1), Int(0), Int(1)});
    even.set_row(2, {Int(0), Int(1), Int(1)});
    s.g_eq = to_long(quotient_order(q.kernel().stacked(even)), "subgroup order");
    if (s.g_eq != 1 && s.g_eq != 2) throw internal_error("|G_=| outside {1,2}");
    return s;
}

Int height_of(const FiniteQuotient& q) {
    Int n = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) n = gcd(n, q.kernel().at(i, j));
    return q.exponent() / n;
}

const std::vector<IndexPermutation>& all_index_permutations() {
    static const std::vector<IndexPermutation> perms = [] {
        std::vector<IndexPermutation> out;
        IndexPermutation p{0, 1, 2, 3};
        do out.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

IntMatrix permuted_kernel(const FiniteQuotient& q, const IndexPermutation& perm) {
    // rows of P are the old coordinates of the new basis t'_1, t'_2, t'_3
    IntMatrix p(3, 3);
    for (int i = 1; i < 4; ++i) p.set_row(i - 1, FiniteQuotient::generator_vector(perm[i]));
    HermiteForm h = hermite_normal_form(p);
    if (h.rank() != 3 || h.basis() != IntMatrix::identity(3))
        throw internal_error("permutation basis is not unimodular");
    return q.kernel() * h.U;  // U = P^{-1}
}

FiniteQuotient permuted_quotient(const FiniteQuotient& q, const IndexPermutation& perm) {
    return FiniteQuotient::from_kernel_matrix(permuted_kernel(q, perm));
}

namespace {

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_basis(a) == lattice_basis(b);
}

}  // namespace

Classification classify(const FiniteQuotient& q) {
    Classification c;
    c.height = height_of(q);
    c.is_cyclic = q.is_cyclic_group();

    long m = to_long(q.exponent(), "group exponent");
    IntMatrix fermat_kernel = IntMatrix::identity(3);
    for (int i = 0; i < 3; ++i) fermat_kernel.at(i, i) = m;
    if (lattice_equal(q.kernel(), fermat_kernel)) {
        c.is_fermat = true;
        c.fermat_m = m;
    }

    for (int i = 0; i < 4 && !c.is_unramified; ++i)
        if (q.encode(FiniteQuotient::generator_vector(i)) == GroupElement{0, 0, 0}) {
            c.is_unramified = true;
            c.unramified_index = i;
        }

    for (const auto& perm : all_index_permutations()) {
        IntMatrix kernel = permuted_kernel(q, perm);
        FiniteQuotient pq = FiniteQuotient::from_kernel_matrix(kernel);
        std::array<long, 3> orders{};
        for (int i = 1; i < 4; ++i)
            orders[i - 1] = pq.element_order(pq.generator_image(i));
        if (lattice_equal(kernel, IntMatrix::diagonal({Int(orders[0]), Int(orders[1]), Int(orders[2])}))) {
            c.is_diagonal = true;
            c.diagonal_permutation = perm;
            c.diagonal_exponents = orders;
            break;
        }
    }

    if (c.is_fermat && !(c.is_diagonal))
        throw internal_error("Fermat quotient failed the diagonal test");
    return c;
}

namespace {

std::string normalize_minus(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        // U+2212 minus sign, UTF-8 e2 88 92
        if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xe2 &&
            static_cast<unsigned char>(s[i + 1]) == 0x88 &&
            static_cast<unsigned char>(s[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(s[i]))) {
            out += s[i];
        }
    }
    return out;
}

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) {
            std::ostringstream os;
            os << "matrix text: expected '" << c << "' at position " << pos;
            throw validation_error(os.str());
        }
    }
    Int integer() {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw validation_error("matrix text: expected an integer at position " +
                                   std::to_string(start));
        return Int(s.substr(start, pos - start));
    }
};

IntMatrix parse_bare_matrix(Cursor& cur, std::size_t n) {
    IntMatrix m(n, n);
    cur.expect('[');
    for (std::size_t i = 0; i < n; ++i) {
        if (i) cur.expect(',');
        cur.expect('[');
        for (std::size_t j = 0; j < n; ++j) {
            if (j) cur.expect(',');
            m.at(i, j) = cur.integer();
        }
        cur.expect(']');
    }
    cur.expect(']');
    return m;
}

}  // namespace

IntMatrix parse_matrix_text(const std::string& text, std::size_t n) {
    std::string s = normalize_minus(text);
    Cursor cur{s};
    std::vector<Int> diag;
    if (s.rfind("diag(", 0) == 0) {
        if (n != 3) throw validation_error("diag(...) prefix is only valid for 3x3 matrices");
        cur.pos = 5;
        for (int i = 0; i < 3; ++i) {
            if (i) cur.expect(',');
            diag.push_back(cur.integer());
        }
        cur.expect(')');
        cur.expect('*');
    }
    IntMatrix m = parse_bare_matrix(cur, n);
    if (cur.pos != s.size())
        throw validation_error("matrix text: trailing characters at position " +
                               std::to_string(cur.pos));
    if (!diag.empty()) {
        IntMatrix d = IntMatrix::diagonal(diag);
        m = d * m;
    }
    return m;
}

std::string matrix_text(const IntMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

}  // namespace delsarte
