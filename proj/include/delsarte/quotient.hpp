#pragma once

#include <array>
#include <string>
#include <vector>

#include "delsarte/hermite.hpp"
#include "delsarte/int_matrix.hpp"
#include "delsarte/smith.hpp"

namespace delsarte {

// Element of the finite abelian group G in canonical coordinates
// (x1 mod d1, x2 mod d2, x3 mod d3), representatives in [0, di).
using GroupElement = std::array<long, 3>;

// A finite quotient of the rank-3 group on generators t0..t3 (product of all
// four trivial), encoded by a 3x3 kernel matrix whose rows generate the
// kernel in the additive basis t1, t2, t3.  Immutable after construction.
class FiniteQuotient {
  public:
    static FiniteQuotient from_kernel_matrix(const IntMatrix& gamma);
    static FiniteQuotient fermat(long m);
    static FiniteQuotient diagonal(long m1, long m2, long m3);
    static FiniteQuotient cyclic(long m, const std::array<long, 4>& weights);
    static FiniteQuotient from_exponent_matrix(const IntMatrix& a);

    const IntMatrix& kernel() const { return gamma_; }
    const IntMatrix& kernel_hermite() const { return hermite_; }
    Int order() const { return order_; }
    long order_l() const { return order_l_; }
    Int exponent() const { return diag_[2]; }
    // d1 | d2 | d3, ones included
    const std::array<long, 3>& group_diagonal() const { return d_; }
    std::vector<Int> group_factors() const;  // nontrivial invariant factors
    bool is_cyclic_group() const { return d_[0] == 1 && d_[1] == 1; }

    // additive vector of t_i in the t1,t2,t3 basis; t0 = (-1,-1,-1)
    static std::vector<Int> generator_vector(int i);
    // image of an integer vector under the quotient map
    GroupElement encode(const std::vector<Int>& x) const;
    GroupElement generator_image(int i) const { return t_img_[i]; }

    long element_count() const { return order_l_; }
    long index_of(const GroupElement& e) const {
        return (e[0] * d_[1] + e[1]) * d_[2] + e[2];
    }
    GroupElement element_at(long idx) const {
        return {idx / (d_[1] * d_[2]), (idx / d_[2]) % d_[1], idx % d_[2]};
    }
    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        return {(a[0] + b[0]) % d_[0], (a[1] + b[1]) % d_[1], (a[2] + b[2]) % d_[2]};
    }
    GroupElement neg(const GroupElement& a) const {
        return {(d_[0] - a[0]) % d_[0], (d_[1] - a[1]) % d_[1], (d_[2] - a[2]) % d_[2]};
    }
    long element_order(const GroupElement& a) const;

    // order of the word's image in G / <images of modulo_words>; words are
    // exponent vectors over t0..t3
    Int element_order_in_quotient(const std::array<long, 4>& word,
                                  const std::vector<std::array<long, 4>>& modulo_words) const;

    std::string canonical_text() const;  // Hermite form of the kernel matrix

  private:
    IntMatrix gamma_, hermite_;
    Int order_;
    long order_l_ = 0;
    std::array<Int, 3> diag_;
    std::array<long, 3> d_;
    IntMatrix encode_v_;  // change of basis from the Smith form of gamma
    std::array<GroupElement, 4> t_img_;
};

// Orders of the distinguished subgroup quotients.  Pairs are indexed
// 01, 02, 03, 12, 13, 23 in that fixed order.
struct SubgroupOrders {
    std::array<long, 6> g_ij;
    std::array<long, 3> g_i;  // partitions {0,i} | {j,k}
    long g_eq;
    int delta() const { return static_cast<int>(g_eq - 1); }
    static int pair_index(int i, int j);
    long pair(int i, int j) const { return g_ij[pair_index(i, j)]; }
};

SubgroupOrders subgroup_orders(const FiniteQuotient& q);

struct Classification {
    bool is_fermat = false;
    long fermat_m = 0;
    bool is_unramified = false;
    int unramified_index = -1;
    bool is_cyclic = false;
    bool is_diagonal = false;
    std::array<int, 4> diagonal_permutation{0, 1, 2, 3};
    std::array<long, 3> diagonal_exponents{0, 0, 0};
    Int height;

    bool special() const { return is_fermat || is_unramified || is_cyclic || is_diagonal; }
};

Classification classify(const FiniteQuotient& q);

Int height_of(const FiniteQuotient& q);

// Index permutations act by relabelling the four generators; the kernel is
// pulled through the induced basis change of the ambient lattice.
using IndexPermutation = std::array<int, 4>;
const std::vector<IndexPermutation>& all_index_permutations();
IntMatrix permuted_kernel(const FiniteQuotient& q, const IndexPermutation& perm);
FiniteQuotient permuted_quotient(const FiniteQuotient& q, const IndexPermutation& perm);

// Matrix text exactly as printed in the example tables:
// [[a,b,c],[d,e,f],[g,h,i]] with optional whitespace, optionally prefixed by
// diag(x,y,z)*; the Unicode minus sign is accepted.
IntMatrix parse_matrix_text(const std::string& text, std::size_t n);
std::string matrix_text(const IntMatrix& m);

}  // namespace delsarte
