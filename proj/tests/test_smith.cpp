#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "delsarte/smith.hpp"
#include "delsarte/sparse_smith.hpp"
#include "test_util.hpp"

using namespace delsarte;

namespace {

bool is_unimodular(const IntMatrix& m) {
    Int d = m.det();
    return d == 1 || d == -1;
}

bool chain_ok(const std::vector<Int>& diag) {
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        if (diag[i] < 0) return false;
        if (diag[i] == 0 && diag[i + 1] != 0) return false;  // zeros trail
        if (diag[i] != 0 && diag[i + 1] != 0 && !divides(diag[i], diag[i + 1])) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("identity matrix is its own Smith form") {
    SmithForm s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.D == IntMatrix::identity(3));
    CHECK(s.diagonal() == std::vector<Int>{1, 1, 1});
}

TEST_CASE("coprime diagonal collapses to the gcd/lcm chain") {
    SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.diagonal() == std::vector<Int>{1, 6});
}

TEST_CASE("empty matrix has an empty Smith form") {
    SmithForm s = smith_normal_form(IntMatrix(0, 0));
    CHECK(s.diagonal().empty());
    CHECK(smith_invariants(IntMatrix(0, 3)).chain.empty());
    CHECK(smith_invariants(IntMatrix(0, 3)).cokernel(3).free_rank == 3);
}

TEST_CASE("transform matrices reconstruct the input") {
    testutil::Rng rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
        IntMatrix a = testutil::random_matrix(rng, rows, cols, 9);
        SmithForm s = smith_normal_form(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK(is_unimodular(s.U));
        CHECK(is_unimodular(s.V));
        CHECK(chain_ok(s.diagonal()));
    }
}

TEST_CASE("Smith diagonal is invariant under unimodular factors") {
    testutil::Rng rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 2 + rng.below(5);
        IntMatrix a = testutil::random_matrix(rng, n, n, 6);
        IntMatrix p = testutil::random_unimodular(rng, n);
        IntMatrix q = testutil::random_unimodular(rng, n);
        CHECK(smith_normal_form(p * a * q).diagonal() == smith_normal_form(a).diagonal());
    }
}

TEST_CASE("sparse kernel, dense sweep and reference all agree") {
    testutil::Rng rng(13);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t rows = 1 + rng.below(12), cols = 1 + rng.below(12);
        IntMatrix a = testutil::random_matrix(rng, rows, cols, 7);
        std::vector<Int> ref = smith_diagonal_reference(a);
        std::vector<Int> ref_nonzero;
        for (const Int& d : ref)
            if (d != 0) ref_nonzero.push_back(d);
        CHECK(smith_invariants(a).chain == ref_nonzero);
        std::vector<Int> serial = dense_smith_diagonal(a, false);
        std::vector<Int> parallel = dense_smith_diagonal(a, true);
        CHECK(serial == ref);
        CHECK(parallel == ref);
    }
}

TEST_CASE("sparse and dense storages of one matrix give identical results") {
    testutil::Rng rng(17);
    IntMatrix a = testutil::random_matrix(rng, 9, 7, 4);
    SparseIntMatrix s = SparseIntMatrix::from_dense(a);
    CHECK(smith_invariants(s).chain == smith_invariants(a).chain);
    CHECK(s.dense() == a);
}

TEST_CASE("cokernel structures read off the diagonal") {
    IntMatrix a{{2, 0, 0}, {0, 3, 0}};
    AbelianGroupStructure s = smith_invariants(a).cokernel(3);
    CHECK(s.free_rank == 1);
    CHECK(s.torsion_factors == std::vector<Int>{6});
    CHECK(s.str() == "Z + Z/6");
    CHECK(smith_normal_form(a).cokernel_structure(3) == s);
}
