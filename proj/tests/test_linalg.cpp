#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobarlab/homology.hpp"
#include "cobarlab/sparse.hpp"

#include <random>

using namespace cobarlab;

namespace {

SparseMat from_rows(Field f, int rows, int cols, std::vector<std::vector<long>> data) {
    SparseMat m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.set(r, c, Scalar::from_int(f, data[r][c]));
    return m;
}

SparseMat random_matrix(Field f, int rows, int cols, std::mt19937_64& rng) {
    SparseMat m(f, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() % 3 == 0) m.set(r, c, Scalar::from_int(f, static_cast<long>(rng() % 5) - 2));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic stays exact") {
    Scalar a = Scalar::from_fraction(1, 3);
    Scalar b = Scalar::from_fraction(1, 6);
    CHECK((a + b) == Scalar::from_fraction(1, 2));
    CHECK((a * b) == Scalar::from_fraction(1, 18));
    CHECK((a / b) == Scalar::from_int(Field::Q, 2));
    CHECK(Scalar::from_int(Field::F2, 3) == Scalar::one(Field::F2));
    CHECK(Scalar::sign(Field::Q, 5) == Scalar::from_int(Field::Q, -1));
    CHECK(Scalar::sign(Field::F2, 5).is_one());
}

TEST_CASE("rref of the 2x2 identity over Q") {
    SparseMat m = SparseMat::identity(Field::Q, 2);
    Rref e = rref(m);
    CHECK(e.reduced == m);
    CHECK(e.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("rref of the rank-1 symmetric matrix over F2") {
    SparseMat m = from_rows(Field::F2, 2, 2, {{1, 1}, {1, 1}});
    Rref e = rref(m);
    CHECK(e.rank() == 1);
    CHECK(e.reduced == from_rows(Field::F2, 2, 2, {{1, 1}, {0, 0}}));
    CHECK(e.pivot_cols == std::vector<int>{0});
}

TEST_CASE("rref [[2,4],[1,2]] over Q by hand elimination") {
    SparseMat m = from_rows(Field::Q, 2, 2, {{2, 4}, {1, 2}});
    Rref e = rref(m);
    CHECK(e.reduced == from_rows(Field::Q, 2, 2, {{1, 2}, {0, 0}}));
    // the transform expresses result rows in original rows
    CHECK(e.transform.multiply(m) == e.reduced);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(SparseMat::zero(Field::Q, 2, 2)).size() == 2);
    CHECK(kernel_basis(SparseMat::identity(Field::Q, 3)).empty());
    SparseMat m = from_rows(Field::F2, 1, 2, {{1, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].at(0).is_one());
    CHECK(k[0].at(1).is_one());
}

TEST_CASE("solve decides consistency") {
    SparseMat m = from_rows(Field::Q, 2, 2, {{2, 4}, {1, 2}});
    SparseVec b(Field::Q);
    b.add(0, Scalar::from_int(Field::Q, 2));
    b.add(1, Scalar::from_int(Field::Q, 1));
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
    SparseVec bad = SparseVec::unit(Field::Q, 0);
    CHECK(!solve(m, bad).has_value());
}

TEST_CASE("homology dimensions from the spec examples") {
    // both maps zero, 3 columns -> dimension 3
    HomologySolver h0(SparseMat::zero(Field::Q, 3, 0), SparseMat::zero(Field::Q, 0, 3));
    CHECK(h0.dim() == 3);
    // incoming identity kills everything
    HomologySolver h1(SparseMat::identity(Field::Q, 2), SparseMat::zero(Field::Q, 0, 2));
    CHECK(h1.dim() == 0);
    // Q² -> Q¹ with d = (1 1): rank-nullity gives H = 1
    SparseMat d = from_rows(Field::Q, 1, 2, {{1, 1}});
    HomologySolver h2(SparseMat::zero(Field::Q, 2, 0), d);
    CHECK(h2.dim() == 1);
}

TEST_CASE("homology rejects a broken differential") {
    SparseMat d1 = SparseMat::identity(Field::Q, 2);
    SparseMat d0 = SparseMat::identity(Field::Q, 2);
    CHECK_THROWS(HomologySolver(d1, d0));
}

TEST_CASE("boundary-expression solver is exact") {
    // C2 = Q -> C1 = Q² (d = (1,1)ᵀ), C1 -> C0 = 0: H1 is 1-dimensional
    SparseMat din(Field::Q, 2, 1);
    din.set(0, 0, Scalar::one(Field::Q));
    din.set(1, 0, Scalar::one(Field::Q));
    HomologySolver h(din, SparseMat::zero(Field::Q, 0, 2));
    CHECK(h.dim() == 1);
    // any cycle reduces to a multiple of the class, stable under boundaries
    SparseVec z(Field::Q);
    z.add(0, Scalar::from_int(Field::Q, 3));
    z.add(1, Scalar::from_int(Field::Q, 5));
    SparseVec c1 = h.reduce(z);
    SparseVec shifted = z;
    shifted.axpy(Scalar::from_int(Field::Q, 7), din.apply(SparseVec::unit(Field::Q, 0)));
    CHECK(h.reduce(shifted) == c1);
}

TEST_CASE("rank plus kernel dimension equals columns") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::Q, Field::F2}) {
        for (int trial = 0; trial < 20; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 6);
            int cols = 1 + static_cast<int>(rng() % 6);
            SparseMat m = random_matrix(f, rows, cols, rng);
            CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == cols);
        }
    }
}

TEST_CASE("homology dimension is independent of basis order and row scaling") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        int n2 = 2 + static_cast<int>(rng() % 3);
        int n1 = 2 + static_cast<int>(rng() % 4);
        int n0 = 1 + static_cast<int>(rng() % 3);
        // build d1 : C1 -> C0 first, then d2 with image inside ker d1
        SparseMat d1 = random_matrix(Field::Q, n0, n1, rng);
        auto ker = kernel_basis(d1);
        SparseMat d2(Field::Q, n1, n2);
        for (int c = 0; c < n2; ++c) {
            if (ker.empty()) break;
            SparseVec col(Field::Q);
            for (const auto& k : ker)
                if (rng() % 2 == 0)
                    col.axpy(Scalar::from_int(Field::Q, static_cast<long>(rng() % 3) + 1), k);
            for (const auto& [r, v] : col.entries()) d2.add(r, c, v);
        }
        HomologySolver h(d2, d1);

        // permute the middle basis
        std::vector<int> perm(n1);
        for (int i = 0; i < n1; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SparseMat d1p = d1.permute_cols(perm);
        SparseMat d2p(Field::Q, n1, n2);
        for (auto& [r, c, v] : d2.entries()) d2p.add(perm[r], c, v);
        HomologySolver hp(d2p, d1p);
        CHECK(h.dim() == hp.dim());

        // rescale rows of d1 by nonzero integers (a change of C0 basis)
        SparseMat d1s(Field::Q, n0, n1);
        for (auto& [r, c, v] : d1.entries())
            d1s.add(r, c, v * Scalar::from_int(Field::Q, (r % 3) + 1));
        HomologySolver hs(d2, d1s);
        CHECK(h.dim() == hs.dim());
    }
}
