#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobarlab/graded.hpp"
#include "cobarlab/koszul.hpp"
#include "cobarlab/word.hpp"

#include <random>

using namespace cobarlab;

TEST_CASE("koszul sign of (f⊗g)(x⊗y)") {
    // (f⊗g)(x⊗y) = (−1)^{|g||x|} f(x)⊗g(y)
    CHECK(koszul_apply_parity({0, 0}, {3, 5}) == 0);            // identities: no sign
    CHECK(koszul_apply_parity({-1, -1}, {2, 7}) == 0);          // s⁻¹⊗s⁻¹ on even |x|
    CHECK(koszul_apply_parity({-1, -1}, {3, 7}) == 1);          // s⁻¹⊗s⁻¹ on odd |x|
    CHECK(koszul_at_parity(1, {2, 3, 4}, 2) == 1);              // odd op past degree 5
}

TEST_CASE("interchange: (f⊗g)∘(h⊗k) = (−1)^{|g||h|}(f∘h)⊗(g∘k)") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int fd = static_cast<int>(rng() % 4) - 1, gd = static_cast<int>(rng() % 4) - 1;
        int hd = static_cast<int>(rng() % 4) - 1, kd = static_cast<int>(rng() % 4) - 1;
        int xd = static_cast<int>(rng() % 5), yd = static_cast<int>(rng() % 5);
        // apply h⊗k then f⊗g
        int lhs = koszul_apply_parity({hd, kd}, {xd, yd}) +
                  koszul_apply_parity({fd, gd}, {xd + hd, yd + kd});
        int rhs = (gd * hd) + koszul_apply_parity({fd + hd, gd + kd}, {xd, yd});
        CHECK(((lhs - rhs) % 2 + 2) % 2 == 0);
    }
}

TEST_CASE("shift moves degrees and decorates names") {
    GradedSpace v;
    v.add_basis_element(3, "c");
    GradedSpace down = shift(v, -1);  // s⁻¹: degree 3 -> 2
    CHECK(down.dim(2) == 1);
    CHECK(down.dim(3) == 0);
    GradedSpace back = shift(down, 1);
    CHECK(back.dim(3) == 1);
    GradedSpace twice = shift(v, -2);
    CHECK(twice.dim(1) == 1);
}

TEST_CASE("validate_complex reports the first failing generator") {
    Field f = Field::Q;
    GradedSpace s(5);
    s.add_basis_element(1, "w");
    s.add_basis_element(2, "u");
    s.add_basis_element(3, "v");
    SUBCASE("zero differential passes") {
        ChainComplex c(s, f);
        CHECK(c.validate(5).ok);
    }
    SUBCASE("d v = u, d u = 0 passes") {
        ChainComplex c(s, f);
        c.differential().add_entry(3, 0, 0, Scalar::one(f));
        CHECK(c.validate(5).ok);
    }
    SUBCASE("d v = u, d u = w fails at v") {
        ChainComplex c(s, f);
        c.differential().add_entry(3, 0, 0, Scalar::one(f));
        c.differential().add_entry(2, 0, 0, Scalar::one(f));
        ComplexReport rep = c.validate(5);
        CHECK(!rep.ok);
        CHECK(rep.first_failure.find("v") != std::string::npos);
    }
}

TEST_CASE("hom differential of a chain map vanishes") {
    Field f = Field::Q;
    GradedSpace s(4);
    s.add_basis_element(2, "u");
    s.add_basis_element(3, "v");
    ChainComplex c(s, f);
    c.differential().add_entry(3, 0, 0, Scalar::from_int(f, 2));
    GradedMap id = GradedMap::identity(&c.space(), f);
    GradedMap dbar = hom_differential(id, c.differential(), c.differential(), f, 4);
    CHECK(dbar.is_zero());
}

TEST_CASE("canonical word order: length first, then letter names; sorting is stable") {
    LetterTable t;
    int a = t.add("a", 2);
    int b = t.add("b", 3);
    WordOrder ord{&t};
    CHECK(ord(Word{b}, Word{a, a}));       // shorter first
    CHECK(ord(Word{a, b}, Word{b, a}));    // lexicographic on names
    std::vector<Word> ws = {{b, a}, {a}, {a, b}, {}, {b}};
    std::sort(ws.begin(), ws.end(), ord);
    std::vector<Word> once = ws;
    std::sort(ws.begin(), ws.end(), ord);
    CHECK(ws == once);
}

TEST_CASE("unshuffle signs agree with the multiplicativity of the shuffle coproduct") {
    LetterTable t;
    int a = t.add("a", 1);
    int b = t.add("b", 2);
    WordTensor u = unshuffle({a, b}, 2, Field::Q, t);
    // l1 l2 -> l1l2⊗1 + l1⊗l2 + (−1)^{|l1||l2|} l2⊗l1 + 1⊗l1l2
    CHECK(u.terms().at({Word{a, b}, Word{}}).is_one());
    CHECK(u.terms().at({Word{a}, Word{b}}).is_one());
    CHECK(u.terms().at({Word{b}, Word{a}}) == Scalar::from_int(Field::Q, 1 * 2 % 2 ? -1 : 1));
    CHECK(u.terms().at({Word{}, Word{a, b}}).is_one());
}
