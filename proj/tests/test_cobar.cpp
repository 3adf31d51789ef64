#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobarlab/cobar.hpp"

#include <random>

using namespace cobarlab;

namespace {
DgCoalgebra sphere1(Field f) {
    return parse_coalgebra(std::string("field ") + field_name(f) + "\nmaxdeg 12\ngen X 3\nprimitive\n");
}
}  // namespace

TEST_CASE("cobar of the primitive one-generator coalgebra is a polynomial algebra") {
    auto a = CobarAlgebra::cobar(sphere1(Field::Q), 10);
    for (int m = 1; 2 * m <= 10; ++m) {
        CHECK(a->space().dim(2 * m) == 1);
        CHECK(a->space().dim(2 * m - 1) == 0);
    }
    Word gen{a->letters().id_of("X")};
    CHECK(a->d_word(gen).is_zero());
    CHECK(a->complex().validate(10).ok);
}

TEST_CASE("generator differential: −s⁻¹ d and the Koszul-signed coproduct part") {
    DgCoalgebra c = parse_coalgebra("field Q\nmaxdeg 8\ngen u 2\ngen v 3\nd v = u\nprimitive\n");
    auto a = CobarAlgebra::cobar(c, 6);
    Word v{a->letters().id_of("v")};
    CHECK(a->d_word(v).coeff({a->letters().id_of("u")}) == Scalar::from_int(Field::Q, -1));

    DgCoalgebra c2 = parse_coalgebra("field Q\nmaxdeg 8\ngen p 3\ngen q 4\ngen w 7\ncop w = p|q\n");
    auto a2 = CobarAlgebra::cobar(c2, 7);
    Word w{a2->letters().id_of("w")};
    Word pq{a2->letters().id_of("p"), a2->letters().id_of("q")};
    CHECK(a2->d_word(w).coeff(pq) == Scalar::sign(Field::Q, 3));  // (−1)^{|p|}
}

TEST_CASE("cobar rejects tiny cutoffs") {
    CHECK_THROWS(CobarAlgebra::cobar(sphere1(Field::Q), 1));
}

TEST_CASE("∇₀ examples: unit, primitives and the even square") {
    auto a = CobarAlgebra::cobar(sphere1(Field::Q), 8);
    WordTensor unit = a->nabla0({});
    CHECK(unit.terms().at({Word{}, Word{}}).is_one());
    CHECK(unit.size() == 1);

    int x = a->letters().id_of("X");
    WordTensor gen = a->nabla0({x});
    CHECK(gen.size() == 2);
    CHECK(gen.terms().at({Word{x}, Word{}}).is_one());
    CHECK(gen.terms().at({Word{}, Word{x}}).is_one());

    WordTensor sq = a->nabla0({x, x});  // a² ↦ a²⊗1 + 2a⊗a + 1⊗a²
    CHECK(sq.terms().at({Word{x}, Word{x}}) == Scalar::from_int(Field::Q, 2));
}

TEST_CASE("antipode: unit, generators, involutivity") {
    auto a = CobarAlgebra::cobar(sphere1(Field::Q), 8);
    CHECK(a->antipode(Word{}).coeff({}).is_one());
    int x = a->letters().id_of("X");
    CHECK(a->antipode(Word{x}).coeff({x}) == Scalar::from_int(Field::Q, -1));
    for (int n = 0; n <= 8; ++n)
        for (const auto& w : a->words(n)) {
            WordSum ss = a->antipode(a->antipode(w));
            CHECK(ss == a->word_sum(w));
        }
}

TEST_CASE("double cobar of sphere1: binomial differential") {
    auto w = CobarAlgebra::double_cobar(sphere1(Field::Q), 9);
    auto b = [&](int m) {
        Word content(m, w->base()->letters().id_of("X"));
        return w->letter_of_content(content);
    };
    // d b_m = Σ binom(m,i) b_i b_{m−i}
    WordSum db2 = w->d_word({b(2)});
    CHECK(db2.coeff({b(1), b(1)}) == Scalar::from_int(Field::Q, 2));
    WordSum db4 = w->d_word({b(4)});
    CHECK(db4.coeff({b(1), b(3)}) == Scalar::from_int(Field::Q, 4));
    CHECK(db4.coeff({b(2), b(2)}) == Scalar::from_int(Field::Q, 6));
    CHECK(w->complex().validate(9).ok);

    // over Q: H₂ = 0 (b₁b₁ is exact); over F2: b₂ is a cycle
    CHECK(w->complex().homology_at(2).dim() == 0);
    auto wf = CobarAlgebra::double_cobar(sphere1(Field::F2), 7);
    auto bf = [&](int m) {
        Word content(m, wf->base()->letters().id_of("X"));
        return wf->letter_of_content(content);
    };
    CHECK(wf->d_word({bf(2)}).is_zero());
    CHECK(wf->complex().homology_at(3).dim() == 2);  // {b₁³, b₂}
}

TEST_CASE("double cobar requires C₂ = 0") {
    DgCoalgebra c = parse_coalgebra("field Q\nmaxdeg 8\ngen u 2\ngen v 3\nd v = u\nprimitive\n");
    CHECK_THROWS(CobarAlgebra::double_cobar(c, 6));
}

TEST_CASE("differential is a derivation for concatenation") {
    DgCoalgebra c = parse_coalgebra(
        "field Q\nmaxdeg 10\ngen X 3\ngen u 4\ngen v 5\nd v = u\nprimitive\n");
    auto a = CobarAlgebra::cobar(c, 9);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int d1 = 2 + static_cast<int>(rng() % 4);
        int d2 = 2 + static_cast<int>(rng() % 4);
        if (a->words(d1).empty() || a->words(d2).empty() || d1 + d2 > 9) continue;
        const Word& x = a->words(d1)[rng() % a->words(d1).size()];
        const Word& y = a->words(d2)[rng() % a->words(d2).size()];
        Word xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        WordSum lhs = a->d_word(xy);
        WordSum rhs = concat(a->d_word(x), a->word_sum(y));
        WordSum t2 = concat(a->word_sum(x), a->d_word(y));
        rhs.add_sum(t2, Scalar::sign(Field::Q, d1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Hopf axiom suite on the shipped primitive examples") {
    for (Field f : {Field::Q, Field::F2}) {
        auto a = CobarAlgebra::cobar(sphere1(f), 10);
        HopfReport rep = check_hopf(*a, 10);
        CHECK(rep.ok());
    }
    DgCoalgebra mix = parse_coalgebra(
        "field Q\nmaxdeg 11\ngen X 3\ngen u 5\ngen v 6\nd v = u\nprimitive\n");
    auto am = CobarAlgebra::cobar(mix, 10);
    CHECK(check_hopf(*am, 10).ok());
}

TEST_CASE("the reduced family is only a bialgebra for cocommutative coproducts") {
    // ∇̄w = p⊗q is not cocommutative: the unshuffle coproduct cannot be a
    // chain map for it
    DgCoalgebra c = parse_coalgebra("field Q\nmaxdeg 8\ngen p 3\ngen q 4\ngen w 7\ncop w = p|q\n");
    auto a = CobarAlgebra::cobar(c, 7);
    HopfReport rep = check_hopf(*a, 7);
    CHECK(!rep.chain_map);
}
