#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobarlab/free_gerst.hpp"

#include <functional>

using namespace cobarlab;

namespace {

// independent oracle: partitions of n into parts from the given multiset of
// degrees (with multiplicity = how many generators have that degree)
long partition_count(int n, const std::vector<int>& part_degrees) {
    std::vector<long> ways(n + 1, 0);
    ways[0] = 1;
    for (int d : part_degrees)
        for (int v = d; v <= n; ++v) ways[v] += ways[v - d];
    return ways[n];
}

FreeElem add(const FreeModel& m, const FreeElem& a, const FreeElem& b, long coef = 1) {
    FreeElem out = a;
    for (const auto& [mon, c] : b) {
        Scalar v = c * Scalar::from_int(m.field(), coef);
        auto [it, fresh] = out.try_emplace(mon, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("elementary products: single generators") {
    // even degree or char 2: only the generator itself
    FreeModel f2(Field::F2, {{"x", 1}}, 10);
    CHECK(f2.elementary_products().size() == 1);
    FreeModel qeven(Field::Q, {{"x", 1}}, 10);  // sx even: no bracket
    CHECK(qeven.elementary_products().size() == 1);
    // odd suspension over Q: x and [x;x]
    FreeModel qodd(Field::Q, {{"x", 2}}, 10);
    REQUIRE(qodd.elementary_products().size() == 2);
    CHECK(qodd.elementary_products()[1].label == "[x;x]");
    CHECK(qodd.elementary_products()[1].degree == 5);
}

TEST_CASE("elementary products: two generators, recursive admissibility") {
    FreeModel m(Field::F2, {{"u", 1}, {"v", 2}}, 9);
    std::vector<std::string> labels;
    for (const auto& t : m.elementary_products()) labels.push_back(t.label);
    auto has = [&](const std::string& s) {
        return std::find(labels.begin(), labels.end(), s) != labels.end();
    };
    CHECK(has("u"));
    CHECK(has("v"));
    CHECK(has("[u;v]"));
    CHECK(has("[u;[u;v]]"));
    CHECK(has("[v;[u;v]]"));
    CHECK(!has("[u;u]"));
    CHECK(!has("[v;u]"));
}

TEST_CASE("F2 Hilbert series on one degree-1 class: partitions over 1,3,7,...") {
    FreeModel m(Field::F2, {{"x", 1}}, 12);
    auto dims = m.dims_enumerated();
    CHECK(dims == m.dims_pbw());
    std::vector<int> ext{1, 3, 7};  // 2^{k+1}−1 up to the cutoff
    for (int n = 0; n <= 12; ++n) CHECK(dims[n] == partition_count(n, ext));
}

TEST_CASE("Q Hilbert series: exterior and polynomial-times-exterior shapes") {
    FreeModel m1(Field::Q, {{"x", 1}}, 8);
    CHECK(m1.dims_enumerated() == std::vector<long>{1, 1, 0, 0, 0, 0, 0, 0, 0});
    FreeModel m2(Field::Q, {{"x", 2}}, 8);
    CHECK(m2.dims_enumerated() == std::vector<long>{1, 0, 1, 0, 1, 1, 1, 1, 1});
    CHECK(m2.dims_pbw() == m2.dims_enumerated());
}

TEST_CASE("the two series routes agree for every tested W up to degree 12") {
    std::vector<std::vector<std::pair<std::string, int>>> gens = {
        {{"x", 1}}, {{"x", 2}}, {{"x", 3}}, {{"x", 1}, {"y", 2}}, {{"x", 2}, {"y", 3}},
        {{"x", 1}, {"y", 1}}};
    for (Field f : {Field::F2, Field::Q})
        for (const auto& w : gens) {
            FreeModel m(f, w, 12);
            CHECK(m.dims_enumerated() == m.dims_pbw());
        }
}

TEST_CASE("structure constants satisfy Poisson, Jacobi and symmetry") {
    for (Field f : {Field::F2, Field::Q}) {
        FreeModel m(f, {{"x", 1}, {"y", 2}}, 8);
        const auto& ext = m.extended_generators();
        auto gens_upto = [&](int maxdeg) {
            std::vector<int> out;
            for (size_t g = 0; g < ext.size(); ++g)
                if (ext[g].degree <= maxdeg) out.push_back(static_cast<int>(g));
            return out;
        };
        for (int g : gens_upto(3))
            for (int h : gens_upto(3)) {
                if (ext[g].degree + ext[h].degree + 1 > 8) continue;
                FreeElem x = m.gen_elem(g), y = m.gen_elem(h);
                // graded symmetry of the degree-1 bracket
                FreeElem lhs = m.bracket(x, y);
                FreeElem rhs = m.bracket(y, x);
                for (auto& [mon, c] : rhs)
                    c *= -Scalar::sign(f, (ext[g].degree + 1) * (ext[h].degree + 1));
                CHECK(lhs == rhs);
                // Poisson on generator triples
                for (int k : gens_upto(2)) {
                    if (ext[g].degree + ext[h].degree + ext[k].degree + 1 > 8) continue;
                    FreeElem z = m.gen_elem(k);
                    FreeElem l = m.bracket(x, m.product(y, z));
                    FreeElem r = m.product(m.bracket(x, y), z);
                    FreeElem t = m.product(y, m.bracket(x, z));
                    for (auto& [mon, c] : t)
                        c *= Scalar::sign(f, (ext[g].degree + 1) * ext[h].degree);
                    r = add(m, r, t);
                    CHECK(l == r);
                    // Jacobi with degree-1 shifts
                    if (ext[g].degree + ext[h].degree + ext[k].degree + 2 <= 8) {
                        FreeElem j1 = m.bracket(x, m.bracket(y, z));
                        FreeElem j2 = m.bracket(y, m.bracket(z, x));
                        FreeElem j3 = m.bracket(z, m.bracket(x, y));
                        for (auto& [mon, c] : j1) c *= Scalar::sign(f, (ext[g].degree + 1) * (ext[k].degree + 1));
                        for (auto& [mon, c] : j2) c *= Scalar::sign(f, (ext[h].degree + 1) * (ext[g].degree + 1));
                        for (auto& [mon, c] : j3) c *= Scalar::sign(f, (ext[k].degree + 1) * (ext[h].degree + 1));
                        FreeElem sum = add(m, add(m, j1, j2), j3);
                        CHECK(sum.empty());
                    }
                }
            }
    }
}

TEST_CASE("restriction axioms on the F2 model") {
    FreeModel m(Field::F2, {{"x", 1}, {"y", 2}}, 9);
    Field f = Field::F2;
    const auto& ext = m.extended_generators();
    // [ξ(x);y] = [x;[x;y]] on generators
    for (size_t g = 0; g < ext.size(); ++g)
        for (size_t h = 0; h < ext.size(); ++h) {
            if (2 * ext[g].degree + ext[h].degree + 2 > 9) continue;
            if (ext[g].degree < 1) continue;
            FreeElem x = m.gen_elem(static_cast<int>(g)), y = m.gen_elem(static_cast<int>(h));
            CHECK(m.bracket(m.restriction(x), y) == m.bracket(x, m.bracket(x, y)));
        }
    // ξ(xy) = x²ξ(y) + ξ(x)y² + x[x;y]y on generator pairs
    for (size_t g = 0; g < ext.size(); ++g)
        for (size_t h = 0; h < ext.size(); ++h) {
            int deg = ext[g].degree + ext[h].degree;
            if (2 * deg + 1 > 9) continue;
            FreeElem x = m.gen_elem(static_cast<int>(g)), y = m.gen_elem(static_cast<int>(h));
            FreeElem lhs = m.restriction(m.product(x, y));
            FreeElem rhs = m.product(m.product(x, x), m.restriction(y));
            rhs = add(m, rhs, m.product(m.restriction(x), m.product(y, y)));
            rhs = add(m, rhs, m.product(x, m.product(m.bracket(x, y), y)));
            CHECK(lhs == rhs);
        }
    // ξ(kx) = k²ξ(x) over F2 is the statement for k ∈ {0,1}
    FreeElem zero;
    CHECK(m.restriction(zero).empty());
}

TEST_CASE("canonical BV operator on the free model") {
    FreeModel m(Field::Q, {{"x", 2}}, 8);
    Field f = Field::Q;
    // Δ vanishes on the Lie generators
    for (size_t g = 0; g < m.extended_generators().size(); ++g)
        CHECK(m.bv_delta(m.gen_elem(static_cast<int>(g))).empty());
    // Δ(xy) = (−1)^{|x|}[x;y] when Δx = Δy = 0
    FreeElem x = m.gen_elem(0);
    FreeElem lhs = m.bv_delta(m.product(x, x));
    FreeElem rhs = m.bracket(x, x);
    for (auto& [mon, c] : rhs) c *= Scalar::sign(f, 2);
    CHECK(lhs == rhs);
    // Δ² = 0 on every monomial ≤ 8, including x·[x;x] in degree 7
    for (int d = 0; d <= 8; ++d)
        for (const auto& mon : m.monomials(d)) {
            FreeElem e;
            e[mon] = Scalar::one(f);
            CHECK(m.bv_delta(m.bv_delta(e)).empty());
        }
    CHECK(m.monomials(7).size() == 1);  // x·[x;x]
}

TEST_CASE("ad₁ extends as a degree-1 derivation consistently") {
    FreeModel m(Field::Q, {{"x", 2}}, 8);
    FreeElem x = m.gen_elem(0);
    FreeElem xx = m.product(x, x);
    // [x²; y] = x[x;y] + [x;y]x for the bracket generator y = [x;x]
    FreeElem y = m.gen_elem(1);
    FreeElem lhs = m.bracket(xx, y);
    FreeElem rhs = add(m, m.product(x, m.bracket(x, y)), m.product(m.bracket(x, y), x));
    CHECK(lhs == rhs);
}
