#include "cobarlab/hirsch.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace cobarlab {

void TwistingFamily::add_term(int i, int j, int gen, Term term) {
    if (i < 1 || j < 1)
        throw std::runtime_error("E components with a zero side are pinned by the co-unit condition");
    if (static_cast<int>(term.left.size()) != i || static_cast<int>(term.right.size()) != j)
        throw std::runtime_error("E term arity mismatch");
    int deg = 0;
    for (int g : term.left) deg += c_->generators().degree(g) - 1;
    for (int g : term.right) deg += c_->generators().degree(g) - 1;
    if (deg != c_->generators().degree(gen) - 1)
        throw std::runtime_error("E term is not degree 0 on the desuspension");
    if (term.c.is_zero()) return;
    comps_[{i, j}][gen].push_back(std::move(term));
}

const std::vector<TwistingFamily::Term>& TwistingFamily::component(int i, int j, int gen) const {
    static const std::vector<Term> kEmpty;
    auto it = comps_.find({i, j});
    if (it == comps_.end()) return kEmpty;
    auto jt = it->second.find(gen);
    return jt == it->second.end() ? kEmpty : jt->second;
}

std::vector<std::pair<int, int>> TwistingFamily::supported() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [ij, m] : comps_)
        if (!m.empty()) out.push_back(ij);
    return out;
}

bool TwistingFamily::has_left_higher() const {
    for (const auto& [ij, m] : comps_)
        if (ij.first >= 2 && !m.empty()) return true;
    return false;
}

std::pair<DgCoalgebra, TwistingFamily> parse_family(const std::string& text) {
    DgCoalgebra c = parse_coalgebra(text);
    TwistingFamily fam(nullptr);
    // rebind below once c has its final address; parse into a staging list
    struct Staged {
        int i, j, gen;
        TwistingFamily::Term term;
    };
    std::vector<Staged> staged;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw) || kw != "E") continue;
        int i = 0, j = 0;
        std::string colon, gen_name, eq;
        if (!(ls >> i >> j >> colon >> gen_name >> eq) || colon != ":" || eq != "=")
            throw ParseError(lineno, "expected: E <i> <j> : <gen> = <terms>");
        int gen = c.generators().id_of(gen_name);
        if (gen < 0) throw ParseError(lineno, "unknown generator '" + gen_name + "'");
        std::string rhs;
        std::getline(ls, rhs);
        std::string term;
        std::istringstream ts(rhs);
        std::vector<std::string> terms;
        {
            std::string cur;
            for (char ch : rhs) {
                if (ch == '+') {
                    terms.push_back(cur);
                    cur.clear();
                } else
                    cur += ch;
            }
            terms.push_back(cur);
        }
        for (auto& t : terms) {
            std::string body = t;
            Scalar coef = Scalar::one(c.field());
            auto star = body.find('*');
            if (star != std::string::npos) {
                std::string cs = body.substr(0, star);
                cs.erase(0, cs.find_first_not_of(" \t"));
                cs.erase(cs.find_last_not_of(" \t") + 1);
                coef = Scalar::from_int(c.field(), std::stol(cs));
                body = body.substr(star + 1);
            }
            auto semi = body.find(';');
            if (semi == std::string::npos) throw ParseError(lineno, "E term needs '<left> ; <right>'");
            auto split_words = [&](std::string s) {
                std::vector<int> out;
                std::string cur;
                s += '|';
                for (char ch : s) {
                    if (ch == '|') {
                        cur.erase(0, cur.find_first_not_of(" \t"));
                        cur.erase(cur.find_last_not_of(" \t") + 1);
                        if (!cur.empty()) {
                            int g = c.generators().id_of(cur);
                            if (g < 0) throw ParseError(lineno, "unknown generator '" + cur + "'");
                            out.push_back(g);
                        }
                        cur.clear();
                    } else
                        cur += ch;
                }
                return out;
            };
            TwistingFamily::Term tm;
            tm.c = coef;
            tm.left = split_words(body.substr(0, semi));
            tm.right = split_words(body.substr(semi + 1));
            staged.push_back({i, j, gen, std::move(tm)});
        }
    }
    std::pair<DgCoalgebra, TwistingFamily> out{std::move(c), TwistingFamily(nullptr)};
    out.second = TwistingFamily(&out.first);
    for (auto& s : staged) out.second.add_term(s.i, s.j, s.gen, std::move(s.term));
    return out;
}

WordTensor nabla_e(const CobarAlgebra& a, const TwistingFamily& fam, const Word& w) {
    Field f = a.field();
    const DgCoalgebra& c = fam.coalgebra();
    WordTensor acc(f, &a.letters(), 2);
    acc.add({Word{}, Word{}}, Scalar::one(f));
    for (int letter : w) {
        int gen = c.generators().id_of(a.letters().name(letter));
        WordTensor contrib(f, &a.letters(), 2);
        // identity components E^{0,1} and E^{1,0}
        contrib.add({Word{}, Word{letter}}, Scalar::one(f));
        contrib.add({Word{letter}, Word{}}, Scalar::one(f));
        for (const auto& ij : fam.supported()) {
            for (const auto& term : fam.component(ij.first, ij.second, gen)) {
                Word left, right;
                for (int g : term.left) left.push_back(a.letters().id_of(c.generators().name(g)));
                for (int g : term.right) right.push_back(a.letters().id_of(c.generators().name(g)));
                contrib.add({left, right}, term.c);
            }
        }
        acc = tensor_algebra_mul(acc, contrib, a.letters());
    }
    return acc;
}

HirschReport check_hirsch(const DgCoalgebra& c, const TwistingFamily& fam, int max_degree) {
    HirschReport rep;
    auto a = CobarAlgebra::cobar(c, max_degree);
    Field f = c.field();
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (rep.first_failure.empty()) rep.first_failure = what;
    };

    auto nab = [&](const Word& w) { return nabla_e(*a, fam, w); };

    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& w : a->words(n)) {
            WordTensor cop = nab(w);
            std::string wname = word_str(w, a->letters());

            // co-unit law
            WordSum left(f, &a->letters()), right(f, &a->letters());
            for (const auto& [slots, cc] : cop) {
                if (slots[0].empty()) left.add(slots[1], cc);
                if (slots[1].empty()) right.add(slots[0], cc);
            }
            WordSum self = a->word_sum(w);
            if (!(left == self) || !(right == self)) fail(rep.counit, "counit at " + wname);

            // Leibniz: (d⊗1 + 1⊗d)∇_E = ∇_E d
            WordTensor dl(f, &a->letters(), 2), dr(f, &a->letters(), 2);
            for (const auto& [slots, cc] : cop) {
                for (const auto& [dw, dc] : a->d_word(slots[0])) dl.add({dw, slots[1]}, cc * dc);
                Scalar sg = Scalar::sign(f, word_degree(slots[0], a->letters()));
                for (const auto& [dw, dc] : a->d_word(slots[1])) dl.add({slots[0], dw}, cc * dc * sg);
            }
            for (const auto& [dw, dc] : a->d_word(w)) dr.add_tensor(nab(dw), dc);
            if (!(dl == dr)) fail(rep.leibniz, "Leibniz equation at " + wname);

            // coassociativity
            WordTensor lhs(f, &a->letters(), 3), rhs(f, &a->letters(), 3);
            for (const auto& [slots, cc] : cop) {
                for (const auto& [s2, c2] : nab(slots[0])) lhs.add({s2[0], s2[1], slots[1]}, cc * c2);
                for (const auto& [s2, c2] : nab(slots[1])) rhs.add({slots[0], s2[0], s2[1]}, cc * c2);
            }
            if (!(lhs == rhs)) fail(rep.coassoc, "coassociativity at " + wname);

            // left co-ideal: left factors never longer than the input
            for (const auto& [slots, cc] : cop) {
                (void)cc;
                if (slots[0].size() > w.size()) {
                    fail(rep.left_coideal, "left co-ideal at " + wname);
                    break;
                }
            }
        }
    }

    // Prop 6.3 equivalence, both directions, on this family
    bool higher = fam.has_left_higher();
    rep.leftsided_iff = (rep.left_coideal == !higher);
    if (!rep.leftsided_iff && rep.first_failure.empty())
        rep.first_failure = "left-sided condition does not match the E-support";

    // (6.3): the cocommutativity-homotopy residual for ∇₁ = E^{1,1},
    // evaluated on the desuspended generators; both twist conventions are
    // reported, neither is asserted.
    {
        auto letter_of = [&](int g) { return a->letters().id_of(c.generators().name(g)); };
        for (int g = 0; g < c.n_generators() && c.generators().degree(g) <= max_degree + 1; ++g) {
            // split the letter differential into lengths 1 and 2
            WordSum d1(f, &a->letters());
            WordTensor d2(f, &a->letters(), 2);
            for (const auto& [dw, dc] : a->letter_differential(letter_of(g))) {
                if (dw.size() == 1) d1.add(dw, dc);
                else if (dw.size() == 2) d2.add({{dw[0]}, {dw[1]}}, dc);
            }
            // lhs = d_⊗ ∇₁(g) − ∇₁(d_{C̄} g)
            WordTensor lhs(f, &a->letters(), 2);
            for (const auto& term : fam.component(1, 1, g)) {
                int lg = letter_of(term.left[0]), rg = letter_of(term.right[0]);
                for (const auto& [dw, dc] : a->letter_differential(lg)) {
                    if (dw.size() != 1) continue;
                    lhs.add({dw, {rg}}, term.c * dc);
                }
                Scalar sg = Scalar::sign(f, a->letters().degree(lg));
                for (const auto& [dw, dc] : a->letter_differential(rg)) {
                    if (dw.size() != 1) continue;
                    lhs.add({{lg}, dw}, term.c * dc * sg);
                }
            }
            for (const auto& [dw, dc] : d1) {
                int dg = c.generators().id_of(a->letters().name(dw[0]));
                for (const auto& term : fam.component(1, 1, dg)) {
                    lhs.add({{letter_of(term.left[0])}, {letter_of(term.right[0])}}, -dc * term.c);
                }
            }
            // rhs, signed and unsigned twists of the coproduct part
            WordTensor rs(f, &a->letters(), 2), ru(f, &a->letters(), 2);
            for (const auto& [slots, cc] : d2) {
                rs.add(slots, cc);
                ru.add(slots, cc);
                int dl = word_degree(slots[0], a->letters());
                int drr = word_degree(slots[1], a->letters());
                rs.add({slots[1], slots[0]}, -cc * Scalar::sign(f, dl * drr));
                ru.add({slots[1], slots[0]}, cc);
            }
            if (!(lhs == rs)) {
                WordTensor neg(f, &a->letters(), 2);
                neg.add_tensor(rs, Scalar::from_int(f, -1));
                if (!(lhs == neg)) rep.nabla1_homotopy_signed = false;
            }
            if (!(lhs == ru)) {
                WordTensor neg(f, &a->letters(), 2);
                neg.add_tensor(ru, Scalar::from_int(f, -1));
                if (!(lhs == neg)) rep.nabla1_homotopy_unsigned = false;
            }
        }
    }
    return rep;
}

TwistingFamily random_family(const DgCoalgebra& c, uint64_t seed, bool with_higher) {
    std::mt19937_64 rng(seed);
    TwistingFamily fam(&c);
    Field f = c.field();

    // tuples of generators with the prescribed desuspended degree
    auto tuples = [&](int len, int deg) {
        std::vector<std::vector<int>> out;
        std::function<void(std::vector<int>&, int)> rec = [&](std::vector<int>& cur, int rem) {
            if (static_cast<int>(cur.size()) == len) {
                if (rem == 0) out.push_back(cur);
                return;
            }
            for (int g = 0; g < c.n_generators(); ++g) {
                int d = c.generators().degree(g) - 1;
                if (d > rem) continue;
                cur.push_back(g);
                rec(cur, rem - d);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        rec(cur, deg);
        return out;
    };

    auto add_random = [&](int i, int j) {
        bool added = false;
        for (int g = 0; g < c.n_generators(); ++g) {
            int deg = c.generators().degree(g) - 1;
            for (int dl = 1; dl < deg; ++dl) {
                auto ls = tuples(i, dl);
                auto rs = tuples(j, deg - dl);
                if (ls.empty() || rs.empty()) continue;
                if (rng() % 3 != 0 && added) continue;
                TwistingFamily::Term t;
                t.c = Scalar::from_int(f, 1 + static_cast<long>(rng() % 3));
                t.left = ls[rng() % ls.size()];
                t.right = rs[rng() % rs.size()];
                fam.add_term(i, j, g, std::move(t));
                added = true;
            }
        }
        return added;
    };

    int tries = 0;
    bool got_any = false;
    while (tries++ < 8 && !got_any) {
        int i = with_higher ? 2 + static_cast<int>(rng() % 2) : 1;
        int j = 1 + static_cast<int>(rng() % 2);
        got_any = add_random(i, j);
        if (!with_higher && rng() % 2 == 0) add_random(1, 2);
    }
    if (with_higher && !fam.has_left_higher()) {
        // deterministic fallback: force one E^{2,1} term when degrees allow
        for (int g = 0; g < c.n_generators(); ++g) {
            int deg = c.generators().degree(g) - 1;
            for (int dl = 2; dl < deg; ++dl) {
                auto ls = tuples(2, dl);
                auto rs = tuples(1, deg - dl);
                if (ls.empty() || rs.empty()) continue;
                TwistingFamily::Term t;
                t.c = Scalar::one(f);
                t.left = ls[0];
                t.right = rs[0];
                fam.add_term(2, 1, g, std::move(t));
                return fam;
            }
        }
        throw std::runtime_error("random_family: no room for a higher component at these degrees");
    }
    return fam;
}

}  // namespace cobarlab
