#include "cobarlab/dgc.hpp"

#include "cobarlab/contraction.hpp"

#include <map>
#include <random>
#include <sstream>

namespace cobarlab {

int DgCoalgebra::add_generator(const std::string& name, int degree) {
    if (degree < 2)
        throw std::runtime_error("generator '" + name + "' has degree " + std::to_string(degree) +
                                 "; 1-connectivity requires degree >= 2");
    int id = gens_.add(name, degree);
    if (id >= static_cast<int>(diff_.size())) {
        diff_.resize(id + 1);
        cop_.resize(id + 1);
    }
    return id;
}

void DgCoalgebra::set_differential(int gen, std::vector<DiffTerm> terms) {
    std::erase_if(terms, [](const DiffTerm& t) { return t.c.is_zero(); });
    diff_[gen] = std::move(terms);
}

void DgCoalgebra::set_coproduct(int gen, std::vector<CopTerm> terms) {
    std::erase_if(terms, [](const CopTerm& t) { return t.c.is_zero(); });
    cop_[gen] = std::move(terms);
}

const std::vector<DgCoalgebra::DiffTerm>& DgCoalgebra::differential_of(int gen) const {
    return diff_[gen];
}

const std::vector<DgCoalgebra::CopTerm>& DgCoalgebra::reduced_coproduct_of(int gen) const {
    return cop_[gen];
}

bool DgCoalgebra::primitive() const {
    for (const auto& c : cop_)
        if (!c.empty()) return false;
    return true;
}

namespace {

// Linear data kept as coefficient maps keyed by generator (or generator
// pairs/triples) for exact comparisons.
using Vec1 = std::map<int, Scalar>;
using Vec2 = std::map<std::pair<int, int>, Scalar>;
using Vec3 = std::map<std::tuple<int, int, int>, Scalar>;

template <class M, class K>
void acc(M& m, const K& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

void DgCoalgebra::validate() const {
    Field f = field_;
    // degree bookkeeping of d and the reduced coproduct
    for (int g = 0; g < n_generators(); ++g) {
        int dg = gens_.degree(g);
        for (const auto& t : diff_[g]) {
            if (gens_.degree(t.gen) != dg - 1)
                throw std::runtime_error("differential of '" + gens_.name(g) + "' is not of degree -1");
        }
        for (const auto& t : cop_[g]) {
            if (gens_.degree(t.left) + gens_.degree(t.right) != dg)
                throw std::runtime_error("coproduct of '" + gens_.name(g) + "' is not degree 0");
        }
    }
    // d² = 0
    for (int g = 0; g < n_generators(); ++g) {
        Vec1 dd;
        for (const auto& t : diff_[g])
            for (const auto& u : diff_[t.gen]) acc(dd, u.gen, t.c * u.c);
        if (!dd.empty())
            throw std::runtime_error("d² != 0 on generator '" + gens_.name(g) + "'");
    }
    // coderivation: ∇̄(dc) = (d⊗1 + 1⊗d)∇̄(c), with (1⊗d)(x⊗y) = (−1)^{|x|} x⊗dy
    for (int g = 0; g < n_generators(); ++g) {
        Vec2 lhs, rhs;
        for (const auto& t : diff_[g])
            for (const auto& p : cop_[t.gen]) acc(lhs, std::make_pair(p.left, p.right), t.c * p.c);
        for (const auto& p : cop_[g]) {
            for (const auto& t : diff_[p.left]) acc(rhs, std::make_pair(t.gen, p.right), p.c * t.c);
            Scalar sg = Scalar::sign(f, gens_.degree(p.left));
            for (const auto& t : diff_[p.right]) acc(rhs, std::make_pair(p.left, t.gen), p.c * t.c * sg);
        }
        if (lhs != rhs)
            throw std::runtime_error("differential is not a coderivation at generator '" + gens_.name(g) + "'");
    }
    // coassociativity of the reduced coproduct
    for (int g = 0; g < n_generators(); ++g) {
        Vec3 lhs, rhs;
        for (const auto& p : cop_[g]) {
            for (const auto& q : cop_[p.left]) acc(lhs, std::make_tuple(q.left, q.right, p.right), p.c * q.c);
            for (const auto& q : cop_[p.right]) acc(rhs, std::make_tuple(p.left, q.left, q.right), p.c * q.c);
        }
        if (lhs != rhs)
            throw std::runtime_error("coproduct is not coassociative at generator '" + gens_.name(g) + "'");
    }
}

ChainComplex DgCoalgebra::chain_complex(int max_degree) const {
    GradedSpace space(max_degree);
    space.add_basis_element(0, "1");
    for (int g = 0; g < n_generators(); ++g)
        if (gens_.degree(g) <= max_degree) space.add_basis_element(gens_.degree(g), gens_.name(g));
    ChainComplex c(std::move(space), field_);
    for (int g = 0; g < n_generators(); ++g) {
        int dg = gens_.degree(g);
        if (dg > max_degree) continue;
        int src = c.space().index_of(dg, gens_.name(g));
        for (const auto& t : diff_[g]) {
            int dst = c.space().index_of(dg - 1, gens_.name(t.gen));
            c.differential().add_entry(dg, src, dst, t.c);
        }
    }
    return c;
}

namespace {

struct Tok {
    std::string coef;  // may be empty
    std::string body;
};

std::vector<std::string> split_terms(const std::string& rhs) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : rhs) {
        if (ch == '+') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

Scalar parse_coef(const std::string& s, Field f, int line) {
    try {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return Scalar::from_int(f, v);
    } catch (const std::exception&) {
        throw ParseError(line, "bad integer coefficient '" + s + "'");
    }
}

// term := [int '*'] body
std::pair<Scalar, std::string> parse_term(const std::string& raw, Field f, int line) {
    std::string t = strip(raw);
    if (t.empty()) throw ParseError(line, "empty term");
    auto star = t.find('*');
    if (star == std::string::npos) return {Scalar::one(f), t};
    return {parse_coef(strip(t.substr(0, star)), f, line), strip(t.substr(star + 1))};
}

}  // namespace

DgCoalgebra parse_coalgebra(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    Field field = Field::Q;
    int maxdeg = 10;
    bool primitive_flag = false;
    struct PendingLine {
        int line;
        std::string kind, name, rhs;
    };
    std::vector<PendingLine> pend;
    std::vector<std::pair<std::string, int>> gens;

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "field") {
            std::string fs;
            ls >> fs;
            try {
                field = parse_field(fs);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kw == "maxdeg") {
            if (!(ls >> maxdeg) || maxdeg < 2) throw ParseError(lineno, "maxdeg needs an integer >= 2");
        } else if (kw == "gen") {
            std::string name;
            int deg = 0;
            if (!(ls >> name >> deg)) throw ParseError(lineno, "expected: gen <name> <degree>");
            if (deg < 2) throw ParseError(lineno, "generator '" + name + "' of degree " + std::to_string(deg) + " violates 1-connectivity (C_n = 0 for n < 2 on C⁺)");
            gens.emplace_back(name, deg);
        } else if (kw == "primitive") {
            primitive_flag = true;
        } else if (kw == "d" || kw == "cop") {
            std::string name, eq;
            ls >> name >> eq;
            if (eq != "=") throw ParseError(lineno, "expected '=' after generator name");
            std::string rhs;
            std::getline(ls, rhs);
            pend.push_back({lineno, kw, name, rhs});
        } else if (kw.rfind("E", 0) == 0 && kw.size() == 1) {
            // twisting-family lines are handled by the hirsch module; skip here
            continue;
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }

    DgCoalgebra c(field, maxdeg);
    for (auto& [name, deg] : gens) {
        if (c.generators().id_of(name) >= 0) throw std::runtime_error("duplicate generator '" + name + "'");
        c.add_generator(name, deg);
    }
    for (const auto& p : pend) {
        int g = c.generators().id_of(p.name);
        if (g < 0) throw ParseError(p.line, "unknown generator '" + p.name + "'");
        if (p.kind == "d") {
            std::vector<DgCoalgebra::DiffTerm> terms;
            for (const auto& t : split_terms(p.rhs)) {
                auto [coef, body] = parse_term(t, field, p.line);
                int tg = c.generators().id_of(body);
                if (tg < 0) throw ParseError(p.line, "unknown generator '" + body + "'");
                terms.push_back({coef, tg});
            }
            c.set_differential(g, std::move(terms));
        } else {
            if (primitive_flag) throw ParseError(p.line, "'cop' conflicts with 'primitive'");
            std::vector<DgCoalgebra::CopTerm> terms;
            for (const auto& t : split_terms(p.rhs)) {
                auto [coef, body] = parse_term(t, field, p.line);
                auto bar = body.find('|');
                if (bar == std::string::npos) throw ParseError(p.line, "coproduct term needs <g1>|<g2>");
                std::string l = strip(body.substr(0, bar)), r = strip(body.substr(bar + 1));
                int lg = c.generators().id_of(l), rg = c.generators().id_of(r);
                if (lg < 0) throw ParseError(p.line, "unknown generator '" + l + "'");
                if (rg < 0) throw ParseError(p.line, "unknown generator '" + r + "'");
                terms.push_back({coef, lg, rg});
            }
            c.set_coproduct(g, std::move(terms));
        }
    }
    c.validate();
    return c;
}

DgCoalgebra double_suspension(const std::vector<std::pair<std::string, int>>& w, Field f,
                              int maxdeg) {
    DgCoalgebra c(f, maxdeg);
    for (const auto& [name, deg] : w) {
        if (deg < 1)
            throw std::runtime_error("double_suspension: class '" + name + "' has degree " +
                                     std::to_string(deg) + " < 1");
        c.add_generator(shifted_name(name, 2), deg + 2);
    }
    c.validate();
    return c;
}

DgCoalgebra homology_coalgebra(const DgCoalgebra& c) {
    int n = c.maxdeg();
    // one degree of headroom keeps the top-degree homology honest
    ChainComplex cx = c.chain_complex(n + 1);
    Contraction k = build_contraction(cx);
    Field f = c.field();

    // Basis of H in each degree with deterministic names.
    DgCoalgebra h(f, n);
    // index (degree, homology index) -> generator id in h
    std::map<std::pair<int, int>, int> hid;
    for (int d = 2; d <= n; ++d) {
        int dim = k.small.space().dim(d);
        for (int i = 0; i < dim; ++i)
            hid[{d, i}] = h.add_generator(k.small.space().names(d)[i], d);
    }

    for (int d = 2; d <= n; ++d) {
        int dim = k.small.space().dim(d);
        for (int i = 0; i < dim; ++i) {
            // i(h) as a chain, then (p⊗p)∇̄, expressed in the H basis.
            SparseVec chain = k.incl.apply(d, SparseVec::unit(f, i), f);
            std::map<std::pair<int, int>, Scalar> pairs;  // (left gen, right gen) in C
            for (const auto& [ci, cv] : chain.entries()) {
                const std::string& gname = cx.space().names(d)[ci];
                int g = c.generators().id_of(gname);
                if (g < 0) continue;  // the unit carries no reduced coproduct
                for (const auto& t : c.reduced_coproduct_of(g)) {
                    auto key = std::make_pair(t.left, t.right);
                    auto [it, fresh] = pairs.try_emplace(key, cv * t.c);
                    if (!fresh) it->second += cv * t.c;
                }
            }
            std::vector<DgCoalgebra::CopTerm> terms;
            for (const auto& [pr, coef] : pairs) {
                if (coef.is_zero()) continue;
                int dl = c.generators().degree(pr.first), dr = c.generators().degree(pr.second);
                SparseVec l = k.proj.apply(dl, SparseVec::unit(f, cx.space().index_of(dl, c.generators().name(pr.first))), f);
                SparseVec r = k.proj.apply(dr, SparseVec::unit(f, cx.space().index_of(dr, c.generators().name(pr.second))), f);
                for (const auto& [li, lv] : l.entries())
                    for (const auto& [ri, rv] : r.entries())
                        terms.push_back({coef * lv * rv, hid.at({dl, li}), hid.at({dr, ri})});
            }
            // collapse duplicates
            std::map<std::pair<int, int>, Scalar> merged;
            for (auto& t : terms) {
                auto [it, fresh] = merged.try_emplace(std::make_pair(t.left, t.right), t.c);
                if (!fresh) it->second += t.c;
            }
            std::vector<DgCoalgebra::CopTerm> out;
            for (const auto& [pr, coef] : merged)
                if (!coef.is_zero()) out.push_back({coef, pr.first, pr.second});
            h.set_coproduct(hid.at({d, i}), std::move(out));
        }
    }
    h.validate();
    return h;
}

DgCoalgebra random_primitive_coalgebra(uint64_t seed, int maxdeg, int min_gen_degree) {
    std::mt19937_64 rng(seed);
    Field f = (rng() % 2 == 0) ? Field::F2 : Field::Q;
    DgCoalgebra c(f, maxdeg);
    // A few acyclic pairs d(v) = u plus cross terms into same-degree cycles,
    // and some stray cycles; d² = 0 holds because d vanishes on every target.
    int n_pairs = 1 + static_cast<int>(rng() % 3);
    std::vector<int> cycle_ids;
    std::vector<int> cycle_degs;
    for (int i = 0; i < n_pairs; ++i) {
        int deg = min_gen_degree + static_cast<int>(rng() % 3);
        int u = c.add_generator("u" + std::to_string(i), deg);
        int v = c.add_generator("v" + std::to_string(i), deg + 1);
        std::vector<DgCoalgebra::DiffTerm> terms{{Scalar::one(f), u}};
        for (size_t j = 0; j < cycle_ids.size(); ++j) {
            if (cycle_degs[j] == deg && rng() % 2 == 0)
                terms.push_back({Scalar::from_int(f, 1 + static_cast<long>(rng() % 3)), cycle_ids[j]});
        }
        c.set_differential(v, std::move(terms));
        cycle_ids.push_back(u);
        cycle_degs.push_back(deg);
    }
    int n_free = static_cast<int>(rng() % 3);
    for (int i = 0; i < n_free; ++i) {
        int deg = min_gen_degree + 1 + static_cast<int>(rng() % 3);
        c.add_generator("w" + std::to_string(i), deg);
    }
    c.validate();
    return c;
}

}  // namespace cobarlab
