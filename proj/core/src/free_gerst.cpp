#include "cobarlab/free_gerst.hpp"

#include <algorithm>
#include <functional>

namespace cobarlab {

namespace {

using TensorRep = std::map<std::vector<int>, Scalar>;

void rep_add(TensorRep& a, const std::vector<int>& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

TensorRep rep_mul(const TensorRep& a, const TensorRep& b) {
    TensorRep out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            rep_add(out, w, ca * cb);
        }
    return out;
}

// series over long long, truncated at N
using Series = std::vector<long long>;

Series mul_series(const Series& a, const Series& b, int n) {
    Series out(n + 1, 0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

Series geometric_factor(int d, long long mult, bool exterior, int n) {
    // (1 − t^d)^{−mult} or (1 + t^d)^{mult}
    Series f(n + 1, 0);
    f[0] = 1;
    Series base(n + 1, 0);
    base[0] = 1;
    if (exterior) {
        if (d <= n) base[d] = 1;
        for (long long k = 0; k < mult; ++k) f = mul_series(f, base, n);
    } else {
        for (int j = 0; j * d <= n; ++j) base[j * d] = 1;
        for (long long k = 0; k < mult; ++k) f = mul_series(f, base, n);
    }
    return f;
}

}  // namespace

FreeModel::FreeModel(Field f, std::vector<std::pair<std::string, int>> w, int maxdeg)
    : field_(f), w_(std::move(w)), maxdeg_(maxdeg) {
    for (const auto& [name, deg] : w_)
        if (deg < 1) throw std::runtime_error("free model: generator '" + name + "' has degree < 1");
    std::sort(w_.begin(), w_.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    sw_degrees_.clear();
    for (const auto& [name, deg] : w_) sw_degrees_.push_back(deg + 1);
    enumerate_trees();
    build_extended();
    build_tensor_reps();
    solve_structure();
    enumerate_monomials();
}

void FreeModel::enumerate_trees() {
    // order: weight-major, then degree, then label; generators first
    auto key = [&](const ElemProduct& t) { return std::make_tuple(t.weight, t.degree, t.label); };
    for (size_t g = 0; g < w_.size(); ++g) {
        ElemProduct t;
        t.leaf = static_cast<int>(g);
        t.degree = w_[g].second;
        t.weight = 1;
        t.label = w_[g].first;
        if (t.degree <= maxdeg_) trees_.push_back(t);
    }
    std::sort(trees_.begin(), trees_.end(),
              [&](const ElemProduct& a, const ElemProduct& b) { return key(a) < key(b); });

    size_t level_start = 0;
    for (int weight = 2;; ++weight) {
        std::vector<ElemProduct> fresh;
        size_t n = trees_.size();
        for (size_t x = 0; x < n; ++x) {
            for (size_t y = x + 1; y < n; ++y) {
                if (trees_[x].weight + trees_[y].weight != weight) continue;
                // admissibility: x < y (index order), and if y = [z;t], z <= x
                if (trees_[y].leaf < 0 && trees_[y].left > static_cast<int>(x)) continue;
                int deg = trees_[x].degree + trees_[y].degree + 1;
                if (deg > maxdeg_) continue;
                ElemProduct t;
                t.left = static_cast<int>(x);
                t.right = static_cast<int>(y);
                t.degree = deg;
                t.weight = weight;
                t.label = "[" + trees_[x].label + ";" + trees_[y].label + "]";
                fresh.push_back(t);
            }
        }
        if (fresh.empty() && weight > 2 * maxdeg_) break;
        std::sort(fresh.begin(), fresh.end(),
                  [&](const ElemProduct& a, const ElemProduct& b) { return key(a) < key(b); });
        trees_.insert(trees_.end(), fresh.begin(), fresh.end());
        level_start = trees_.size();
        if (weight > 2 * maxdeg_) break;
    }
    (void)level_start;

    // over Q, adjoin [w;w] for even-degree elementary products
    if (field_ == Field::Q) {
        size_t n = trees_.size();
        std::vector<ElemProduct> squares;
        for (size_t x = 0; x < n; ++x) {
            if (trees_[x].degree % 2 != 0) continue;
            int deg = 2 * trees_[x].degree + 1;
            if (deg > maxdeg_) continue;
            ElemProduct t;
            t.left = t.right = static_cast<int>(x);
            t.degree = deg;
            t.weight = 2 * trees_[x].weight;
            t.label = "[" + trees_[x].label + ";" + trees_[x].label + "]";
            squares.push_back(t);
        }
        std::sort(squares.begin(), squares.end(),
                  [&](const ElemProduct& a, const ElemProduct& b) { return key(a) < key(b); });
        trees_.insert(trees_.end(), squares.begin(), squares.end());
    }
}

void FreeModel::build_extended() {
    struct Item {
        int degree;
        std::string label;
        int tree;
        int xi;
    };
    std::vector<Item> items;
    for (size_t t = 0; t < trees_.size(); ++t) {
        if (field_ == Field::F2) {
            int deg = trees_[t].degree;
            std::string label = trees_[t].label;
            for (int k = 0; deg <= maxdeg_; ++k) {
                items.push_back({deg, label, static_cast<int>(t), k});
                deg = 2 * deg + 1;
                label = "xi(" + label + ")";
            }
        } else {
            items.push_back({trees_[t].degree, trees_[t].label, static_cast<int>(t), 0});
        }
    }
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.label < b.label;
    });
    std::map<std::pair<int, int>, int> id_of;  // (tree, xi) -> ext id
    for (const auto& it : items) {
        id_of[{it.tree, it.xi}] = static_cast<int>(ext_.size());
        ext_.push_back({it.label, it.degree});
        ext_tree_.push_back(it.tree);
        ext_xi_.push_back(it.xi);
    }
    xi_next_.assign(ext_.size(), -1);
    if (field_ == Field::F2) {
        for (size_t g = 0; g < ext_.size(); ++g) {
            auto it = id_of.find({ext_tree_[g], ext_xi_[g] + 1});
            if (it != id_of.end()) xi_next_[g] = it->second;
        }
    }
}

void FreeModel::build_tensor_reps() {
    std::vector<TensorRep> tree_rep(trees_.size());
    for (size_t t = 0; t < trees_.size(); ++t) {
        if (trees_[t].leaf >= 0) {
            rep_add(tree_rep[t], {trees_[t].leaf}, Scalar::one(field_));
            continue;
        }
        const TensorRep& a = tree_rep[trees_[t].left];
        const TensorRep& b = tree_rep[trees_[t].right];
        int da = trees_[trees_[t].left].degree + 1;
        int db = trees_[trees_[t].right].degree + 1;
        TensorRep out = rep_mul(a, b);
        TensorRep ba = rep_mul(b, a);
        Scalar sg = -Scalar::sign(field_, da * db);
        for (const auto& [w, c] : ba) rep_add(out, w, c * sg);
        tree_rep[t] = std::move(out);
    }
    rep_.resize(ext_.size());
    for (size_t g = 0; g < ext_.size(); ++g) {
        TensorRep r = tree_rep[ext_tree_[g]];
        for (int k = 0; k < ext_xi_[g]; ++k) r = rep_mul(r, r);  // squaring, char 2
        rep_[g] = std::move(r);
    }
}

void FreeModel::solve_structure() {
    // per degree: независимые representatives and a solver for Lie elements
    std::map<int, std::vector<int>> gens_by_degree;
    for (size_t g = 0; g < ext_.size(); ++g) gens_by_degree[ext_[g].degree].push_back(static_cast<int>(g));

    struct DegreeSolver {
        std::vector<int> gens;
        std::map<std::vector<int>, int> word_index;
        Rref rr;
    };
    std::map<int, DegreeSolver> solvers;
    for (const auto& [deg, gens] : gens_by_degree) {
        DegreeSolver s;
        s.gens = gens;
        for (int g : gens)
            for (const auto& [w, c] : rep_[g]) {
                (void)c;
                s.word_index.try_emplace(w, static_cast<int>(s.word_index.size()));
            }
        SparseMat m(field_, static_cast<int>(s.word_index.size()), static_cast<int>(gens.size()));
        for (size_t j = 0; j < gens.size(); ++j)
            for (const auto& [w, c] : rep_[gens[j]]) m.add(s.word_index.at(w), static_cast<int>(j), c);
        s.rr = rref(m);
        if (s.rr.rank() != static_cast<int>(gens.size()))
            throw std::logic_error("free model: extended generators dependent in degree " +
                                   std::to_string(deg) + " (oracle breach)");
        solvers[deg] = std::move(s);
    }

    auto solve_lie = [&](const TensorRep& r, int deg) {
        FreeElem out;
        if (r.empty()) return out;
        auto it = solvers.find(deg);
        if (it == solvers.end()) throw std::logic_error("free model: no generators in degree " + std::to_string(deg));
        const DegreeSolver& s = it->second;
        SparseVec b(field_);
        for (const auto& [w, c] : r) {
            auto jt = s.word_index.find(w);
            if (jt == s.word_index.end())
                throw std::logic_error("free model: bracket leaves the Lie span (oracle breach)");
            b.add(jt->second, c);
        }
        SparseVec y = s.rr.transform.apply(b);
        for (const auto& [row, v] : y.entries()) {
            if (row >= s.rr.rank())
                throw std::logic_error("free model: bracket not in generator span (oracle breach)");
            (void)v;
        }
        for (int i = 0; i < s.rr.rank(); ++i) {
            Scalar c = y.at(i);
            if (c.is_zero()) continue;
            out[{s.gens[s.rr.pivot_cols[i]]}] = c;
        }
        return out;
    };

    for (size_t g = 0; g < ext_.size(); ++g) {
        for (size_t h = g; h < ext_.size(); ++h) {
            int deg = ext_[g].degree + ext_[h].degree + 1;
            if (deg > maxdeg_) continue;
            int dg = ext_[g].degree + 1, dh = ext_[h].degree + 1;
            TensorRep comm = rep_mul(rep_[g], rep_[h]);
            TensorRep hg = rep_mul(rep_[h], rep_[g]);
            Scalar sg = -Scalar::sign(field_, dg * dh);
            for (const auto& [w, c] : hg) rep_add(comm, w, c * sg);
            FreeElem el = solve_lie(comm, deg);
            bracket_table_[{static_cast<int>(g), static_cast<int>(h)}] = el;
            if (h != g) {
                FreeElem sym;
                Scalar flip = -Scalar::sign(field_, (ext_[g].degree + 1) * (ext_[h].degree + 1));
                for (const auto& [m, c] : el) sym[m] = c * flip;
                bracket_table_[{static_cast<int>(h), static_cast<int>(g)}] = sym;
            }
        }
    }
}

void FreeModel::enumerate_monomials() {
    for (int d = 0; d <= maxdeg_; ++d) monomials_[d] = {};
    monomials_[0].push_back({});
    std::function<void(int, int, Monomial&)> rec = [&](int next_gen, int remaining, Monomial& cur) {
        for (int g = next_gen; g < static_cast<int>(ext_.size()); ++g) {
            int d = ext_[g].degree;
            if (d > remaining) continue;
            if (field_ == Field::Q && d % 2 == 1 && !cur.empty() && cur.back() == g) continue;
            cur.push_back(g);
            monomials_[maxdeg_ - (remaining - d)].push_back(cur);
            rec(g, remaining - d, cur);
            cur.pop_back();
        }
    };
    Monomial cur;
    rec(0, maxdeg_, cur);
    for (auto& [d, ms] : monomials_) {
        std::sort(ms.begin(), ms.end());
        auto& idx = monomial_index_[d];
        for (size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = static_cast<int>(i);
    }
}

const std::vector<Monomial>& FreeModel::monomials(int degree) const {
    static const std::vector<Monomial> kEmpty;
    auto it = monomials_.find(degree);
    return it == monomials_.end() ? kEmpty : it->second;
}

int FreeModel::monomial_index(int degree, const Monomial& m) const {
    return monomial_index_.at(degree).at(m);
}

std::vector<long> FreeModel::dims_enumerated() const {
    std::vector<long> out(maxdeg_ + 1, 0);
    for (const auto& [d, ms] : monomials_) out[d] = static_cast<long>(ms.size());
    return out;
}

std::vector<long> FreeModel::dims_pbw() const {
    const int n = maxdeg_ + 1;  // s-degrees go one higher
    // tensor series of T(sW)
    Series p(n + 1, 0);
    for (int d : sw_degrees_)
        if (d <= n) p[d] += 1;
    Series tser(n + 1, 0);
    tser[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long acc = 0;
        for (int k = 1; k <= m; ++k) acc += p[k] * tser[m - k];
        tser[m] = acc;
    }
    // invert the PBW factorization for the Lie dimensions c_m
    std::vector<long long> c(n + 1, 0);
    Series prod(n + 1, 0);
    prod[0] = 1;
    for (int m = 1; m <= n; ++m) {
        c[m] = tser[m] - prod[m];
        if (c[m] < 0) throw std::logic_error("PBW inversion produced a negative dimension");
        if (c[m] == 0) continue;
        bool exterior = (field_ == Field::Q) && (m % 2 == 1);
        prod = mul_series(prod, geometric_factor(m, c[m], exterior, n), n);
    }
    // assemble the symmetric-algebra series on the desuspended Lie dims
    Series model(maxdeg_ + 1, 0);
    model[0] = 1;
    for (int m = 1; m <= maxdeg_; ++m) {
        long long lm = c[m + 1];
        if (lm == 0) continue;
        if (field_ == Field::F2) {
            for (long long d = m; d <= maxdeg_; d = 2 * d + 1)
                model = mul_series(model, geometric_factor(static_cast<int>(d), lm, false, maxdeg_), maxdeg_);
        } else {
            model = mul_series(model, geometric_factor(m, lm, m % 2 == 1, maxdeg_), maxdeg_);
        }
    }
    return std::vector<long>(model.begin(), model.end());
}

FreeElem FreeModel::gen_elem(int g) const {
    FreeElem e;
    e[{g}] = Scalar::one(field_);
    return e;
}

int FreeModel::degree_of(const FreeElem& e) const {
    int deg = -1;
    for (const auto& [m, c] : e) {
        (void)c;
        int d = 0;
        for (int g : m) d += ext_[g].degree;
        if (deg < 0) deg = d;
        else if (deg != d) throw std::logic_error("free model: inhomogeneous element");
    }
    return deg < 0 ? 0 : deg;
}

std::pair<Monomial, Scalar> FreeModel::normalize(const std::vector<int>& gens) const {
    Monomial m = gens;
    int parity = 0;
    // insertion sort with Koszul signs
    for (size_t i = 1; i < m.size(); ++i) {
        for (size_t j = i; j > 0 && m[j - 1] > m[j]; --j) {
            parity += ext_[m[j - 1]].degree * ext_[m[j]].degree;
            std::swap(m[j - 1], m[j]);
        }
    }
    if (field_ == Field::Q) {
        for (size_t i = 1; i < m.size(); ++i)
            if (m[i] == m[i - 1] && ext_[m[i]].degree % 2 == 1)
                return {Monomial{}, Scalar::zero(field_)};
    }
    return {m, Scalar::sign(field_, parity)};
}

FreeElem FreeModel::product(const FreeElem& a, const FreeElem& b) const {
    FreeElem out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            std::vector<int> gens = ma;
            gens.insert(gens.end(), mb.begin(), mb.end());
            auto [m, sg] = normalize(gens);
            if (sg.is_zero()) continue;
            Scalar c = ca * cb * sg;
            auto [it, fresh] = out.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    return out;
}

FreeElem FreeModel::gen_bracket(int g, int h) const {
    auto it = bracket_table_.find({g, h});
    if (it == bracket_table_.end()) throw std::logic_error("free model: bracket outside cutoff");
    return it->second;
}

namespace {
void elem_add(FreeElem& a, const FreeElem& b, const Scalar& c) {
    for (const auto& [m, v] : b) {
        Scalar add = v * c;
        auto [it, fresh] = a.try_emplace(m, add);
        if (!fresh) {
            it->second += add;
            if (it->second.is_zero()) a.erase(it);
        }
    }
}
}  // namespace

FreeElem FreeModel::monomial_bracket(const Monomial& a, const Monomial& b) const {
    // {x; 1} = 0
    if (a.empty() || b.empty()) return {};
    Field f = field_;
    int da = 0, db = 0;
    for (int g : a) da += ext_[g].degree;
    for (int g : b) db += ext_[g].degree;
    if (b.size() > 1) {
        // {x; h·b'} = {x;h}·b' + (−1)^{(|x|+1)|h|} h·{x;b'}
        int h = b.front();
        Monomial rest(b.begin() + 1, b.end());
        FreeElem hb;
        hb[{h}] = Scalar::one(f);
        FreeElem rb;
        rb[rest] = Scalar::one(f);
        FreeElem out = product(monomial_bracket(a, {h}), rb);
        FreeElem t2 = product(hb, monomial_bracket(a, rest));
        elem_add(out, t2, Scalar::sign(f, (da + 1) * ext_[h].degree));
        return out;
    }
    if (a.size() > 1) {
        // antisymmetry to move the single generator left
        FreeElem out = monomial_bracket(b, a);
        FreeElem res;
        elem_add(res, out, -Scalar::sign(f, (da + 1) * (db + 1)));
        return res;
    }
    return gen_bracket(a[0], b[0]);
}

FreeElem FreeModel::bracket(const FreeElem& a, const FreeElem& b) const {
    FreeElem out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) elem_add(out, monomial_bracket(ma, mb), ca * cb);
    return out;
}

FreeElem FreeModel::restriction(const FreeElem& a) const {
    if (field_ != Field::F2) throw std::logic_error("restriction is defined over F2 only");
    // ξ(Σ mᵢ) = Σ ξ(mᵢ) + Σ_{i<j} [mᵢ; mⱼ]
    std::vector<Monomial> ms;
    for (const auto& [m, c] : a) {
        (void)c;  // F2: coefficients are 1
        ms.push_back(m);
    }
    FreeElem out;
    std::function<FreeElem(const Monomial&)> xi_mono = [&](const Monomial& m) -> FreeElem {
        if (m.empty()) return {};
        if (m.size() == 1) {
            int nxt = xi_next_[m[0]];
            if (nxt < 0) throw std::logic_error("free model: restriction leaves the cutoff");
            FreeElem e;
            e[{nxt}] = Scalar::one(field_);
            return e;
        }
        // ξ(x·y) = x²ξ(y) + ξ(x)y² + x[x;y]y
        Monomial x{m[0]};
        Monomial y(m.begin() + 1, m.end());
        FreeElem ex, ey, exy;
        ex[x] = Scalar::one(field_);
        ey[y] = Scalar::one(field_);
        FreeElem out2 = product(product(ex, ex), xi_mono(y));
        elem_add(out2, product(xi_mono(x), product(ey, ey)), Scalar::one(field_));
        elem_add(out2, product(ex, product(monomial_bracket(x, y), ey)), Scalar::one(field_));
        return out2;
    };
    for (size_t i = 0; i < ms.size(); ++i) {
        elem_add(out, xi_mono(ms[i]), Scalar::one(field_));
        for (size_t j = i + 1; j < ms.size(); ++j)
            elem_add(out, monomial_bracket(ms[i], ms[j]), Scalar::one(field_));
    }
    return out;
}

FreeElem FreeModel::bv_delta(const FreeElem& a) const {
    if (field_ != Field::Q) throw std::logic_error("the canonical BV operator is built over Q");
    FreeElem out;
    std::function<FreeElem(const Monomial&)> dm = [&](const Monomial& m) -> FreeElem {
        if (m.size() <= 1) return {};  // Δ vanishes on L₁ (trivial generator action)
        // Δ(g·y) = (−1)^{|g|}( g·Δ(y) + [g; y] )  given Δ(g) = 0
        Monomial g{m[0]};
        Monomial y(m.begin() + 1, m.end());
        FreeElem ge;
        ge[g] = Scalar::one(field_);
        FreeElem r = product(ge, dm(y));
        elem_add(r, monomial_bracket(g, y), Scalar::one(field_));
        FreeElem res;
        elem_add(res, r, Scalar::sign(field_, ext_[m[0]].degree));
        return res;
    };
    for (const auto& [m, c] : a) elem_add(out, dm(m), c);
    return out;
}

SparseVec FreeModel::vec_of(const FreeElem& e, int degree) const {
    SparseVec v(field_);
    for (const auto& [m, c] : e) {
        int d = 0;
        for (int g : m) d += ext_[g].degree;
        if (d != degree) throw std::logic_error("free model vec_of: inhomogeneous element");
        v.add(monomial_index(degree, m), c);
    }
    return v;
}

}  // namespace cobarlab
