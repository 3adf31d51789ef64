#include "cobarlab/transfer.hpp"

#include <functional>

namespace cobarlab {

namespace {

using CKey = std::pair<int, int>;  // (degree, index) in a chain complex space
using CTuple = std::vector<CKey>;
using CTensor = std::map<CTuple, Scalar>;

void ct_add(CTensor& t, const CTuple& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

struct Stairs {
    const DgCoalgebra& c;
    const Contraction& k;
    int max_degree;

    // reduced coproduct of a chain-space element, as pairs of generator keys
    CTensor nabla_at(const CTuple& t, size_t slot) const {
        CTensor out;
        const auto& space = k.big.space();
        auto [deg, idx] = t[slot];
        const std::string& name = space.names(deg)[idx];
        int g = c.generators().id_of(name);
        if (g < 0) return out;  // the unit is primitive
        for (const auto& term : c.reduced_coproduct_of(g)) {
            CTuple nt;
            for (size_t j = 0; j < slot; ++j) nt.push_back(t[j]);
            int dl = c.generators().degree(term.left);
            int dr = c.generators().degree(term.right);
            nt.emplace_back(dl, space.index_of(dl, c.generators().name(term.left)));
            nt.emplace_back(dr, space.index_of(dr, c.generators().name(term.right)));
            for (size_t j = slot + 1; j < t.size(); ++j) nt.push_back(t[j]);
            ct_add(out, nt, term.c);
        }
        return out;
    }

    // ∇̄ν at one slot: ν has degree +1 and crosses the preceding slots
    CTensor nabla_nu_at(const CTensor& t, size_t slot) const {
        Field f = c.field();
        CTensor out;
        for (const auto& [tup, coef] : t) {
            int prefix = 0;
            for (size_t j = 0; j < slot; ++j) prefix += tup[j].first;
            auto [deg, idx] = tup[slot];
            SparseVec nu = k.nu.apply(deg, SparseVec::unit(f, idx), f);
            for (const auto& [ni, nc] : nu.entries()) {
                CTuple mid = tup;
                mid[slot] = {deg + 1, ni};
                CTensor expanded = nabla_at(mid, slot);
                for (const auto& [nt, c2] : expanded)
                    ct_add(out, nt, coef * nc * c2 * Scalar::sign(f, prefix));
            }
        }
        return out;
    }

    // one staircase stage: Σ_q (−1)^q (Id^{⊗q} ⊗ ∇̄ν ⊗ Id^{…})
    CTensor stage(const CTensor& t, int arity) const {
        Field f = c.field();
        CTensor out;
        for (int q = 0; q < arity; ++q) {
            CTensor part = nabla_nu_at(t, q);
            for (const auto& [tup, coef] : part) ct_add(out, tup, coef * Scalar::sign(f, q));
        }
        return out;
    }

    CTensor project_all(const CTensor& t) const {
        Field f = c.field();
        CTensor out;
        for (const auto& [tup, coef] : t) {
            std::function<void(size_t, CTuple&, const Scalar&)> rec = [&](size_t j, CTuple& cur,
                                                                          const Scalar& acc) {
                if (j == tup.size()) {
                    ct_add(out, cur, acc);
                    return;
                }
                auto [deg, idx] = tup[j];
                SparseVec pv = k.proj.apply(deg, SparseVec::unit(f, idx), f);
                for (const auto& [pi, pc] : pv.entries()) {
                    cur.push_back({deg, pi});
                    rec(j + 1, cur, acc * pc);
                    cur.pop_back();
                }
            };
            CTuple cur;
            rec(0, cur, coef);
        }
        return out;
    }
};

}  // namespace

bool CoOperation::is_zero() const {
    for (const auto& [src, terms] : images)
        if (!terms.empty()) return false;
    return true;
}

TransferResult transfer_ainfty(const DgCoalgebra& c, const Contraction& k, int max_degree) {
    Field f = c.field();
    Stairs st{c, k, max_degree};
    TransferResult out;

    // ∂_i: output degree = source degree + (i−1); materialize while any
    // source degree ≤ max_degree can contribute
    int max_i = 1;
    for (int i = 1;; ++i) {
        // smallest possible output degree of ∂_i is 2(i+1) − ... estimate via
        // generator degrees: each output slot has degree ≥ 2
        if (2 * (i + 1) > max_degree + i) break;
        max_i = i;
        if (i > max_degree) break;
    }
    out.max_arity = max_i;

    for (int i = 1; i <= max_i; ++i) {
        CoOperation op;
        op.arity = i + 1;
        for (int d = 2; d <= max_degree; ++d) {
            int dim = k.small.space().dim(d);
            for (int idx = 0; idx < dim; ++idx) {
                // ι then ∇̄, then i−1 stages, then p everywhere
                SparseVec chain = k.incl.apply(d, SparseVec::unit(f, idx), f);
                CTensor t;
                for (const auto& [ci, cv] : chain.entries()) {
                    CTensor one;
                    ct_add(one, {{d, ci}}, cv);
                    CTensor two = st.nabla_at({{d, ci}}, 0);
                    for (const auto& [tup, coef] : two) ct_add(t, tup, coef * cv);
                }
                for (int s = 2; s <= i; ++s) t = st.stage(t, s);
                CTensor ht = st.project_all(t);
                auto& dst = op.images[{d, idx}];
                for (const auto& [tup, coef] : ht) dst.emplace_back(coef, tup);
            }
        }
        out.partial.push_back(std::move(op));
    }

    // τ_i = p^{⊗i+1} (stairs) ∇̄ν, on every chain-space generator
    for (int i = 0; i <= max_i; ++i) {
        CoOperation op;
        op.arity = i + 1;
        for (int d = 0; d <= max_degree; ++d) {
            int dim = k.big.space().dim(d);
            for (int idx = 0; idx < dim; ++idx) {
                CTensor t;
                if (i == 0) {
                    SparseVec pv = k.proj.apply(d, SparseVec::unit(f, idx), f);
                    for (const auto& [pi, pc] : pv.entries()) ct_add(t, {{d, pi}}, pc);
                    auto& dst = op.images[{d, idx}];
                    for (const auto& [tup, coef] : t) dst.emplace_back(coef, tup);
                    continue;
                }
                CTensor start;
                ct_add(start, {{d, idx}}, Scalar::one(f));
                CTensor cur = st.nabla_nu_at(start, 0);
                for (int s = 2; s <= i; ++s) cur = st.stage(cur, s);
                CTensor ht = st.project_all(cur);
                auto& dst = op.images[{d, idx}];
                for (const auto& [tup, coef] : ht) dst.emplace_back(coef, tup);
            }
        }
        out.tau.push_back(std::move(op));
    }
    return out;
}

bool verify_a_infinity(const DgCoalgebra& c, const Contraction& k, const TransferResult& t,
                       int max_degree, std::string* why) {
    Field f = c.field();
    // letters of Ω(H, ∂): the small basis in degrees ≥ 2, desuspended
    const GradedSpace& hs = k.small.space();
    if (hs.dim(1) > 0) {
        if (why) *why = "transferred coalgebra is not 1-connected";
        return false;
    }

    struct LetterKey {
        int deg, idx;
        auto operator<=>(const LetterKey&) const = default;
    };
    using HWord = std::vector<LetterKey>;  // letters with Ω-degree deg−1
    using HSum = std::map<HWord, Scalar>;

    auto wdeg = [](const HWord& w) {
        int d = 0;
        for (auto& l : w) d += l.deg - 1;
        return d;
    };

    // D(s⁻¹h) = Σ_i (s⁻¹)^{⊗(i+1)} ∂_i(h); ∂₀ = 0 on homology
    auto d_letter = [&](const LetterKey& l) {
        HSum out;
        for (const auto& op : t.partial) {
            auto it = op.images.find({l.deg, l.idx});
            if (it == op.images.end()) continue;
            for (const auto& [coef, tup] : it->second) {
                // desuspension parity: Σ_j (prefix of 𝓗-degrees)
                int parity = 0, pre = 0;
                HWord w;
                bool ok = true;
                for (const auto& [dd, ii] : tup) {
                    parity += pre;
                    pre += dd;
                    if (dd < 2) ok = false;
                    w.push_back({dd, ii});
                }
                if (!ok) continue;  // unit components do not appear in ΩH
                Scalar s = coef * Scalar::sign(f, parity);
                if (op.arity == 1) s = -s;  // the −s⁻¹∂₀ convention (zero here anyway)
                auto [jt, fresh] = out.try_emplace(w, s);
                if (!fresh) {
                    jt->second += s;
                    if (jt->second.is_zero()) out.erase(jt);
                }
            }
        }
        return out;
    };

    auto d_word = [&](const HWord& w) {
        HSum out;
        int prefix = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            HSum dl = d_letter(w[i]);
            for (const auto& [mid, coef] : dl) {
                HWord nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), mid.begin(), mid.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                Scalar s = coef * Scalar::sign(f, prefix);
                auto [jt, fresh] = out.try_emplace(nw, s);
                if (!fresh) {
                    jt->second += s;
                    if (jt->second.is_zero()) out.erase(jt);
                }
            }
            prefix += w[i].deg - 1;
        }
        return out;
    };

    // enumerate ΩH words per degree ≤ max_degree and check D² = 0
    std::vector<LetterKey> letters;
    for (int d = 2; d <= max_degree + 1; ++d)
        for (int i = 0; i < hs.dim(d); ++i) letters.push_back({d, i});

    std::function<bool(HWord&, int)> sweep = [&](HWord& cur, int remaining) {
        if (!cur.empty()) {
            HSum dd;
            for (const auto& [w1, c1] : d_word(cur))
                for (const auto& [w2, c2] : d_word(w1)) {
                    Scalar s = c1 * c2;
                    auto [jt, fresh] = dd.try_emplace(w2, s);
                    if (!fresh) {
                        jt->second += s;
                        if (jt->second.is_zero()) dd.erase(jt);
                    }
                }
            if (!dd.empty()) {
                if (why) {
                    *why = "D² ≠ 0 on a word of degree " + std::to_string(wdeg(cur));
                }
                return false;
            }
        }
        for (const auto& l : letters) {
            if (l.deg - 1 > remaining) continue;
            cur.push_back(l);
            if (!sweep(cur, remaining - (l.deg - 1))) return false;
            cur.pop_back();
        }
        return true;
    };
    HWord cur;
    return sweep(cur, max_degree);
}

CobarGamma::CobarGamma(const DgCoalgebra& c, int max_degree) {
    ChainComplex cx = c.chain_complex(c.maxdeg() + 1);
    k_ = build_contraction(cx);
    big_ = CobarAlgebra::cobar(c, max_degree);
    hc_ = homology_coalgebra(c);
    small_ = CobarAlgebra::cobar(hc_, max_degree);
}

WordSum CobarGamma::apply_letterwise(const Word& w, const GradedMap& f, const CobarAlgebra& src,
                                     const CobarAlgebra& dst) const {
    Field fld = src.field();
    WordSum out(fld, &dst.letters());
    std::function<void(size_t, Word&, const Scalar&)> rec = [&](size_t j, Word& cur,
                                                                const Scalar& acc) {
        if (j == w.size()) {
            out.add(cur, acc);
            return;
        }
        int deg = src.letters().degree(w[j]) + 1;
        int idx = k_.big.space().index_of(deg, src.letters().name(w[j]));
        // p and i are degree 0: no Koszul crossings
        SparseVec img = f.apply(deg, SparseVec::unit(fld, idx), fld);
        for (const auto& [ii, cc] : img.entries()) {
            const std::string& name = (&dst == small_.get() ? k_.small : k_.big).space().names(deg)[ii];
            int lid = dst.letters().id_of(name);
            if (lid < 0) continue;
            cur.push_back(lid);
            rec(j + 1, cur, acc * cc);
            cur.pop_back();
        }
    };
    Word cur;
    rec(0, cur, Scalar::one(fld));
    return out;
}

WordSum CobarGamma::omega_p(const Word& w) const { return apply_letterwise(w, k_.proj, *big_, *small_); }
WordSum CobarGamma::omega_i(const Word& w) const { return apply_letterwise(w, k_.incl, *small_, *big_); }

WordSum CobarGamma::gamma(const Word& w) const {
    // Γ_n = Σ Id^{…} ⊗ ν̂ ⊗ Id^{…} ⊗ ê ⊗ … ⊗ ê ⊗ Id^{…},
    // ν̂ = s⁻¹νs (degree +1), ê = s⁻¹(dν+νd)s (degree 0).
    Field f = big_->field();
    WordSum out(f, &big_->letters());
    const int n = static_cast<int>(w.size());
    if (n == 0) return out;

    // ν̂ = s⁻¹νs picks up a sign from carrying the odd homotopy across the
    // desuspension; pinned by dΓ + Γd = ΩiΩp − Id.
    auto nu_hat = [&](int letter) {
        int deg = big_->letters().degree(letter) + 1;
        int idx = k_.big.space().index_of(deg, big_->letters().name(letter));
        SparseVec v = k_.nu.apply(deg, SparseVec::unit(f, idx), f);
        std::vector<std::pair<int, Scalar>> img;
        for (const auto& [ii, cc] : v.entries()) {
            int lid = big_->letters().id_of(k_.big.space().names(deg + 1)[ii]);
            if (lid >= 0) img.emplace_back(lid, -cc);
        }
        return img;
    };
    auto e_hat = [&](int letter) {
        int deg = big_->letters().degree(letter) + 1;
        int idx = k_.big.space().index_of(deg, big_->letters().name(letter));
        SparseVec ip = k_.incl.compose(k_.proj, f).apply(deg, SparseVec::unit(f, idx), f);
        ip.add(idx, -Scalar::one(f));  // ê = s⁻¹(ip − Id)s = s⁻¹(dν+νd)s
        std::vector<std::pair<int, Scalar>> img;
        for (const auto& [ii, cc] : ip.entries()) {
            int lid = big_->letters().id_of(k_.big.space().names(deg)[ii]);
            if (lid >= 0) img.emplace_back(lid, cc);
        }
        return img;
    };

    // choose ν̂ at position q, ê at any subset of positions > q
    std::vector<int> omega_degs = letter_degrees(w, big_->letters());
    for (int q = 0; q < n; ++q) {
        int prefix = 0;
        for (int j = 0; j < q; ++j) prefix += omega_degs[j];
        std::function<void(int, Word&, const Scalar&)> rec = [&](int pos, Word& cur,
                                                                 const Scalar& acc) {
            if (pos == n) {
                out.add(cur, acc);
                return;
            }
            if (pos < q) {
                cur.push_back(w[pos]);
                rec(pos + 1, cur, acc);
                cur.pop_back();
                return;
            }
            if (pos == q) {
                for (auto& [lid, cc] : nu_hat(w[pos])) {
                    cur.push_back(lid);
                    rec(pos + 1, cur, acc * cc);
                    cur.pop_back();
                }
                return;
            }
            // pos > q: identity or ê
            cur.push_back(w[pos]);
            rec(pos + 1, cur, acc);
            cur.pop_back();
            for (auto& [lid, cc] : e_hat(w[pos])) {
                cur.push_back(lid);
                rec(pos + 1, cur, acc * cc);
                cur.pop_back();
            }
        };
        Word cur;
        rec(0, cur, Scalar::sign(f, prefix));
    }
    return out;
}

bool CobarGamma::verify(int max_degree, std::string* why) const {
    Field f = big_->field();
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& w : big_->words(n)) {
            // dΓ + Γd = ΩiΩp − Id
            WordSum lhs = big_->d_sum(gamma(w));
            for (const auto& [u, c] : big_->d_word(w)) lhs.add_sum(gamma(u), c);
            WordSum rhs(f, &big_->letters());
            for (const auto& [u, c] : omega_p(w)) rhs.add_sum(omega_i(u), c);
            rhs.add(w, -Scalar::one(f));
            if (!(lhs == rhs)) return fail("dΓ + Γd ≠ ΩiΩp − Id at " + word_str(w, big_->letters()));
            // gauge
            WordSum pg(f, &small_->letters());
            for (const auto& [u, c] : gamma(w)) pg.add_sum(omega_p(u), c);
            if (!pg.is_zero()) return fail("ΩpΓ ≠ 0 at " + word_str(w, big_->letters()));
            WordSum gg(f, &big_->letters());
            for (const auto& [u, c] : gamma(w)) gg.add_sum(gamma(u), c);
            if (!gg.is_zero()) return fail("Γ² ≠ 0 at " + word_str(w, big_->letters()));
        }
        for (const auto& w : small_->words(n)) {
            WordSum gi(f, &big_->letters());
            for (const auto& [u, c] : omega_i(w)) gi.add_sum(gamma(u), c);
            if (!gi.is_zero()) return fail("ΓΩi ≠ 0 at " + word_str(w, small_->letters()));
        }
    }
    return true;
}

FormalityReport verify_formality(const DgCoalgebra& c, int max_degree) {
    FormalityReport rep;
    Field f = c.field();
    if (!c.primitive()) throw std::runtime_error("verify_formality expects a primitive coalgebra");

    CobarGamma g(c, max_degree + 1);

    // Ωp is a chain map
    rep.p_chain_map = true;
    for (int n = 0; n <= max_degree && rep.p_chain_map; ++n) {
        for (const auto& w : g.big().words(n)) {
            WordSum lhs = g.small().d_sum(g.omega_p(w));
            WordSum rhs(f, &g.small().letters());
            for (const auto& [u, cc] : g.big().d_word(w)) rhs.add_sum(g.omega_p(u), cc);
            if (!(lhs == rhs)) {
                rep.p_chain_map = false;
                break;
            }
        }
    }

    // quasi-isomorphism on each degree ≤ N
    rep.quasi_iso_level1 = true;
    for (int n = 0; n <= max_degree && rep.quasi_iso_level1; ++n) {
        HomologySolver hc_big(g.big().complex().d_block(n + 1), g.big().complex().d_block(n));
        HomologySolver hc_small(g.small().complex().d_block(n + 1), g.small().complex().d_block(n));
        if (hc_big.dim() != hc_small.dim()) {
            rep.quasi_iso_level1 = false;
            break;
        }
        if (hc_big.dim() == 0) continue;
        std::vector<SparseVec> cols;
        for (const auto& z : hc_big.representatives()) {
            WordSum zw = g.big().sum_of(z, n);
            WordSum pz(f, &g.small().letters());
            for (const auto& [u, cc] : zw) pz.add_sum(g.omega_p(u), cc);
            cols.push_back(hc_small.reduce(g.small().vec_of(pz, n)));
        }
        SparseMat m = from_columns(f, hc_small.dim(), cols);
        if (rank(m) != hc_small.dim()) rep.quasi_iso_level1 = false;
    }

    // Ω² dimension comparison
    DgCoalgebra hcoalg = homology_coalgebra(c);
    auto w2c = CobarAlgebra::double_cobar(c, max_degree + 1);
    auto w2h = CobarAlgebra::double_cobar(hcoalg, max_degree + 1);
    auto dims_c = w2c->complex().homology_dims(max_degree);
    auto dims_h = w2h->complex().homology_dims(max_degree);
    rep.dims_omega2_c = dims_c;
    rep.dims_omega2_h = dims_h;
    rep.dims_level2_equal = (dims_c == dims_h);
    return rep;
}

}  // namespace cobarlab
