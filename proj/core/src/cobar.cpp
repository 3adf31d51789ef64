#include "cobarlab/cobar.hpp"

#include <algorithm>

namespace cobarlab {

namespace {

void enumerate_words(const LetterTable& t, int degree, Word& cur, int remaining,
                     std::vector<Word>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int l = 0; l < t.size(); ++l) {
        int d = t.degree(l);
        if (d > remaining) continue;
        cur.push_back(l);
        enumerate_words(t, degree, cur, remaining - d, out);
        cur.pop_back();
    }
}

}  // namespace

std::unique_ptr<CobarAlgebra> CobarAlgebra::build(const DgCoalgebra& c, int cutoff, int level) {
    if (cutoff < 2) throw std::runtime_error("cobar: cutoff must be at least 2");
    auto a = std::unique_ptr<CobarAlgebra>(new CobarAlgebra());
    a->field_ = c.field();
    a->cutoff_ = cutoff;
    a->level_ = level;

    // Letters are the C⁺ generators desuspended, added in name order so that
    // letter ids follow the canonical order.
    std::vector<int> order(c.n_generators());
    for (int g = 0; g < c.n_generators(); ++g) order[g] = g;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return c.generators().name(x) < c.generators().name(y);
    });
    std::vector<int> letter_of_gen(c.n_generators(), -1);
    for (int g : order) {
        int deg = c.generators().degree(g) - 1;
        letter_of_gen[g] = a->letters_.add(c.generators().name(g), deg);
    }

    // d(s⁻¹c) = −s⁻¹ d_C(c) + (s⁻¹⊗s⁻¹)∇̄(c); the Koszul sign of the
    // second desuspension past the left factor gives (−1)^{|left|_C}.
    a->letter_diff_.assign(a->letters_.size(), WordSum(a->field_, &a->letters_));
    for (int g = 0; g < c.n_generators(); ++g) {
        WordSum s(a->field_, &a->letters_);
        for (const auto& t : c.differential_of(g)) s.add({letter_of_gen[t.gen]}, -t.c);
        for (const auto& t : c.reduced_coproduct_of(g)) {
            Scalar sg = Scalar::sign(a->field_, c.generators().degree(t.left));
            s.add({letter_of_gen[t.left], letter_of_gen[t.right]}, t.c * sg);
        }
        a->letter_diff_[letter_of_gen[g]] = std::move(s);
    }

    GradedSpace space(cutoff);
    space.add_basis_element(0, "1");
    a->basis_[0] = {Word{}};
    for (int n = 1; n <= cutoff; ++n) {
        std::vector<Word> ws;
        Word cur;
        enumerate_words(a->letters_, n, cur, n, ws);
        std::sort(ws.begin(), ws.end(), WordOrder{&a->letters_});
        for (const auto& w : ws) space.add_basis_element(n, word_str(w, a->letters_));
        a->basis_[n] = std::move(ws);
    }
    for (const auto& [n, ws] : a->basis_) {
        auto& idx = a->index_.emplace(n, std::map<Word, int, WordOrder>(WordOrder{&a->letters_})).first->second;
        for (size_t i = 0; i < ws.size(); ++i) idx[ws[i]] = static_cast<int>(i);
    }

    a->cx_ = ChainComplex(std::move(space), a->field_);
    for (int n = 1; n <= cutoff; ++n) {
        const auto& ws = a->basis_[n];
        for (size_t i = 0; i < ws.size(); ++i) {
            WordSum dw = a->d_word(ws[i]);
            for (const auto& [w, coef] : dw)
                a->cx_.differential().add_entry(n, static_cast<int>(i), a->word_index(n - 1, w), coef);
        }
    }
    return a;
}

std::unique_ptr<CobarAlgebra> CobarAlgebra::cobar(const DgCoalgebra& c, int cutoff) {
    return build(c, cutoff, 1);
}

std::unique_ptr<CobarAlgebra> CobarAlgebra::double_cobar(const DgCoalgebra& c, int cutoff) {
    for (int g = 0; g < c.n_generators(); ++g)
        if (c.generators().degree(g) == 2)
            throw std::runtime_error(
                "double_cobar requires C₂ = 0 (generator '" + c.generators().name(g) +
                "' has degree 2, so (ΩC)₁ ≠ 0)");
    auto base = build(c, cutoff + 1, 1);
    std::vector<Word> contents;
    DgCoalgebra hc = base->to_coalgebra(&contents);
    auto out = build(hc, cutoff, 2);

    // The generators of hc were created in table order; letters of the
    // level-2 algebra were re-sorted by name, so re-align contents by name.
    out->letter_content_.assign(out->letters_.size(), Word{});
    for (int g = 0; g < hc.n_generators(); ++g) {
        int letter = out->letters_.id_of(hc.generators().name(g));
        out->letter_content_[letter] = contents[g];
    }
    out->content_index_store_ = std::make_unique<std::map<Word, int, WordOrder>>(
        WordOrder{&base->letters_});
    for (int l = 0; l < out->letters_.size(); ++l)
        (*out->content_index_store_)[out->letter_content_[l]] = l;
    out->content_index_ = out->content_index_store_.get();
    out->base_ = std::move(base);
    return out;
}

const std::vector<Word>& CobarAlgebra::words(int degree) const {
    static const std::vector<Word> kEmpty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? kEmpty : it->second;
}

int CobarAlgebra::word_index(int degree, const Word& w) const {
    auto it = index_.find(degree);
    if (it == index_.end()) throw std::logic_error("word_index: degree not materialized");
    auto jt = it->second.find(w);
    if (jt == it->second.end()) throw std::logic_error("word_index: unknown word " + word_str(w, letters_));
    return jt->second;
}

WordSum CobarAlgebra::d_word(const Word& w) const {
    WordSum out(field_, &letters_);
    int prefix_deg = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        const WordSum& dl = letter_diff_[w[i]];
        Scalar sg = Scalar::sign(field_, prefix_deg);
        for (const auto& [mid, coef] : dl) {
            Word nw(w.begin(), w.begin() + i);
            nw.insert(nw.end(), mid.begin(), mid.end());
            nw.insert(nw.end(), w.begin() + i + 1, w.end());
            out.add(nw, coef * sg);
        }
        prefix_deg += letters_.degree(w[i]);
    }
    return out;
}

WordSum CobarAlgebra::d_sum(const WordSum& s) const {
    WordSum out(field_, &letters_);
    for (const auto& [w, c] : s) out.add_sum(d_word(w), c);
    return out;
}

WordTensor CobarAlgebra::nabla0(const Word& w) const { return unshuffle(w, 2, field_, letters_); }

WordTensor CobarAlgebra::nabla0_reduced(const Word& w) const {
    WordTensor full = nabla0(w);
    WordTensor out(field_, &letters_, 2);
    for (const auto& [slots, c] : full) {
        if (slots[0].empty() || slots[1].empty()) continue;
        out.add(slots, c);
    }
    return out;
}

WordTensor CobarAlgebra::nabla0_iterated(const Word& w, int n) const {
    return unshuffle(w, n, field_, letters_);
}

WordSum CobarAlgebra::antipode(const Word& w) const {
    WordSum out(field_, &letters_);
    Word rev(w.rbegin(), w.rend());
    int parity = static_cast<int>(w.size()) + reversal_parity(letter_degrees(w, letters_));
    out.add(rev, Scalar::sign(field_, parity));
    return out;
}

WordSum CobarAlgebra::antipode(const WordSum& s) const {
    WordSum out(field_, &letters_);
    for (const auto& [w, c] : s) out.add_sum(antipode(w), c);
    return out;
}

SparseVec CobarAlgebra::vec_of(const WordSum& s, int degree) const {
    SparseVec v(field_);
    for (const auto& [w, c] : s) {
        if (word_degree(w, letters_) != degree)
            throw std::logic_error("vec_of: inhomogeneous word sum");
        v.add(word_index(degree, w), c);
    }
    return v;
}

WordSum CobarAlgebra::sum_of(const SparseVec& v, int degree) const {
    WordSum s(field_, &letters_);
    const auto& ws = words(degree);
    for (const auto& [i, c] : v.entries()) s.add(ws[i], c);
    return s;
}

DgCoalgebra CobarAlgebra::to_coalgebra(std::vector<Word>* contents) const {
    DgCoalgebra out(field_, cutoff_);
    std::map<Word, int, WordOrder> gen_of(WordOrder{&letters_});
    if (contents) contents->clear();
    for (int n = 2; n <= cutoff_; ++n) {
        for (const auto& w : words(n)) {
            gen_of[w] = out.add_generator(word_str(w, letters_), n);
            if (contents) contents->push_back(w);
        }
    }
    // Words of degree 1 would violate 1-connectivity of the resulting
    // coalgebra; they cannot exist unless the input had degree-2 classes.
    if (space().dim(1) > 0)
        throw std::runtime_error("to_coalgebra: (ΩC)₁ ≠ 0, input must have C₂ = 0");

    for (int n = 2; n <= cutoff_; ++n) {
        for (const auto& w : words(n)) {
            int g = gen_of.at(w);
            std::vector<DgCoalgebra::DiffTerm> dterms;
            for (const auto& [dw, c] : d_word(w)) dterms.push_back({c, gen_of.at(dw)});
            out.set_differential(g, std::move(dterms));

            std::vector<DgCoalgebra::CopTerm> cterms;
            for (const auto& [slots, c] : nabla0_reduced(w)) {
                // slots with degree ≥ 2 on both sides only; a degree-1 slot
                // cannot occur (no degree-1 words) and a degree-0 nonempty
                // slot cannot occur (letters have degree ≥ 1).
                cterms.push_back({c, gen_of.at(slots[0]), gen_of.at(slots[1])});
            }
            out.set_coproduct(g, std::move(cterms));
        }
    }
    out.validate();
    return out;
}

int CobarAlgebra::letter_of_content(const Word& base_word) const {
    if (!content_index_) throw std::logic_error("letter_of_content: not a level-2 algebra");
    auto it = content_index_->find(base_word);
    return it == content_index_->end() ? -1 : it->second;
}

HopfReport check_hopf(const CobarAlgebra& a, int max_degree) {
    HopfReport rep;
    Field f = a.field();
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (rep.first_failure.empty()) rep.first_failure = what;
    };

    for (int n = 0; n <= max_degree; ++n) {
        for (const auto& w : a.words(n)) {
            WordTensor cop = a.nabla0(w);
            std::string wname = word_str(w, a.letters());

            // coassociativity
            WordTensor lhs(f, &a.letters(), 3), rhs(f, &a.letters(), 3);
            for (const auto& [slots, c] : cop) {
                for (const auto& [s2, c2] : a.nabla0(slots[0]))
                    lhs.add({s2[0], s2[1], slots[1]}, c * c2);
                for (const auto& [s2, c2] : a.nabla0(slots[1]))
                    rhs.add({slots[0], s2[0], s2[1]}, c * c2);
            }
            if (!(lhs == rhs)) fail(rep.coassociative, "coassociativity at " + wname);

            // counit law
            WordSum left(f, &a.letters()), right(f, &a.letters());
            for (const auto& [slots, c] : cop) {
                if (slots[0].empty()) left.add(slots[1], c);
                if (slots[1].empty()) right.add(slots[0], c);
            }
            WordSum self = a.word_sum(w);
            if (!(left == self) || !(right == self)) fail(rep.counit, "counit at " + wname);

            // chain map: (d⊗1 + 1⊗d)∇₀ = ∇₀ d
            WordTensor dl(f, &a.letters(), 2), dr(f, &a.letters(), 2);
            for (const auto& [slots, c] : cop) {
                for (const auto& [dw, dc] : a.d_word(slots[0])) dl.add({dw, slots[1]}, c * dc);
                Scalar sg = Scalar::sign(f, word_degree(slots[0], a.letters()));
                for (const auto& [dw, dc] : a.d_word(slots[1])) dl.add({slots[0], dw}, c * dc * sg);
            }
            for (const auto& [dw, dc] : a.d_word(w)) dr.add_tensor(a.nabla0(dw), dc);
            if (!(dl == dr)) fail(rep.chain_map, "∇₀ chain map at " + wname);

            // antipode axioms μ(S⊗1)∇₀ = ηε = μ(1⊗S)∇₀
            WordSum conv_l(f, &a.letters()), conv_r(f, &a.letters());
            for (const auto& [slots, c] : cop) {
                WordSum sx = a.antipode(slots[0]);
                for (const auto& [sw, sc] : sx) {
                    Word prod = sw;
                    prod.insert(prod.end(), slots[1].begin(), slots[1].end());
                    conv_l.add(prod, c * sc);
                }
                WordSum sy = a.antipode(slots[1]);
                for (const auto& [sw, sc] : sy) {
                    Word prod = slots[0];
                    prod.insert(prod.end(), sw.begin(), sw.end());
                    conv_r.add(prod, c * sc);
                }
            }
            WordSum eta(f, &a.letters());
            if (n == 0) eta.add({}, Scalar::one(f));
            if (!(conv_l == eta) || !(conv_r == eta)) fail(rep.antipode_axioms, "antipode axiom at " + wname);

            // S² = Id
            WordSum ss = a.antipode(a.antipode(w));
            if (!(ss == self)) fail(rep.involutive, "S² at " + wname);
        }
    }

    // multiplicativity of ∇₀ on basis word pairs
    for (int n1 = 1; n1 <= max_degree - 1 && rep.algebra_morphism; ++n1) {
        for (const auto& x : a.words(n1)) {
            for (int n2 = 1; n1 + n2 <= max_degree; ++n2) {
                for (const auto& y : a.words(n2)) {
                    Word xy = x;
                    xy.insert(xy.end(), y.begin(), y.end());
                    WordTensor prod = tensor_algebra_mul(a.nabla0(x), a.nabla0(y), a.letters());
                    if (!(prod == a.nabla0(xy))) {
                        fail(rep.algebra_morphism,
                             "∇₀ multiplicativity at " + word_str(x, a.letters()) + "," + word_str(y, a.letters()));
                        break;
                    }
                }
                if (!rep.algebra_morphism) break;
            }
            if (!rep.algebra_morphism) break;
        }
    }
    return rep;
}

}  // namespace cobarlab
