#pragma once

#include "cobarlab/dgc.hpp"
#include "cobarlab/graded.hpp"
#include "cobarlab/word.hpp"

#include <memory>

namespace cobarlab {

/// The cobar construction ΩC of a 1-connected dg-coalgebra: the free tensor
/// algebra on the desuspended reduced coalgebra, with the derivation
/// differential d(s⁻¹c) = −s⁻¹ d_C c + (s⁻¹⊗s⁻¹)∇̄ c. Level 2 is the cobar
/// of (ΩC, ∇₀) and keeps a handle on its base algebra.
///
/// Word bases are materialized degree by degree up to the cutoff;
/// 1-connectivity keeps every degree finite (letters have degree ≥ 1, so
/// word length is bounded by the degree).
class CobarAlgebra {
public:
    CobarAlgebra(const CobarAlgebra&) = delete;
    CobarAlgebra& operator=(const CobarAlgebra&) = delete;

    static std::unique_ptr<CobarAlgebra> cobar(const DgCoalgebra& c, int cutoff);
    /// Ω²C = Ω(ΩC, ∇₀). Requires C₂ = 0, so (ΩC)₁ = 0 and ΩC is again a
    /// valid 1-connected coalgebra input.
    static std::unique_ptr<CobarAlgebra> double_cobar(const DgCoalgebra& c, int cutoff);

    Field field() const { return field_; }
    int cutoff() const { return cutoff_; }
    int level() const { return level_; }
    const LetterTable& letters() const { return letters_; }
    const ChainComplex& complex() const { return cx_; }
    const GradedSpace& space() const { return cx_.space(); }

    const std::vector<Word>& words(int degree) const;
    int word_index(int degree, const Word& w) const;

    /// Differential, extended from the letters as a derivation.
    WordSum d_word(const Word& w) const;
    WordSum d_sum(const WordSum& s) const;
    const WordSum& letter_differential(int letter) const { return letter_diff_[letter]; }

    /// The Hopf coproduct ∇₀ (signed unshuffle; generators primitive).
    WordTensor nabla0(const Word& w) const;
    WordTensor nabla0_reduced(const Word& w) const;
    /// n-fold iterated ∇₀.
    WordTensor nabla0_iterated(const Word& w, int n) const;

    /// Antipode: S = −Id on generators, extended as an algebra anti-morphism.
    WordSum antipode(const Word& w) const;
    WordSum antipode(const WordSum& s) const;

    WordSum zero_sum() const { return WordSum(field_, &letters_); }
    WordSum word_sum(const Word& w) const { return WordSum::single(field_, &letters_, w); }

    SparseVec vec_of(const WordSum& s, int degree) const;
    WordSum sum_of(const SparseVec& v, int degree) const;

    /// ΩC viewed as a dg-coalgebra on its nonempty basis words; `contents`
    /// receives the word behind each generator, aligned with generator ids.
    DgCoalgebra to_coalgebra(std::vector<Word>* contents = nullptr) const;

    // level 2 only
    const CobarAlgebra* base() const { return base_.get(); }
    const Word& content(int letter) const { return letter_content_[letter]; }
    /// Letter id of a base word, or -1 when it is outside the cutoff.
    int letter_of_content(const Word& base_word) const;

private:
    CobarAlgebra() = default;
    static std::unique_ptr<CobarAlgebra> build(const DgCoalgebra& c, int cutoff, int level);

    Field field_ = Field::Q;
    int cutoff_ = 0;
    int level_ = 1;
    LetterTable letters_;
    std::vector<WordSum> letter_diff_;
    std::map<int, std::vector<Word>> basis_;
    std::map<int, std::map<Word, int, WordOrder>> index_;
    ChainComplex cx_;

    std::unique_ptr<CobarAlgebra> base_;
    std::vector<Word> letter_content_;
    std::map<Word, int, WordOrder>* content_index_ = nullptr;
    std::unique_ptr<std::map<Word, int, WordOrder>> content_index_store_;
};

struct HopfReport {
    bool coassociative = true;
    bool counit = true;
    bool chain_map = true;
    bool algebra_morphism = true;
    bool antipode_axioms = true;
    bool involutive = true;
    std::string first_failure;
    bool ok() const {
        return coassociative && counit && chain_map && algebra_morphism && antipode_axioms &&
               involutive;
    }
};

/// Bialgebra and antipode axioms for (ΩC, ∇₀), quantified over all basis
/// words (and pairs, for multiplicativity) of total degree <= max_degree.
HopfReport check_hopf(const CobarAlgebra& a, int max_degree);

}  // namespace cobarlab
