#pragma once

#include "cobarlab/cobar.hpp"

#include <functional>

namespace cobarlab {

/// Homotopy G-algebra operations on Ω𝓗 for 𝓗 = ΩC a (primitively
/// generated) Hopf dg-algebra; the carrier is a level-2 cobar algebra.
///
/// cup1 is the letter-insertion product: x ∪₁ y replaces one letter of x by
/// the block obtained from its iterated 𝓗-coproduct multiplied slotwise
/// into the letters of y. e12 inserts two words at an increasing pair of
/// positions. delta_cm is the boundary operator of the cyclic structure of
/// Ω𝓗 (antipode-twisted rotations followed by the extra codegeneracy).
class HgaOps {
public:
    explicit HgaOps(const CobarAlgebra& omega2);

    const CobarAlgebra& carrier() const { return a_; }
    Field field() const { return a_.field(); }

    WordSum cup1(const Word& x, const Word& y) const;
    WordSum cup1(const WordSum& x, const WordSum& y) const;

    WordSum e12(const Word& x, const Word& y, const Word& z) const;
    WordSum e12(const WordSum& x, const WordSum& y, const WordSum& z) const;

    /// {x;y} = x∪₁y − (−1)^{(|x|+1)(|y|+1)} y∪₁x.
    WordSum bracket(const WordSum& x, const WordSum& y) const;

    /// ξ₁(x) = x ∪₁ x; the quadratic restriction, F2 only.
    WordSum xi1(const WordSum& x) const;

    /// The Connes–Moscovici operator, degree +1 with Δ² = 0, dΔ + Δd = 0
    /// and Δ = 0 on one-letter words.
    WordSum delta_cm(const Word& w) const;
    WordSum delta_cm(const WordSum& s) const;

    WordSum product(const WordSum& x, const WordSum& y) const;
    WordSum d(const WordSum& x) const { return a_.d_sum(x); }

private:
    /// Terms (replacement letter block, coefficient) for inserting y into
    /// one letter.
    std::vector<std::pair<Word, Scalar>> insert_block(int letter, const Word& y) const;

    const CobarAlgebra& a_;
    const CobarAlgebra& h_;  // the base Hopf algebra ΩC
};

struct IdentityReport {
    struct Row {
        std::string name;
        bool pass = true;
        std::string counterexample;
    };
    std::vector<Row> rows;
    bool ok() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

using Cup1Fn = std::function<WordSum(const Word&, const Word&)>;
using E12Fn = std::function<WordSum(const Word&, const Word&, const Word&)>;

/// The four char-2 homotopy G-algebra identities, quantified over all basis
/// word tuples of total degree <= max_degree. The operations are injectable
/// so that perturbed operations can be shown to fail.
IdentityReport check_hga_identities(const CobarAlgebra& omega2, int max_degree,
                                    const Cup1Fn& cup1, const E12Fn& e12);
IdentityReport check_hga_identities(const HgaOps& ops, int max_degree);

}  // namespace cobarlab
