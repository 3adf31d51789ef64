#pragma once

#include "cobarlab/cobar.hpp"
#include "cobarlab/dgc.hpp"

#include <cstdint>

namespace cobarlab {

/// Finitely supported family of structural co-operations
/// E^{i,j} : C̄ → C̄^{⊗i} ⊗ C̄^{⊗j} of degree 0 on the desuspended reduced
/// coalgebra, with E^{0,1} = E^{1,0} = Id implicit. Values are stored on
/// the C⁺ generators; slots name C⁺ generators.
class TwistingFamily {
public:
    struct Term {
        Scalar c;
        std::vector<int> left, right;  // generator ids of C⁺
    };

    explicit TwistingFamily(const DgCoalgebra* c) : c_(c) {}

    const DgCoalgebra& coalgebra() const { return *c_; }
    void add_term(int i, int j, int gen, Term term);
    const std::vector<Term>& component(int i, int j, int gen) const;
    bool has_component(int i, int j) const { return comps_.count({i, j}) > 0; }
    std::vector<std::pair<int, int>> supported() const;
    /// True when only the identity components are present.
    bool reduced() const { return comps_.empty(); }
    bool has_left_higher() const;  // some E^{i,j} with i >= 2 is nonzero

private:
    const DgCoalgebra* c_;
    std::map<std::pair<int, int>, std::map<int, std::vector<Term>>> comps_;
};

/// Parse the family text format (extends the coalgebra format):
///   E i j : <gen> = <coef>*<g1|...|gi ; g1'|...|gj'> (+ ...)
/// The same text may contain the coalgebra lines; they are read first.
std::pair<DgCoalgebra, TwistingFamily> parse_family(const std::string& text);

/// ∇_E on ΩC: the multiplicative extension
/// ∇_E(c₁⊗…⊗c_n) = Σ μ(E^{i₁,j₁} ⊗ … ⊗ E^{iₙ,jₙ}) over the letters.
WordTensor nabla_e(const CobarAlgebra& a, const TwistingFamily& fam, const Word& w);

struct HirschReport {
    bool counit = true;
    bool leibniz = true;       // (d⊗1 + 1⊗d)∇_E = ∇_E d on ΩC
    bool coassoc = true;
    bool left_coideal = true;  // ∇_E(J_r) ⊆ J_r ⊗ ΩC for every r
    bool leftsided_iff = true; // left-coideal ⇔ E^{i≥2,j} = 0, both ways
    std::string first_failure;
    /// residuals of the cocommutativity-homotopy equation (6.3), reported
    /// with signed and unsigned twist without deciding a convention
    bool nabla1_homotopy_signed = true;
    bool nabla1_homotopy_unsigned = true;
    bool ok() const { return counit && leibniz && coassoc && left_coideal && leftsided_iff; }
};

HirschReport check_hirsch(const DgCoalgebra& c, const TwistingFamily& fam, int max_degree);

/// Seeded random finitely-supported family on a coalgebra; when
/// `with_higher` is set, at least one E^{i,j} with i ≥ 2 is nonzero.
TwistingFamily random_family(const DgCoalgebra& c, uint64_t seed, bool with_higher);

}  // namespace cobarlab
