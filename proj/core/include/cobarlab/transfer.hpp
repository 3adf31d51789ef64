#pragma once

#include "cobarlab/cobar.hpp"
#include "cobarlab/contraction.hpp"
#include "cobarlab/dgc.hpp"

namespace cobarlab {

/// One transferred co-operation ∂_i (or twisting component τ_i): images of
/// the small (resp. big) basis elements as sums of basis tuples.
struct CoOperation {
    int arity = 1;  // number of output slots
    // (degree, index) of source -> terms (coefficient, slots as (degree,index))
    std::map<std::pair<int, int>, std::vector<std::pair<Scalar, std::vector<std::pair<int, int>>>>>
        images;
    bool is_zero() const;
};

/// The A∞-coalgebra structure transferred across a contraction, with the
/// paper's staircase sums, plus the twisting-cochain components.
struct TransferResult {
    std::vector<CoOperation> partial;  // ∂_1, ∂_2, ... (∂_0 is the small differential)
    std::vector<CoOperation> tau;      // τ_0 = p, τ_1, ...
    /// Highest i with ∂_i possibly nonzero at the requested cutoff.
    int max_arity = 0;
};

TransferResult transfer_ainfty(const DgCoalgebra& c, const Contraction& k, int max_degree);

/// A∞ certificate: the transferred ∂_i assemble into a square-zero
/// derivation on the cobar of the small coalgebra. Returns the first
/// failing basis word when the relations break.
bool verify_a_infinity(const DgCoalgebra& c, const Contraction& k, const TransferResult& t,
                       int max_degree, std::string* why = nullptr);

/// The cobar-level homotopy Γ on ΩC with ΩiΩp − Id = dΓ + Γd and the gauge
/// conditions ΩpΓ = ΓΩi = Γ² = 0.
class CobarGamma {
public:
    CobarGamma(const DgCoalgebra& c, int max_degree);

    const CobarAlgebra& big() const { return *big_; }    // ΩC
    const CobarAlgebra& small() const { return *small_; }  // ΩH

    WordSum gamma(const Word& w) const;
    WordSum omega_p(const Word& w) const;  // (Ωp)_n = (s⁻¹ps)^{⊗n}
    WordSum omega_i(const Word& w) const;

    bool verify(int max_degree, std::string* why = nullptr) const;

    const Contraction& contraction() const { return k_; }

private:
    WordSum apply_letterwise(const Word& w, const GradedMap& f, const CobarAlgebra& src,
                             const CobarAlgebra& dst) const;

    Contraction k_;
    std::unique_ptr<CobarAlgebra> big_;
    std::unique_ptr<CobarAlgebra> small_;
    DgCoalgebra hc_;
};

struct FormalityReport {
    bool p_chain_map = false;
    bool quasi_iso_level1 = false;       // H(ΩC) ≅ H(ΩH) via Ωp, degreewise
    bool dims_level2_equal = false;      // dim H(Ω²C) = dim H(Ω²H) ≤ N
    std::vector<int> dims_omega2_c;
    std::vector<int> dims_omega2_h;
    bool ok() const { return p_chain_map && quasi_iso_level1 && dims_level2_equal; }
};

/// Formality pipeline for a primitive coalgebra with (possibly) nonzero
/// differential: ΩC ≃ ΩH and Ω²C ≃ Ω²H dimensionwise.
FormalityReport verify_formality(const DgCoalgebra& c, int max_degree);

}  // namespace cobarlab
