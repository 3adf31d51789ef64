#pragma once

#include "cobarlab/free_gerst.hpp"
#include "cobarlab/hga.hpp"
#include "cobarlab/homology.hpp"

#include <memory>

namespace cobarlab {

/// Homology of a level-2 cobar algebra with its induced product, bracket,
/// restriction and BV operator. Classes are coordinate vectors over the
/// per-degree representative basis; operations apply the chain-level
/// operation to representatives and reduce through the boundary-expression
/// solver, so well-definedness is a checkable property rather than an
/// assumption.
class HomologyRing {
public:
    HomologyRing(const CobarAlgebra& omega2, int max_degree);

    const CobarAlgebra& carrier() const { return a_; }
    const HgaOps& ops() const { return ops_; }
    int max_degree() const { return max_degree_; }

    int dim(int degree) const;
    std::vector<int> dims() const;

    WordSum representative(int degree, const SparseVec& cls) const;
    SparseVec reduce(int degree, const WordSum& cycle) const;
    bool is_cycle(int degree, const WordSum& chain) const;

    SparseVec unit_class() const;

    SparseVec induced_product(int d1, const SparseVec& a, int d2, const SparseVec& b) const;
    SparseVec induced_bracket(int d1, const SparseVec& a, int d2, const SparseVec& b) const;
    SparseVec induced_xi(int d, const SparseVec& a) const;     // F2
    SparseVec induced_delta(int d, const SparseVec& a) const;  // H(Δ_CM)

private:
    const CobarAlgebra& a_;
    HgaOps ops_;
    int max_degree_;
    std::vector<std::unique_ptr<HomologySolver>> solvers_;
};

struct FreenessRow {
    int degree;
    long dim_homology;
    long dim_model;
};

struct FreenessReport {
    std::vector<FreenessRow> rows;
    bool dims_equal = false;
    bool generated = false;  // s⁻²W classes generate under (·, [;]₁, ξ₁)
    bool basis_example_ok = true;
    bool ok() const { return dims_equal && generated && basis_example_ok; }
};

/// Dimension and generation comparison of H_*(Ω² double_suspension(W))
/// against the free (restricted) Gerstenhaber model on W.
FreenessReport verify_freeness(const DgCoalgebra& c, int max_degree, Field field);

struct BvReport {
    bool delta_vanishes_on_generators = false;
    bool delta_squared_zero = false;
    bool deviation_equals_bracket = false;
    bool free_model_match = false;
    bool ok() const {
        return delta_vanishes_on_generators && delta_squared_zero && deviation_equals_bracket &&
               free_model_match;
    }
};

/// BV suite over Q: H(Δ_CM) vanishes on the image of H⁺(W), satisfies the
/// deviation identity against the Browder bracket, squares to zero, and the
/// underlying structure matches the canonical free BV model.
BvReport verify_bv(const DgCoalgebra& c, int max_degree);

/// Recover W with H⁺(X) = s⁻²C⁺ from a double-suspension style coalgebra
/// (zero differential, primitive coproduct). Throws otherwise.
std::vector<std::pair<std::string, int>> desuspended_generators(const DgCoalgebra& c);

}  // namespace cobarlab
