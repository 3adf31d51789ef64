#pragma once

#include "cobarlab/sparse.hpp"

namespace cobarlab {

/// Homology of one degree of a chain complex: ker(d_out) / im(d_in),
/// where d_in : C_{n+1} -> C_n and d_out : C_n -> C_{n-1}.
///
/// Representatives are echelon-pivot cycles; `reduce` decides, for any cycle
/// given in chain coordinates, its coordinates in the homology basis (the
/// boundary-expression solver).
class HomologySolver {
public:
    HomologySolver(const SparseMat& d_in, const SparseMat& d_out);

    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<SparseVec>& representatives() const { return reps_; }

    bool is_cycle(const SparseVec& chain) const;
    /// Homology coordinates of a cycle. Throws when the chain is not a cycle.
    SparseVec reduce(const SparseVec& cycle) const;
    /// A representative chain of a homology coordinate vector.
    SparseVec chain_of(const SparseVec& h_coords) const;

private:
    Field field_;
    int chain_dim_;
    SparseMat d_out_;
    std::vector<SparseVec> reps_;
    // columns = [boundary basis | representatives]; solving against it splits
    // a cycle into an exact part plus homology coordinates.
    SparseMat decomp_;
    Rref decomp_rref_;
    int n_boundaries_;
    std::vector<int> rep_of_col_;
};

/// dim H = dim ker(d_out) - rank(d_in). Rejects pairs with d_out * d_in != 0.
HomologySolver homology(const SparseMat& d_in, const SparseMat& d_out);

}  // namespace cobarlab
