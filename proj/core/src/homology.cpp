#include "cobarlab/homology.hpp"

namespace cobarlab {

HomologySolver::HomologySolver(const SparseMat& d_in, const SparseMat& d_out)
    : field_(d_out.field()), chain_dim_(d_out.cols()), d_out_(d_out) {
    if (d_in.rows() != d_out.cols())
        throw std::logic_error("homology: d_in target and d_out source disagree");
    if (!d_out.multiply(d_in).is_zero())
        throw std::logic_error("homology: d∘d != 0 (broken differential upstream)");

    std::vector<SparseVec> boundaries = image_basis(d_in);
    std::vector<SparseVec> cycles = kernel_basis(d_out);
    n_boundaries_ = static_cast<int>(boundaries.size());

    // Column-reduce [boundaries | cycles] once; the pivot columns form the
    // lexicographically first independent subset, so every boundary column is
    // kept (they are independent and lie in ker d) and the pivot cycle
    // columns are the homology representatives.
    std::vector<SparseVec> cols = boundaries;
    cols.insert(cols.end(), cycles.begin(), cycles.end());
    decomp_ = from_columns(field_, chain_dim_, cols);
    decomp_rref_ = rref(decomp_);

    rep_of_col_.assign(cols.size(), -1);
    for (int c : decomp_rref_.pivot_cols) {
        if (c < n_boundaries_) continue;
        rep_of_col_[c] = static_cast<int>(reps_.size());
        reps_.push_back(cycles[c - n_boundaries_]);
    }
    int boundary_pivots = 0;
    for (int c : decomp_rref_.pivot_cols)
        if (c < n_boundaries_) ++boundary_pivots;
    if (boundary_pivots != n_boundaries_)
        throw std::logic_error("homology: image basis not independent");
}

bool HomologySolver::is_cycle(const SparseVec& chain) const {
    return d_out_.apply(chain).is_zero();
}

SparseVec HomologySolver::reduce(const SparseVec& cycle) const {
    if (!is_cycle(cycle)) throw std::logic_error("homology reduce: chain is not a cycle");
    SparseVec y = decomp_rref_.transform.apply(cycle);
    for (const auto& [r, v] : y.entries()) {
        (void)v;
        if (r >= decomp_rref_.rank())
            throw std::logic_error("homology reduce: cycle outside ker(d) decomposition");
    }
    SparseVec coords(field_);
    for (int i = 0; i < decomp_rref_.rank(); ++i) {
        int col = decomp_rref_.pivot_cols[i];
        if (col >= n_boundaries_ && rep_of_col_[col] >= 0) coords.add(rep_of_col_[col], y.at(i));
    }
    return coords;
}

SparseVec HomologySolver::chain_of(const SparseVec& h_coords) const {
    SparseVec chain(field_);
    for (const auto& [i, v] : h_coords.entries()) chain.axpy(v, reps_[i]);
    return chain;
}

HomologySolver homology(const SparseMat& d_in, const SparseMat& d_out) {
    return HomologySolver(d_in, d_out);
}

}  // namespace cobarlab
