#pragma once

#include "cobarlab/graded.hpp"

namespace cobarlab {

/// Contraction data (p, i, ν) between a complex and a deformation retract:
/// pi = Id, ip − Id = dν + νd, and the gauge conditions pν = νi = ν² = 0.
struct Contraction {
    ChainComplex big;
    ChainComplex small;
    GradedMap proj;  // p : big -> small, degree 0
    GradedMap incl;  // i : small -> big, degree 0
    GradedMap nu;    // ν : big -> big, degree +1

    Contraction() = default;
    Contraction(const Contraction& o) { *this = o; }
    Contraction& operator=(const Contraction& o);

    /// All five contraction identities, degreewise for n <= max_degree.
    bool verify(int max_degree, std::string* why = nullptr) const;
};

/// Contraction of a chain complex onto (H_*(c), 0), built degreewise by
/// echelon splitting into boundaries, homology representatives and a
/// complement of the cycles; the splitting satisfies the gauge conditions
/// outright. Valid on degrees strictly below the top degree materialized in
/// `c` (callers keep one degree of headroom).
Contraction build_contraction(const ChainComplex& c);

}  // namespace cobarlab
