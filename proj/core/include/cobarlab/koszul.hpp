#pragma once

#include <vector>

namespace cobarlab {

// The one Koszul convention of the whole library, fixed here once:
// maps act from the left and
//
//   (f1 ⊗ ... ⊗ fn)(x1 ⊗ ... ⊗ xn)
//     = (-1)^{Σ_{j<k} |fk||xj|} f1(x1) ⊗ ... ⊗ fn(xn),
//
// the twist is τ(x ⊗ y) = (-1)^{|x||y|} y ⊗ x, and a derivation d obeys
// d(xy) = (dx)y + (-1)^{|x|} x(dy). Everything downstream (cobar
// differentials, cup products, transfer sums) derives its signs from these
// helpers, never ad hoc.

/// Parity (0/1) of the sign produced by applying slot operators of degrees
/// `op_degs` to slots of degrees `slot_degs`.
inline int koszul_apply_parity(const std::vector<int>& op_degs, const std::vector<int>& slot_degs) {
    int parity = 0;
    int prefix = 0;
    for (size_t j = 0; j < slot_degs.size(); ++j) {
        parity += op_degs[j] * prefix;
        prefix += slot_degs[j];
    }
    return parity & 1;
}

/// Parity of applying one operator of degree `op_deg` at slot `pos`.
inline int koszul_at_parity(int op_deg, const std::vector<int>& slot_degs, size_t pos) {
    int prefix = 0;
    for (size_t j = 0; j < pos; ++j) prefix += slot_degs[j];
    return (op_deg * prefix) & 1;
}

/// Parity of the Koszul sign of the permutation sending slot j of `degs`
/// to position perm[j].
inline int permutation_parity(const std::vector<int>& degs, const std::vector<int>& perm) {
    int parity = 0;
    for (size_t i = 0; i < degs.size(); ++i)
        for (size_t j = i + 1; j < degs.size(); ++j)
            if (perm[i] > perm[j]) parity += degs[i] * degs[j];
    return parity & 1;
}

/// Parity of reversing x1 ⊗ ... ⊗ xn.
inline int reversal_parity(const std::vector<int>& degs) {
    int parity = 0;
    for (size_t i = 0; i < degs.size(); ++i)
        for (size_t j = i + 1; j < degs.size(); ++j) parity += degs[i] * degs[j];
    return parity & 1;
}

}  // namespace cobarlab
