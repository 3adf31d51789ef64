#pragma once

#include "cobarlab/scalar.hpp"
#include "cobarlab/sparse.hpp"

#include <map>
#include <string>
#include <vector>

namespace cobarlab {

/// A bracket monomial over the ordered generators: either a leaf or an
/// admissible product [x;y] (x < y, and if y = [z;t] then z <= x), with the
/// degree-1 bracket convention deg [x;y] = deg x + deg y + 1.
struct ElemProduct {
    int leaf = -1;           // generator index when a leaf
    int left = -1, right = -1;  // children indices into the enumeration pool
    int degree = 0;
    int weight = 1;
    std::string label;
};

/// Monomial in the extended generator set, as a sorted list of generator ids.
using Monomial = std::vector<int>;

/// Sparse element of the free model: monomial -> coefficient.
using FreeElem = std::map<Monomial, Scalar>;

/// The free (restricted) Gerstenhaber / BV model on a finite generator
/// space W, materialized up to a degree cutoff. Over F2 the extended
/// generators are the elementary products and their restriction iterates
/// ξ₁^k (degrees 2^k(n+1)−1); over Q they are the elementary products with
/// [w;w] adjoined for even-degree w. Monomials form the polynomial
/// (char 2) or graded-symmetric (char 0) basis. Structure constants are
/// computed through the embedding of the Lie side into the tensor algebra
/// on the suspended generators, so brackets and restrictions are solved
/// exactly rather than assumed.
class FreeModel {
public:
    FreeModel(Field f, std::vector<std::pair<std::string, int>> w, int maxdeg);

    Field field() const { return field_; }
    int maxdeg() const { return maxdeg_; }

    const std::vector<ElemProduct>& elementary_products() const { return trees_; }

    struct ExtGen {
        std::string label;
        int degree;
    };
    const std::vector<ExtGen>& extended_generators() const { return ext_; }

    const std::vector<Monomial>& monomials(int degree) const;
    int monomial_index(int degree, const Monomial& m) const;

    /// Per-degree dimensions 0..maxdeg by direct monomial count.
    std::vector<long> dims_enumerated() const;
    /// Per-degree dimensions via PBW inversion of the tensor-algebra series.
    std::vector<long> dims_pbw() const;

    // -- algebra operations ---------------------------------------------
    FreeElem gen_elem(int ext_gen) const;
    int degree_of(const FreeElem& e) const;
    FreeElem product(const FreeElem& a, const FreeElem& b) const;
    FreeElem bracket(const FreeElem& a, const FreeElem& b) const;
    FreeElem restriction(const FreeElem& a) const;  // F2 only
    FreeElem bv_delta(const FreeElem& a) const;     // Q only, canonical BV

    SparseVec vec_of(const FreeElem& e, int degree) const;

private:
    // extended-generator-level data
    FreeElem gen_bracket(int g, int h) const;  // from cached tables
    FreeElem monomial_bracket(const Monomial& a, const Monomial& b) const;
    std::pair<Monomial, Scalar> normalize(const std::vector<int>& gens) const;

    void enumerate_trees();
    void build_extended();
    void build_tensor_reps();
    void solve_structure();
    void enumerate_monomials();

    Field field_;
    std::vector<std::pair<std::string, int>> w_;
    int maxdeg_;

    std::vector<ElemProduct> trees_;
    std::vector<ExtGen> ext_;
    // tree/iterate provenance of extended generators
    std::vector<int> ext_tree_;   // tree index (or -1)
    std::vector<int> ext_xi_;     // restriction iterate count (F2), square flag (Q)
    std::vector<int> xi_next_;    // F2: ξ of extended gen -> extended gen id (or -1)

    // tensor-algebra representatives per extended generator (words over sW)
    std::vector<std::map<std::vector<int>, Scalar>> rep_;
    std::vector<int> sw_degrees_;

    // bracket tables on extended generators
    std::map<std::pair<int, int>, FreeElem> bracket_table_;

    std::map<int, std::vector<Monomial>> monomials_;
    std::map<int, std::map<Monomial, int>> monomial_index_;
};

}  // namespace cobarlab
