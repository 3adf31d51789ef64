#pragma once

#include "cobarlab/graded.hpp"
#include "cobarlab/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cobarlab {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// 1-connected dg-coalgebra presented on the named generators of C⁺
/// (degrees ≥ 2); the degree-0 unit class is implicit. The coproduct is
/// stored reduced: the full coproduct adds c⊗1 + 1⊗c back functionally.
class DgCoalgebra {
public:
    struct DiffTerm {
        Scalar c;
        int gen;
    };
    struct CopTerm {
        Scalar c;
        int left, right;
    };

    DgCoalgebra() = default;
    DgCoalgebra(Field f, int maxdeg) : field_(f), maxdeg_(maxdeg) {}

    Field field() const { return field_; }
    int maxdeg() const { return maxdeg_; }
    void set_maxdeg(int n) { maxdeg_ = n; }

    int add_generator(const std::string& name, int degree);
    const LetterTable& generators() const { return gens_; }
    int n_generators() const { return gens_.size(); }

    void set_differential(int gen, std::vector<DiffTerm> terms);
    void set_coproduct(int gen, std::vector<CopTerm> terms);
    const std::vector<DiffTerm>& differential_of(int gen) const;
    const std::vector<CopTerm>& reduced_coproduct_of(int gen) const;

    /// True iff the reduced coproduct vanishes identically on C⁺.
    bool primitive() const;

    /// 1-connectivity, d² = 0, coderivation law, coassociativity of the
    /// reduced coproduct. Throws with a positioned message on failure.
    void validate() const;

    /// The underlying chain complex k ⊕ C⁺ up to degree `max_degree`.
    ChainComplex chain_complex(int max_degree) const;

private:
    Field field_ = Field::Q;
    int maxdeg_ = 10;
    LetterTable gens_;
    std::vector<std::vector<DiffTerm>> diff_;
    std::vector<std::vector<CopTerm>> cop_;
};

/// Parse the line-oriented coalgebra text format:
///   field F2|Q
///   maxdeg N
///   gen <name> <degree>
///   d <name> = <coef>*<name> (+ ...)
///   cop <name> = <coef>*<name>|<name> (+ ...)
///   primitive
/// '#' starts a comment; unstated differentials and coproducts are zero.
DgCoalgebra parse_coalgebra(const std::string& text);

/// Model of the homology of a double suspension with H⁺ of the base given
/// by W: the coalgebra k ⊕ s²W with zero differential and primitive
/// coproduct. W must be concentrated in degrees ≥ 1, so C₂ = 0 and the
/// double cobar is admissible.
DgCoalgebra double_suspension(const std::vector<std::pair<std::string, int>>& w, Field f,
                              int maxdeg);

/// The coalgebra (H_*(C), 0) with the transferred coproduct (p⊗p)∇i of a
/// chosen contraction. Rejects inputs whose transferred coproduct is not
/// strictly coassociative.
DgCoalgebra homology_coalgebra(const DgCoalgebra& c);

/// Seeded generator of valid 1-connected primitive coalgebras with nonzero
/// differentials (acyclic-pair style, so d² = 0 holds by construction).
DgCoalgebra random_primitive_coalgebra(uint64_t seed, int maxdeg, int min_gen_degree = 2);

}  // namespace cobarlab
