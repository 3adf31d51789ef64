#pragma once

#include "cobarlab/homology.hpp"
#include "cobarlab/koszul.hpp"
#include "cobarlab/scalar.hpp"
#include "cobarlab/sparse.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cobarlab {

/// Finite-type graded vector space with a named, ordered basis per degree.
/// If a total-degree cutoff is set, degrees above it are absent by
/// construction.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(std::optional<int> cutoff) : cutoff_(cutoff) {}

    void add_basis_element(int degree, const std::string& name);
    int dim(int degree) const;
    const std::vector<std::string>& names(int degree) const;
    int index_of(int degree, const std::string& name) const;  // -1 when absent
    bool has(int degree, const std::string& name) const { return index_of(degree, name) >= 0; }

    std::optional<int> cutoff() const { return cutoff_; }
    void set_cutoff(std::optional<int> c) { cutoff_ = c; }
    std::vector<int> degrees() const;  // degrees with dim > 0, ascending
    int min_degree() const;
    int max_degree() const;
    long total_dim() const;

    bool operator==(const GradedSpace& o) const { return basis_ == o.basis_; }

private:
    std::map<int, std::vector<std::string>> basis_;
    std::map<int, std::map<std::string, int>> index_;
    std::optional<int> cutoff_;
};

/// k-fold desuspension / suspension: shift(V, k) has (shift V)_n = V_{n+k},
/// with basis names decorated by the shift.
GradedSpace shift(const GradedSpace& v, int k);
std::string shifted_name(const std::string& name, int k);

/// Degree-homogeneous linear map between graded spaces, stored as one sparse
/// block per source degree; the block in degree n maps source_n to
/// target_{n+shift}. Absent blocks are zero.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(const GradedSpace* source, const GradedSpace* target, int degree_shift)
        : source_(source), target_(target), shift_(degree_shift) {}

    const GradedSpace* source() const { return source_; }
    const GradedSpace* target() const { return target_; }
    int degree_shift() const { return shift_; }

    void set_block(int degree, SparseMat block);
    /// Block in degree n (target rows, source cols); materializes zero.
    SparseMat block(int degree, Field f) const;
    bool has_block(int degree) const { return blocks_.count(degree) > 0; }
    const std::map<int, SparseMat>& blocks() const { return blocks_; }

    void add_entry(int src_degree, int src_index, int dst_index, const Scalar& v);

    SparseVec apply(int degree, const SparseVec& x, Field f) const;
    GradedMap compose(const GradedMap& inner, Field f) const;  // this ∘ inner
    GradedMap add(const GradedMap& o, Field f) const;
    GradedMap scale(const Scalar& c) const;
    bool is_zero() const;
    bool equals(const GradedMap& o, Field f, int max_degree) const;

    static GradedMap identity(const GradedSpace* v, Field f);

private:
    const GradedSpace* source_ = nullptr;
    const GradedSpace* target_ = nullptr;
    int shift_ = 0;
    std::map<int, SparseMat> blocks_;
};

/// ∂̄(f) = d ∘ f − (−1)^{|f|} f ∘ d, the differential of Hom.
GradedMap hom_differential(const GradedMap& f, const GradedMap& d_target, const GradedMap& d_source,
                           Field field, int max_degree);

struct ComplexReport {
    bool ok = true;
    std::string first_failure;  // basis element where d² first fails
};

/// A graded space with a degree −1 differential. d² = 0 is checked (up to
/// the cutoff), not assumed.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(GradedSpace space, Field field) : space_(std::move(space)), field_(field) {
        diff_ = GradedMap(&space_, &space_, -1);
    }
    // copies repoint the differential at the contained space
    ChainComplex(const ChainComplex& o) { *this = o; }
    ChainComplex& operator=(const ChainComplex& o);
    ChainComplex(ChainComplex&& o) : ChainComplex(static_cast<const ChainComplex&>(o)) {}
    ChainComplex& operator=(ChainComplex&& o) { return *this = static_cast<const ChainComplex&>(o); }

    const GradedSpace& space() const { return space_; }
    GradedSpace& space() { return space_; }
    Field field() const { return field_; }
    const GradedMap& differential() const { return diff_; }
    GradedMap& differential() { return diff_; }

    SparseMat d_block(int degree) const { return diff_.block(degree, field_); }
    ComplexReport validate(int max_degree) const;
    HomologySolver homology_at(int degree) const;
    std::vector<int> homology_dims(int max_degree) const;  // degrees 0..max

private:
    GradedSpace space_;
    Field field_ = Field::Q;
    GradedMap diff_;
};

}  // namespace cobarlab
