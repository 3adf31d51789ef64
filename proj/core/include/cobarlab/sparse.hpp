#pragma once

#include "cobarlab/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cobarlab {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
class SparseVec {
public:
    SparseVec() = default;
    explicit SparseVec(Field f) : field_(f) {}

    Field field() const { return field_; }
    bool is_zero() const { return entries_.empty(); }
    const std::vector<std::pair<int, Scalar>>& entries() const { return entries_; }

    Scalar at(int i) const;
    void add(int i, const Scalar& v);
    void scale(const Scalar& c);
    /// *this += c * o
    void axpy(const Scalar& c, const SparseVec& o);
    int leading_index() const;  // -1 when zero

    bool operator==(const SparseVec& o) const { return entries_ == o.entries_; }

    static SparseVec unit(Field f, int i) {
        SparseVec v(f);
        v.add(i, Scalar::one(f));
        return v;
    }

private:
    Field field_ = Field::Q;
    std::vector<std::pair<int, Scalar>> entries_;
};

/// Sparse matrix over an exact field. Entries are kept sorted by (row, col)
/// with no explicit zeros and no duplicate positions, so the representation
/// of a given map is unique for a fixed basis order.
class SparseMat {
public:
    SparseMat() = default;
    SparseMat(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), row_data_(rows, SparseVec(f)) {}

    static SparseMat identity(Field f, int n);
    static SparseMat zero(Field f, int rows, int cols) { return SparseMat(f, rows, cols); }

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Scalar& v);
    void add(int r, int c, const Scalar& v);
    Scalar at(int r, int c) const;
    const SparseVec& row(int r) const { return row_data_[r]; }
    long nnz() const;

    /// Canonical entry list, sorted by (row, col).
    std::vector<std::tuple<int, int, Scalar>> entries() const;

    SparseVec apply(const SparseVec& x) const;  // matrix * column vector
    SparseMat multiply(const SparseMat& o) const;
    SparseMat add_mat(const SparseMat& o) const;
    SparseMat scale(const Scalar& c) const;
    SparseMat transpose() const;
    bool is_zero() const;
    bool operator==(const SparseMat& o) const;

    SparseMat permute_cols(const std::vector<int>& perm) const;

private:
    Field field_ = Field::Q;
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> row_data_;
};

/// Reduced row echelon form together with the pivot columns and the
/// transform T with T * m = rref; T records each result row in terms of
/// the original rows.
struct Rref {
    SparseMat reduced;
    std::vector<int> pivot_cols;
    SparseMat transform;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(const SparseMat& m);

/// Basis of ker(m), one canonical echelon-derived vector per free column.
std::vector<SparseVec> kernel_basis(const SparseMat& m);

int rank(const SparseMat& m);

/// Solve m * x = b exactly; empty when b is outside the column space.
std::optional<SparseVec> solve(const SparseMat& m, const SparseVec& b);

/// Columns of m at the pivot positions of rref(m): a basis of the image.
std::vector<SparseVec> image_basis(const SparseMat& m);

SparseMat from_columns(Field f, int rows, const std::vector<SparseVec>& cols);

}  // namespace cobarlab
