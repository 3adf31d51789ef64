#include "cobarlab/sparse.hpp"

#include <algorithm>
#include <map>

namespace cobarlab {

Scalar SparseVec::at(int i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const auto& e, int k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Scalar::zero(field_);
}

void SparseVec::add(int i, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const auto& e, int k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    } else {
        entries_.insert(it, {i, v});
    }
}

void SparseVec::scale(const Scalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.second *= c;
}

void SparseVec::axpy(const Scalar& c, const SparseVec& o) {
    if (c.is_zero() || o.entries_.empty()) return;
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(entries_.size() + o.entries_.size());
    size_t i = 0, j = 0;
    while (i < entries_.size() || j < o.entries_.size()) {
        if (j == o.entries_.size() ||
            (i < entries_.size() && entries_[i].first < o.entries_[j].first)) {
            out.push_back(entries_[i++]);
        } else if (i == entries_.size() || o.entries_[j].first < entries_[i].first) {
            Scalar v = c * o.entries_[j].second;
            if (!v.is_zero()) out.emplace_back(o.entries_[j].first, v);
            ++j;
        } else {
            Scalar v = entries_[i].second + c * o.entries_[j].second;
            if (!v.is_zero()) out.emplace_back(entries_[i].first, v);
            ++i;
            ++j;
        }
    }
    entries_ = std::move(out);
}

int SparseVec::leading_index() const { return entries_.empty() ? -1 : entries_.front().first; }

SparseMat SparseMat::identity(Field f, int n) {
    SparseMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(f));
    return m;
}

void SparseMat::set(int r, int c, const Scalar& v) {
    Scalar cur = row_data_[r].at(c);
    row_data_[r].add(c, v - cur);
}

void SparseMat::add(int r, int c, const Scalar& v) { row_data_[r].add(c, v); }

Scalar SparseMat::at(int r, int c) const { return row_data_[r].at(c); }

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& r : row_data_) n += static_cast<long>(r.entries().size());
    return n;
}

std::vector<std::tuple<int, int, Scalar>> SparseMat::entries() const {
    std::vector<std::tuple<int, int, Scalar>> out;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[r].entries()) out.emplace_back(r, c, v);
    return out;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
    SparseVec y(field_);
    for (int r = 0; r < rows_; ++r) {
        Scalar acc = Scalar::zero(field_);
        for (const auto& [c, v] : row_data_[r].entries()) acc += v * x.at(c);
        y.add(r, acc);
    }
    return y;
}

SparseMat SparseMat::multiply(const SparseMat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix dimension mismatch in multiply");
    SparseMat out(field_, rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        SparseVec acc(field_);
        for (const auto& [k, v] : row_data_[r].entries()) acc.axpy(v, o.row_data_[k]);
        out.row_data_[r] = std::move(acc);
    }
    return out;
}

SparseMat SparseMat::add_mat(const SparseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in add");
    SparseMat out = *this;
    for (int r = 0; r < rows_; ++r) out.row_data_[r].axpy(Scalar::one(field_), o.row_data_[r]);
    return out;
}

SparseMat SparseMat::scale(const Scalar& c) const {
    SparseMat out = *this;
    for (auto& r : out.row_data_) r.scale(c);
    return out;
}

SparseMat SparseMat::transpose() const {
    SparseMat out(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[r].entries()) out.add(c, r, v);
    return out;
}

bool SparseMat::is_zero() const {
    for (const auto& r : row_data_)
        if (!r.is_zero()) return false;
    return true;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && row_data_ == o.row_data_;
}

SparseMat SparseMat::permute_cols(const std::vector<int>& perm) const {
    SparseMat out(field_, rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : row_data_[r].entries()) out.add(r, perm[c], v);
    return out;
}

Rref rref(const SparseMat& m) {
    const Field f = m.field();
    const int nr = m.rows(), nc = m.cols();
    // Work rows paired with transform rows; pivoting is deterministic: scan
    // columns left to right, take the first remaining row with a nonzero
    // entry. This keeps representatives reproducible across runs.
    std::vector<SparseVec> work, trans;
    work.reserve(nr);
    trans.reserve(nr);
    for (int r = 0; r < nr; ++r) {
        work.push_back(m.row(r));
        trans.push_back(SparseVec::unit(f, r));
    }
    std::vector<int> pivots;
    int next = 0;  // rows [0, next) are settled pivot rows
    for (int c = 0; c < nc && next < nr; ++c) {
        int pr = -1;
        for (int r = next; r < nr; ++r) {
            if (!work[r].at(c).is_zero()) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(work[next], work[pr]);
        std::swap(trans[next], trans[pr]);
        Scalar inv = work[next].at(c).inverse();
        work[next].scale(inv);
        trans[next].scale(inv);
        for (int r = 0; r < nr; ++r) {
            if (r == next) continue;
            Scalar v = work[r].at(c);
            if (v.is_zero()) continue;
            work[r].axpy(-v, work[next]);
            trans[r].axpy(-v, trans[next]);
        }
        pivots.push_back(c);
        ++next;
    }
    Rref out;
    out.reduced = SparseMat(f, nr, nc);
    out.transform = SparseMat(f, nr, nr);
    for (int r = 0; r < nr; ++r) {
        for (const auto& [c, v] : work[r].entries()) out.reduced.add(r, c, v);
        for (const auto& [c, v] : trans[r].entries()) out.transform.add(r, c, v);
    }
    out.pivot_cols = std::move(pivots);
    return out;
}

std::vector<SparseVec> kernel_basis(const SparseMat& m) {
    const Field f = m.field();
    Rref e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<int> pivot_row(m.cols(), -1);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        is_pivot[e.pivot_cols[i]] = true;
        pivot_row[e.pivot_cols[i]] = static_cast<int>(i);
    }
    std::vector<SparseVec> out;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        SparseVec v(f);
        v.add(c, Scalar::one(f));
        for (int p : e.pivot_cols) {
            Scalar coef = e.reduced.at(pivot_row[p], c);
            if (!coef.is_zero()) v.add(p, -coef);
        }
        out.push_back(std::move(v));
    }
    return out;
}

int rank(const SparseMat& m) { return rref(m).rank(); }

std::optional<SparseVec> solve(const SparseMat& m, const SparseVec& b) {
    Rref e = rref(m);
    // y = T b; rows beyond the rank must vanish for consistency.
    SparseVec y = e.transform.apply(b);
    for (const auto& [r, v] : y.entries()) {
        (void)v;
        if (r >= e.rank()) return std::nullopt;
    }
    SparseVec x(m.field());
    for (int i = 0; i < e.rank(); ++i) x.add(e.pivot_cols[i], y.at(i));
    return x;
}

std::vector<SparseVec> image_basis(const SparseMat& m) {
    Rref e = rref(m);
    std::vector<SparseVec> out;
    for (int c : e.pivot_cols) {
        SparseVec col(m.field());
        for (int r = 0; r < m.rows(); ++r) col.add(r, m.at(r, c));
        out.push_back(std::move(col));
    }
    return out;
}

SparseMat from_columns(Field f, int rows, const std::vector<SparseVec>& cols) {
    SparseMat out(f, rows, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const auto& [r, v] : cols[c].entries()) out.add(r, static_cast<int>(c), v);
    return out;
}

}  // namespace cobarlab
