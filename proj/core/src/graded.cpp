#include "cobarlab/graded.hpp"

#include "cobarlab/parallel.hpp"

#include <algorithm>

namespace cobarlab {

void GradedSpace::add_basis_element(int degree, const std::string& name) {
    if (cutoff_ && degree > *cutoff_) return;
    auto& names = basis_[degree];
    auto& idx = index_[degree];
    if (idx.count(name)) throw std::logic_error("duplicate basis name '" + name + "' in degree " + std::to_string(degree));
    idx[name] = static_cast<int>(names.size());
    names.push_back(name);
}

int GradedSpace::dim(int degree) const {
    auto it = basis_.find(degree);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& GradedSpace::names(int degree) const {
    static const std::vector<std::string> kEmpty;
    auto it = basis_.find(degree);
    return it == basis_.end() ? kEmpty : it->second;
}

int GradedSpace::index_of(int degree, const std::string& name) const {
    auto it = index_.find(degree);
    if (it == index_.end()) return -1;
    auto jt = it->second.find(name);
    return jt == it->second.end() ? -1 : jt->second;
}

std::vector<int> GradedSpace::degrees() const {
    std::vector<int> out;
    for (const auto& [d, names] : basis_)
        if (!names.empty()) out.push_back(d);
    return out;
}

int GradedSpace::min_degree() const { return basis_.empty() ? 0 : basis_.begin()->first; }
int GradedSpace::max_degree() const { return basis_.empty() ? 0 : basis_.rbegin()->first; }

long GradedSpace::total_dim() const {
    long n = 0;
    for (const auto& [d, names] : basis_) n += static_cast<long>(names.size());
    return n;
}

std::string shifted_name(const std::string& name, int k) {
    if (k == 0) return name;
    return (k > 0 ? "s" + std::to_string(k) : "s" + std::to_string(k)) + "(" + name + ")";
}

GradedSpace shift(const GradedSpace& v, int k) {
    std::optional<int> cutoff = v.cutoff();
    if (cutoff) cutoff = *cutoff + k;
    GradedSpace out(cutoff);
    for (int d : v.degrees())
        for (const auto& name : v.names(d)) out.add_basis_element(d + k, shifted_name(name, k));
    return out;
}

void GradedMap::set_block(int degree, SparseMat block) {
    if (block.is_zero()) {
        blocks_.erase(degree);
        return;
    }
    blocks_[degree] = std::move(block);
}

SparseMat GradedMap::block(int degree, Field f) const {
    auto it = blocks_.find(degree);
    if (it != blocks_.end()) return it->second;
    return SparseMat(f, target_->dim(degree + shift_), source_->dim(degree));
}

void GradedMap::add_entry(int src_degree, int src_index, int dst_index, const Scalar& v) {
    auto it = blocks_.find(src_degree);
    if (it == blocks_.end()) {
        SparseMat m(v.field(), target_->dim(src_degree + shift_), source_->dim(src_degree));
        it = blocks_.emplace(src_degree, std::move(m)).first;
    }
    it->second.add(dst_index, src_index, v);
}

SparseVec GradedMap::apply(int degree, const SparseVec& x, Field f) const {
    return block(degree, f).apply(x);
}

GradedMap GradedMap::compose(const GradedMap& inner, Field f) const {
    GradedMap out(inner.source_, target_, shift_ + inner.shift_);
    for (const auto& [d, m] : inner.blocks_) {
        SparseMat prod = block(d + inner.shift_, f).multiply(m);
        if (!prod.is_zero()) out.blocks_[d] = std::move(prod);
    }
    return out;
}

GradedMap GradedMap::add(const GradedMap& o, Field f) const {
    if (shift_ != o.shift_) throw std::logic_error("graded map shift mismatch in add");
    GradedMap out(source_, target_, shift_);
    std::vector<int> degs;
    for (const auto& [d, m] : blocks_) degs.push_back(d);
    for (const auto& [d, m] : o.blocks_)
        if (!blocks_.count(d)) degs.push_back(d);
    for (int d : degs) {
        SparseMat s = block(d, f).add_mat(o.block(d, f));
        if (!s.is_zero()) out.blocks_[d] = std::move(s);
    }
    return out;
}

GradedMap GradedMap::scale(const Scalar& c) const {
    GradedMap out(source_, target_, shift_);
    if (c.is_zero()) return out;
    for (const auto& [d, m] : blocks_) out.blocks_[d] = m.scale(c);
    return out;
}

bool GradedMap::is_zero() const {
    for (const auto& [d, m] : blocks_)
        if (!m.is_zero()) return false;
    return true;
}

bool GradedMap::equals(const GradedMap& o, Field f, int max_degree) const {
    if (shift_ != o.shift_) return false;
    for (int d = source_->min_degree(); d <= max_degree; ++d)
        if (!(block(d, f) == o.block(d, f))) return false;
    return true;
}

GradedMap GradedMap::identity(const GradedSpace* v, Field f) {
    GradedMap out(v, v, 0);
    for (int d : v->degrees()) out.blocks_[d] = SparseMat::identity(f, v->dim(d));
    return out;
}

GradedMap hom_differential(const GradedMap& f, const GradedMap& d_target, const GradedMap& d_source,
                           Field field, int max_degree) {
    GradedMap left = d_target.compose(f, field);
    GradedMap right = f.compose(d_source, field);
    Scalar s = Scalar::sign(field, f.degree_shift() + 1);  // −(−1)^{|f|}
    GradedMap out = left.add(right.scale(s), field);
    (void)max_degree;
    return out;
}

ChainComplex& ChainComplex::operator=(const ChainComplex& o) {
    space_ = o.space_;
    field_ = o.field_;
    diff_ = GradedMap(&space_, &space_, -1);
    for (const auto& [d, m] : o.diff_.blocks()) diff_.set_block(d, m);
    return *this;
}

ComplexReport ChainComplex::validate(int max_degree) const {
    ComplexReport rep;
    for (int n = space_.min_degree(); n <= max_degree; ++n) {
        SparseMat dd = d_block(n - 1).multiply(d_block(n));
        if (dd.is_zero()) continue;
        rep.ok = false;
        for (auto& [r, c, v] : dd.entries()) {
            (void)r;
            (void)v;
            rep.first_failure = space_.names(n)[c] + " (degree " + std::to_string(n) + ")";
            return rep;
        }
    }
    return rep;
}

HomologySolver ChainComplex::homology_at(int degree) const {
    return HomologySolver(d_block(degree + 1), d_block(degree));
}

std::vector<int> ChainComplex::homology_dims(int max_degree) const {
    std::vector<int> dims(max_degree + 1, 0);
    parallel_for(max_degree + 1, [&](int n) { dims[n] = homology_at(n).dim(); });
    return dims;
}

}  // namespace cobarlab
