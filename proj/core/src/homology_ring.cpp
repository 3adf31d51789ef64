#include "cobarlab/homology_ring.hpp"

#include <algorithm>

namespace cobarlab {

HomologyRing::HomologyRing(const CobarAlgebra& omega2, int max_degree)
    : a_(omega2), ops_(omega2), max_degree_(max_degree) {
    if (max_degree + 1 > omega2.cutoff())
        throw std::logic_error("HomologyRing needs one degree of headroom in the carrier");
    for (int n = 0; n <= max_degree; ++n)
        solvers_.push_back(std::make_unique<HomologySolver>(a_.complex().d_block(n + 1),
                                                            a_.complex().d_block(n)));
}

int HomologyRing::dim(int degree) const { return solvers_.at(degree)->dim(); }

std::vector<int> HomologyRing::dims() const {
    std::vector<int> out;
    for (const auto& s : solvers_) out.push_back(s->dim());
    return out;
}

WordSum HomologyRing::representative(int degree, const SparseVec& cls) const {
    return a_.sum_of(solvers_.at(degree)->chain_of(cls), degree);
}

SparseVec HomologyRing::reduce(int degree, const WordSum& cycle) const {
    return solvers_.at(degree)->reduce(a_.vec_of(cycle, degree));
}

bool HomologyRing::is_cycle(int degree, const WordSum& chain) const {
    return solvers_.at(degree)->is_cycle(a_.vec_of(chain, degree));
}

SparseVec HomologyRing::unit_class() const {
    WordSum unit = WordSum::unit(a_.field(), &a_.letters());
    return reduce(0, unit);
}

SparseVec HomologyRing::induced_product(int d1, const SparseVec& x, int d2,
                                        const SparseVec& y) const {
    WordSum p = ops_.product(representative(d1, x), representative(d2, y));
    return reduce(d1 + d2, p);
}

SparseVec HomologyRing::induced_bracket(int d1, const SparseVec& x, int d2,
                                        const SparseVec& y) const {
    WordSum rx = representative(d1, x), ry = representative(d2, y);
    // the bracket of the unit class with anything vanishes; cup1 excludes units
    WordSum br = a_.zero_sum();
    if (d1 > 0 && d2 > 0) br = ops_.bracket(rx, ry);
    return reduce(d1 + d2 + 1, br);
}

SparseVec HomologyRing::induced_xi(int d, const SparseVec& x) const {
    if (d == 0) return SparseVec(a_.field());
    WordSum r = representative(d, x);
    return reduce(2 * d + 1, ops_.xi1(r));
}

SparseVec HomologyRing::induced_delta(int d, const SparseVec& x) const {
    return reduce(d + 1, ops_.delta_cm(representative(d, x)));
}

std::vector<std::pair<std::string, int>> desuspended_generators(const DgCoalgebra& c) {
    if (!c.primitive())
        throw std::runtime_error("expected a primitive (double-suspension style) coalgebra");
    for (int g = 0; g < c.n_generators(); ++g)
        if (!c.differential_of(g).empty())
            throw std::runtime_error("expected a zero differential (double-suspension style)");
    std::vector<std::pair<std::string, int>> w;
    for (int g = 0; g < c.n_generators(); ++g) {
        int d = c.generators().degree(g) - 2;
        if (d < 1) throw std::runtime_error("generator of degree < 3 cannot desuspend twice");
        w.emplace_back(c.generators().name(g), d);
    }
    return w;
}

namespace {

/// Span of homology classes per degree, closed under the given binary and
/// unary induced operations; used for the generation half of the freeness
/// certificates.
struct Span {
    Field f;
    int max_degree;
    // per degree: echelon basis of the generated subspace, coordinates over
    // the homology basis
    std::vector<std::vector<SparseVec>> basis;

    explicit Span(Field field, int n) : f(field), max_degree(n), basis(n + 1) {}

    bool add(int degree, SparseVec v) {
        if (degree > max_degree) return false;
        for (const auto& b : basis[degree]) {
            if (v.is_zero()) break;
            int lead = b.leading_index();
            Scalar c = v.at(lead);
            if (!c.is_zero()) v.axpy(-c, b);
        }
        if (v.is_zero()) return false;
        Scalar inv = v.entries().front().second.inverse();
        v.scale(inv);
        // keep echelon: sort by leading index
        basis[degree].push_back(std::move(v));
        std::sort(basis[degree].begin(), basis[degree].end(),
                  [](const SparseVec& a, const SparseVec& b) {
                      return a.leading_index() < b.leading_index();
                  });
        // re-reduce upper entries for a canonical echelon set
        for (size_t i = 0; i < basis[degree].size(); ++i)
            for (size_t j = i + 1; j < basis[degree].size(); ++j) {
                Scalar c = basis[degree][i].at(basis[degree][j].leading_index());
                if (!c.is_zero()) basis[degree][i].axpy(-c, basis[degree][j]);
            }
        return true;
    }

    long dim(int degree) const { return static_cast<long>(basis[degree].size()); }
};

}  // namespace

FreenessReport verify_freeness(const DgCoalgebra& c, int max_degree, Field field) {
    if (c.field() != field) throw std::runtime_error("field mismatch between input and request");
    FreenessReport rep;

    auto w = desuspended_generators(c);
    FreeModel model(field, w, max_degree);
    auto model_dims = model.dims_enumerated();

    auto omega2 = CobarAlgebra::double_cobar(c, max_degree + 1);
    HomologyRing ring(*omega2, max_degree);

    rep.dims_equal = true;
    for (int n = 0; n <= max_degree; ++n) {
        long dh = ring.dim(n), dm = model_dims[n];
        rep.rows.push_back({n, dh, dm});
        if (dh != dm) rep.dims_equal = false;
    }

    // generation: close the span of the unit and the s⁻²W classes under
    // product, bracket and (over F2) the restriction
    Span span(field, max_degree);
    span.add(0, ring.unit_class());
    std::vector<std::pair<int, SparseVec>> fresh;
    for (int g = 0; g < c.n_generators(); ++g) {
        int deg = c.generators().degree(g) - 2;
        if (deg > max_degree) continue;
        Word content{omega2->base()->letters().id_of(c.generators().name(g))};
        int lid = omega2->letter_of_content(content);
        WordSum cls = omega2->word_sum(Word{lid});
        SparseVec v = ring.reduce(deg, cls);
        if (span.add(deg, v)) fresh.emplace_back(deg, v);
    }

    std::vector<std::pair<int, SparseVec>> all = fresh;
    while (!fresh.empty()) {
        std::vector<std::pair<int, SparseVec>> next;
        for (const auto& [dn, vn] : fresh) {
            // unary restriction
            if (field == Field::F2 && dn >= 1 && 2 * dn + 1 <= max_degree) {
                SparseVec xi = ring.induced_xi(dn, vn);
                if (span.add(2 * dn + 1, xi)) next.emplace_back(2 * dn + 1, xi);
            }
            for (const auto& [dm, vm] : all) {
                if (dn + dm <= max_degree) {
                    SparseVec p = ring.induced_product(dn, vn, dm, vm);
                    if (span.add(dn + dm, p)) next.emplace_back(dn + dm, p);
                    SparseVec p2 = ring.induced_product(dm, vm, dn, vn);
                    if (span.add(dn + dm, p2)) next.emplace_back(dn + dm, p2);
                }
                if (dn >= 1 && dm >= 1 && dn + dm + 1 <= max_degree) {
                    SparseVec b = ring.induced_bracket(dn, vn, dm, vm);
                    if (span.add(dn + dm + 1, b)) next.emplace_back(dn + dm + 1, b);
                }
            }
        }
        for (auto& x : next) all.push_back(x);
        fresh = std::move(next);
    }

    rep.generated = true;
    for (int n = 0; n <= max_degree; ++n)
        if (span.dim(n) != ring.dim(n)) rep.generated = false;
    return rep;
}

BvReport verify_bv(const DgCoalgebra& c, int max_degree) {
    if (c.field() != Field::Q) throw std::runtime_error("verify_bv runs over Q");
    BvReport rep;

    auto w = desuspended_generators(c);
    auto omega2 = CobarAlgebra::double_cobar(c, max_degree + 2);
    HomologyRing ring(*omega2, max_degree + 1);
    Field f = Field::Q;

    // H(Δ_CM) vanishes on the s⁻²W classes
    rep.delta_vanishes_on_generators = true;
    for (int g = 0; g < c.n_generators(); ++g) {
        int deg = c.generators().degree(g) - 2;
        if (deg > max_degree) continue;
        Word content{omega2->base()->letters().id_of(c.generators().name(g))};
        WordSum cls = omega2->word_sum(Word{omega2->letter_of_content(content)});
        SparseVec v = ring.reduce(deg, cls);
        if (!ring.induced_delta(deg, v).is_zero()) rep.delta_vanishes_on_generators = false;
    }

    // Δ² = 0 and the deviation identity on all class pairs ≤ max_degree
    rep.delta_squared_zero = true;
    rep.deviation_equals_bracket = true;
    for (int d1 = 0; d1 <= max_degree; ++d1) {
        for (int i = 0; i < ring.dim(d1); ++i) {
            SparseVec x = SparseVec::unit(f, i);
            if (d1 + 2 <= max_degree + 1) {
                SparseVec dd = ring.induced_delta(d1 + 1, ring.induced_delta(d1, x));
                if (!dd.is_zero()) rep.delta_squared_zero = false;
            }
            for (int d2 = 0; d1 + d2 + 1 <= max_degree + 1 && d2 <= max_degree; ++d2) {
                for (int j = 0; j < ring.dim(d2); ++j) {
                    SparseVec y = SparseVec::unit(f, j);
                    SparseVec lhs = ring.induced_delta(d1 + d2, ring.induced_product(d1, x, d2, y));
                    SparseVec t = ring.induced_product(d1 + 1, ring.induced_delta(d1, x), d2, y);
                    t.scale(-Scalar::one(f));
                    lhs.axpy(Scalar::one(f), t);
                    SparseVec t2 = ring.induced_product(d1, x, d2 + 1, ring.induced_delta(d2, y));
                    lhs.axpy(-Scalar::sign(f, d1), t2);
                    SparseVec rhs(f);
                    if (d1 >= 1 && d2 >= 1) rhs = ring.induced_bracket(d1, x, d2, y);
                    rhs.scale(Scalar::sign(f, d1));
                    rhs.scale(-Scalar::one(f));
                    lhs.axpy(Scalar::one(f), rhs);
                    if (!lhs.is_zero()) rep.deviation_equals_bracket = false;
                }
            }
        }
    }

    FreenessReport fr = verify_freeness(c, max_degree, Field::Q);
    rep.free_model_match = fr.ok();
    return rep;
}

}  // namespace cobarlab
