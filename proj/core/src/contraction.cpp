#include "cobarlab/contraction.hpp"

namespace cobarlab {

Contraction& Contraction::operator=(const Contraction& o) {
    big = o.big;
    small = o.small;
    proj = GradedMap(&big.space(), &small.space(), 0);
    incl = GradedMap(&small.space(), &big.space(), 0);
    nu = GradedMap(&big.space(), &big.space(), 1);
    for (const auto& [d, m] : o.proj.blocks()) proj.set_block(d, m);
    for (const auto& [d, m] : o.incl.blocks()) incl.set_block(d, m);
    for (const auto& [d, m] : o.nu.blocks()) nu.set_block(d, m);
    return *this;
}

bool Contraction::verify(int max_degree, std::string* why) const {
    Field f = big.field();
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    GradedMap pi = proj.compose(incl, f);
    GradedMap id_small = GradedMap::identity(&small.space(), f);
    if (!pi.equals(id_small, f, max_degree)) return fail("pi != Id");

    GradedMap ip = incl.compose(proj, f);
    GradedMap id_big = GradedMap::identity(&big.space(), f);
    GradedMap lhs = ip.add(id_big.scale(Scalar::from_int(f, -1)), f);
    const GradedMap& d = big.differential();
    GradedMap rhs = d.compose(nu, f).add(nu.compose(d, f), f);
    if (!lhs.equals(rhs, f, max_degree)) return fail("ip - Id != dν + νd");

    if (!proj.compose(nu, f).equals(GradedMap(&big.space(), &small.space(), 1), f, max_degree))
        return fail("pν != 0");
    if (!nu.compose(incl, f).equals(GradedMap(&small.space(), &big.space(), 1), f, max_degree))
        return fail("νi != 0");
    if (!nu.compose(nu, f).equals(GradedMap(&big.space(), &big.space(), 2), f, max_degree))
        return fail("ν² != 0");
    return true;
}

Contraction build_contraction(const ChainComplex& c) {
    const Field f = c.field();
    Contraction k;
    k.big = c;

    struct DegreeData {
        std::vector<SparseVec> reps;
        std::vector<std::string> rep_names;
        SparseMat p;   // H_n x C_n
        SparseMat nu;  // C_{n+1} x C_n
    };
    std::map<int, DegreeData> data;

    int lo = c.space().min_degree(), hi = c.space().max_degree();
    for (int n = lo; n <= hi; ++n) {
        int dim = c.space().dim(n);
        if (dim == 0) continue;
        SparseMat d_out = c.d_block(n);
        SparseMat d_in = c.d_block(n + 1);

        Rref rout = rref(d_out);
        Rref rin = rref(d_in);

        // boundaries with their preimage pivot columns in degree n+1
        std::vector<SparseVec> boundaries;
        for (int pc : rin.pivot_cols) {
            SparseVec col(f);
            for (int r = 0; r < d_in.rows(); ++r) col.add(r, d_in.at(r, pc));
            boundaries.push_back(std::move(col));
        }
        std::vector<SparseVec> cycles = kernel_basis(d_out);

        // representatives: cycle columns that extend the boundary span
        std::vector<SparseVec> cols = boundaries;
        cols.insert(cols.end(), cycles.begin(), cycles.end());
        Rref picked = rref(from_columns(f, dim, cols));
        DegreeData dd;
        int nb = static_cast<int>(boundaries.size());
        for (int pc : picked.pivot_cols) {
            if (pc < nb) continue;
            const SparseVec& rep = cycles[pc - nb];
            std::string name;
            if (rep.entries().size() == 1 && rep.entries()[0].second.is_one())
                name = c.space().names(n)[rep.entries()[0].first];
            else
                name = "H(" + std::to_string(n) + ";" + std::to_string(dd.reps.size()) + ")";
            dd.reps.push_back(rep);
            dd.rep_names.push_back(name);
        }

        // full splitting M = [boundaries | reps | complement-of-kernel units]
        std::vector<SparseVec> m_cols = boundaries;
        for (const auto& r : dd.reps) m_cols.push_back(r);
        for (int pc : rout.pivot_cols) m_cols.push_back(SparseVec::unit(f, pc));
        if (static_cast<int>(m_cols.size()) != dim)
            throw std::logic_error("contraction splitting is not a basis");
        SparseMat m = from_columns(f, dim, m_cols);
        Rref rm = rref(m);
        if (rm.rank() != dim) throw std::logic_error("contraction splitting not invertible");
        const SparseMat& minv = rm.transform;

        int nh = static_cast<int>(dd.reps.size());
        dd.p = SparseMat(f, nh, dim);
        for (int i = 0; i < nh; ++i)
            for (int cidx = 0; cidx < dim; ++cidx) dd.p.add(i, cidx, minv.at(nb + i, cidx));

        // ν(c) = −Σ β_i e_{pivot_in[i]} where β is the boundary part of c
        dd.nu = SparseMat(f, c.space().dim(n + 1), dim);
        for (int i = 0; i < nb; ++i) {
            int target = rin.pivot_cols[i];
            for (int cidx = 0; cidx < dim; ++cidx)
                dd.nu.add(target, cidx, -minv.at(i, cidx));
        }
        data[n] = std::move(dd);
    }

    GradedSpace hs(c.space().cutoff());
    for (const auto& [n, dd] : data)
        for (const auto& name : dd.rep_names) hs.add_basis_element(n, name);
    k.small = ChainComplex(std::move(hs), f);

    k.proj = GradedMap(&k.big.space(), &k.small.space(), 0);
    k.incl = GradedMap(&k.small.space(), &k.big.space(), 0);
    k.nu = GradedMap(&k.big.space(), &k.big.space(), 1);
    for (const auto& [n, dd] : data) {
        if (!dd.p.is_zero()) k.proj.set_block(n, dd.p);
        if (!dd.reps.empty())
            k.incl.set_block(n, from_columns(f, c.space().dim(n), dd.reps));
        if (!dd.nu.is_zero()) k.nu.set_block(n, dd.nu);
    }
    return k;
}

}  // namespace cobarlab
