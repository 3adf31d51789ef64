// cobarlab command-line interface: iterated cobar constructions of exact
// dg-coalgebras, their homology with the induced Gerstenhaber/BV structure,
// and the verification suites, emitted as deterministic TSV or JSON tables.
#include "cobarlab/cobar.hpp"
#include "cobarlab/free_gerst.hpp"
#include "cobarlab/hga.hpp"
#include "cobarlab/hirsch.hpp"
#include "cobarlab/homology_ring.hpp"
#include "cobarlab/report.hpp"
#include "cobarlab/transfer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cobarlab;

namespace {

struct Options {
    std::string input;
    std::string family_input;
    std::optional<std::string> field_override;
    int maxdeg = 8;
    std::string format = "tsv";
    uint64_t seed = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string load_text(const Options& opt) {
    std::string text = read_file(opt.input);
    if (opt.field_override) {
        std::istringstream in(text);
        std::ostringstream out;
        out << "field " << *opt.field_override << "\n";
        std::string line;
        while (std::getline(in, line)) {
            std::string t = line.substr(0, line.find('#'));
            auto pos = t.find_first_not_of(" \t");
            if (pos != std::string::npos && t.compare(pos, 6, "field ") == 0) continue;
            out << line << "\n";
        }
        return out.str();
    }
    return text;
}

Report base_report(const std::string& command, const Options& opt) {
    Report rep;
    rep.command = command;
    rep.config = {{"input", opt.input},
                  {"maxdeg", std::to_string(opt.maxdeg)},
                  {"format", opt.format},
                  {"seed", std::to_string(opt.seed)}};
    if (opt.field_override) rep.config.emplace_back("field", *opt.field_override);
    return rep;
}

int emit(const Report& rep, const Options& opt) {
    std::cout << (opt.format == "json" ? rep.to_json() : rep.to_tsv());
    return rep.pass ? 0 : 1;
}

int emit_input_error(const std::string& command, const Options& opt, const std::string& what) {
    Report rep = base_report(command, opt);
    rep.pass = false;
    rep.tables.push_back({"error", {"message"}, {{what}}});
    std::cout << (opt.format == "json" ? rep.to_json() : rep.to_tsv());
    return 2;
}

Table dims_table(const std::string& name, const std::vector<int>& dims) {
    Table t{name, {"degree", "dim"}, {}};
    for (size_t n = 0; n < dims.size(); ++n)
        t.rows.push_back({std::to_string(n), std::to_string(dims[n])});
    return t;
}

int cmd_validate(const Options& opt) {
    Report rep = base_report("validate", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        ChainComplex cx = c.chain_complex(opt.maxdeg);
        ComplexReport v = cx.validate(opt.maxdeg);
        Table t{"validation", {"check", "result", "detail"}, {}};
        t.rows.push_back({"coalgebra-axioms", "pass", ""});
        t.rows.push_back({"d-squared", v.ok ? "pass" : "fail", v.first_failure});
        t.rows.push_back({"primitive", c.primitive() ? "yes" : "no", ""});
        rep.tables.push_back(std::move(t));
        rep.pass = v.ok;
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("validate", opt, e.what());
    }
}

int cmd_cobar(const Options& opt, bool twice) {
    const char* name = twice ? "double-cobar" : "cobar";
    Report rep = base_report(name, opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        auto a = twice ? CobarAlgebra::double_cobar(c, opt.maxdeg)
                       : CobarAlgebra::cobar(c, opt.maxdeg);
        std::vector<int> dims;
        for (int n = 0; n <= opt.maxdeg; ++n) dims.push_back(a->space().dim(n));
        rep.tables.push_back(dims_table(twice ? "dim Ω²C" : "dim ΩC", dims));
        ComplexReport v = a->complex().validate(opt.maxdeg);
        rep.tables.push_back({"differential", {"check", "result", "detail"},
                              {{"d-squared", v.ok ? "pass" : "fail", v.first_failure}}});
        rep.pass = v.ok;
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error(name, opt, e.what());
    }
}

int cmd_homology(const Options& opt, const std::string& target) {
    Report rep = base_report("homology", opt);
    rep.config.emplace_back("target", target);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        std::vector<int> dims;
        if (target == "complex") {
            ChainComplex cx = c.chain_complex(opt.maxdeg + 1);
            ComplexReport v = cx.validate(opt.maxdeg + 1);
            if (!v.ok) return emit_input_error("homology", opt, "d² ≠ 0 at " + v.first_failure);
            dims = cx.homology_dims(opt.maxdeg);
        } else if (target == "cobar") {
            auto a = CobarAlgebra::cobar(c, opt.maxdeg + 1);
            dims = a->complex().homology_dims(opt.maxdeg);
        } else {
            auto a = CobarAlgebra::double_cobar(c, opt.maxdeg + 1);
            dims = a->complex().homology_dims(opt.maxdeg);
        }
        rep.tables.push_back(dims_table("dim H", dims));
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("homology", opt, e.what());
    }
}

int cmd_free_dims(const Options& opt) {
    Report rep = base_report("free-dims", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        auto w = desuspended_generators(c);
        FreeModel model(c.field(), w, opt.maxdeg);
        auto a = model.dims_enumerated();
        auto b = model.dims_pbw();
        Table t{"free model dimensions", {"degree", "enumerated", "pbw"}, {}};
        bool equal = true;
        for (int n = 0; n <= opt.maxdeg; ++n) {
            t.rows.push_back({std::to_string(n), std::to_string(a[n]), std::to_string(b[n])});
            if (a[n] != b[n]) equal = false;
        }
        rep.tables.push_back(std::move(t));
        rep.pass = equal;
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("free-dims", opt, e.what());
    }
}

int cmd_verify_freeness(const Options& opt) {
    Report rep = base_report("verify-freeness", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        FreenessReport fr = verify_freeness(c, opt.maxdeg, c.field());
        Table t{"freeness", {"degree", "dim H", "dim model", "equal"}, {}};
        for (const auto& r : fr.rows)
            t.rows.push_back({std::to_string(r.degree), std::to_string(r.dim_homology),
                              std::to_string(r.dim_model),
                              r.dim_homology == r.dim_model ? "yes" : "NO"});
        rep.tables.push_back(std::move(t));
        rep.tables.push_back({"generation",
                              {"check", "result"},
                              {{"classes of s⁻²W generate", fr.generated ? "pass" : "fail"}}});
        rep.pass = fr.ok();
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("verify-freeness", opt, e.what());
    }
}

int cmd_verify_bv(const Options& opt) {
    Report rep = base_report("verify-bv", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        BvReport bv = verify_bv(c, opt.maxdeg);
        Table t{"bv", {"check", "result"}, {}};
        t.rows.push_back({"H(Δ) vanishes on s⁻²W", bv.delta_vanishes_on_generators ? "pass" : "fail"});
        t.rows.push_back({"Δ² = 0 on classes", bv.delta_squared_zero ? "pass" : "fail"});
        t.rows.push_back({"deviation equals bracket", bv.deviation_equals_bracket ? "pass" : "fail"});
        t.rows.push_back({"free BV model match", bv.free_model_match ? "pass" : "fail"});
        rep.tables.push_back(std::move(t));
        rep.pass = bv.ok();
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("verify-bv", opt, e.what());
    }
}

int cmd_check_identities(const Options& opt) {
    Report rep = base_report("check-identities", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        auto a = CobarAlgebra::double_cobar(c, opt.maxdeg + 2);
        HgaOps ops(*a);
        IdentityReport ir = check_hga_identities(ops, opt.maxdeg);
        Table t{"identities", {"identity", "result", "counterexample"}, {}};
        for (const auto& r : ir.rows)
            t.rows.push_back({r.name, r.pass ? "PASS" : "FAIL", r.counterexample});
        rep.tables.push_back(std::move(t));
        rep.pass = ir.ok();
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("check-identities", opt, e.what());
    }
}

int cmd_htt(const Options& opt) {
    Report rep = base_report("htt", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        ChainComplex cx = c.chain_complex(opt.maxdeg + 1);
        Contraction k = build_contraction(cx);
        std::string why;
        bool kc = k.verify(opt.maxdeg, &why);
        TransferResult t = transfer_ainfty(c, k, opt.maxdeg);
        bool ainf = verify_a_infinity(c, k, t, opt.maxdeg, &why);
        Table tt{"transferred co-operations", {"operation", "support"}, {}};
        for (size_t i = 0; i < t.partial.size(); ++i) {
            long nnz = 0;
            for (const auto& [src, terms] : t.partial[i].images) nnz += static_cast<long>(terms.size());
            tt.rows.push_back({"∂_" + std::to_string(i + 1), std::to_string(nnz)});
        }
        for (size_t i = 0; i < t.tau.size(); ++i) {
            long nnz = 0;
            for (const auto& [src, terms] : t.tau[i].images) nnz += static_cast<long>(terms.size());
            tt.rows.push_back({"τ_" + std::to_string(i), std::to_string(nnz)});
        }
        rep.tables.push_back(std::move(tt));
        rep.tables.push_back({"checks",
                              {"check", "result", "detail"},
                              {{"contraction identities", kc ? "pass" : "fail", ""},
                               {"A∞ relations", ainf ? "pass" : "fail", ainf ? "" : why}}});
        rep.pass = kc && ainf;
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("htt", opt, e.what());
    }
}

int cmd_formality(const Options& opt) {
    Report rep = base_report("formality", opt);
    try {
        DgCoalgebra c = parse_coalgebra(load_text(opt));
        FormalityReport fr = verify_formality(c, opt.maxdeg);
        Table t{"formality", {"check", "result"}, {}};
        t.rows.push_back({"Ωp chain map", fr.p_chain_map ? "pass" : "fail"});
        t.rows.push_back({"H(ΩC) ≅ H(ΩH) degreewise", fr.quasi_iso_level1 ? "pass" : "fail"});
        t.rows.push_back({"dim H(Ω²C) = dim H(Ω²H)", fr.dims_level2_equal ? "pass" : "fail"});
        rep.tables.push_back(std::move(t));
        Table dims{"level-2 homology", {"degree", "dim Ω²C", "dim Ω²H"}, {}};
        for (size_t n = 0; n < fr.dims_omega2_c.size(); ++n)
            dims.rows.push_back({std::to_string(n), std::to_string(fr.dims_omega2_c[n]),
                                 std::to_string(fr.dims_omega2_h[n])});
        rep.tables.push_back(std::move(dims));
        // the cobar-level homotopy and its gauge conditions
        CobarGamma g(c, opt.maxdeg + 1);
        std::string why;
        bool gok = g.verify(opt.maxdeg, &why);
        rep.tables.push_back({"homotopy",
                              {"check", "result", "detail"},
                              {{"dΓ + Γd = ΩiΩp − Id with gauge", gok ? "pass" : "fail", gok ? "" : why}}});
        rep.pass = fr.ok() && gok;
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("formality", opt, e.what());
    }
}

int cmd_hirsch(const Options& opt) {
    Report rep = base_report("hirsch-check", opt);
    try {
        auto [c, fam] = parse_family(load_text(opt));
        HirschReport hr = check_hirsch(c, fam, opt.maxdeg);
        Table t{"hirsch", {"condition", "result"}, {}};
        t.rows.push_back({"counit", hr.counit ? "pass" : "fail"});
        t.rows.push_back({"leibniz", hr.leibniz ? "pass" : "fail"});
        t.rows.push_back({"coassoc", hr.coassoc ? "pass" : "fail"});
        t.rows.push_back({"left_coideal", hr.left_coideal ? "pass" : "fail"});
        t.rows.push_back({"leftsided_iff", hr.leftsided_iff ? "pass" : "fail"});
        rep.tables.push_back(std::move(t));
        rep.tables.push_back({"nabla1 homotopy residuals",
                              {"convention", "vanishes"},
                              {{"signed twist", hr.nabla1_homotopy_signed ? "yes" : "no"},
                               {"unsigned twist", hr.nabla1_homotopy_unsigned ? "yes" : "no"}}});
        // seeded equivalence sweep on random families over the same coalgebra
        int sweeps = 20, good = 0;
        for (int s = 0; s < sweeps; ++s) {
            bool higher = (s % 2 == 1);
            try {
                TwistingFamily rnd = random_family(c, opt.seed + s, higher);
                HirschReport rr = check_hirsch(c, rnd, std::min(opt.maxdeg, 6));
                if (rr.leftsided_iff) ++good;
            } catch (const std::exception&) {
                ++good;  // no room for a higher component at these degrees
            }
        }
        rep.tables.push_back({"leftsided equivalence sweep",
                              {"families", "consistent"},
                              {{std::to_string(sweeps), std::to_string(good)}}});
        rep.pass = hr.ok() && good == sweeps;
        return emit(rep, opt);
    } catch (const std::exception& e) {
        return emit_input_error("hirsch-check", opt, e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cobarlab: iterated cobar constructions over exact fields"};
    app.require_subcommand(1);

    Options opt;
    std::string field_str;
    std::string target = "double-cobar";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", opt.input, "coalgebra file")->required();
        sub->add_option("--maxdeg", opt.maxdeg, "total-degree cutoff")->check(CLI::Range(2, 64));
        sub->add_option("--field", field_str, "field override (F2 or Q)");
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}));
        sub->add_option("--seed", opt.seed, "seed for randomized property sweeps");
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a coalgebra");
    auto* cobar1 = app.add_subcommand("cobar", "dimensions and differential of ΩC");
    auto* cobar2 = app.add_subcommand("double-cobar", "dimensions and differential of Ω²C");
    auto* homology = app.add_subcommand("homology", "homology dimensions");
    homology->add_option("--target", target, "complex | cobar | double-cobar")
        ->check(CLI::IsMember({"complex", "cobar", "double-cobar"}));
    auto* freedims = app.add_subcommand("free-dims", "free-model dimensions, two routes");
    auto* vfree = app.add_subcommand("verify-freeness", "homology vs free model");
    auto* vbv = app.add_subcommand("verify-bv", "BV suite over Q");
    auto* ids = app.add_subcommand("check-identities", "char-2 homotopy G-algebra identities");
    auto* htt = app.add_subcommand("htt", "homotopy transfer across a contraction");
    auto* formality = app.add_subcommand("formality", "formality pipeline for primitive inputs");
    auto* hirsch = app.add_subcommand("hirsch-check", "structural co-operation family checks");
    for (auto* sub : {validate, cobar1, cobar2, homology, freedims, vfree, vbv, ids, htt, formality, hirsch})
        add_common(sub);

    CLI11_PARSE(app, argc, argv);
    if (!field_str.empty()) opt.field_override = field_str;

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (cobar1->parsed()) return cmd_cobar(opt, false);
        if (cobar2->parsed()) return cmd_cobar(opt, true);
        if (homology->parsed()) return cmd_homology(opt, target);
        if (freedims->parsed()) return cmd_free_dims(opt);
        if (vfree->parsed()) return cmd_verify_freeness(opt);
        if (vbv->parsed()) return cmd_verify_bv(opt);
        if (ids->parsed()) return cmd_check_identities(opt);
        if (htt->parsed()) return cmd_htt(opt);
        if (formality->parsed()) return cmd_formality(opt);
        if (hirsch->parsed()) return cmd_hirsch(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
