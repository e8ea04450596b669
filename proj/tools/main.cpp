#include <bunmot/render.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace bunmot;

namespace {

enum class Format { json, text, latex };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "text") return Format::text;
    if (s == "latex") return Format::latex;
    throw validation_error("format: expected json, text or latex, got '" + s + "'");
}

Format default_format() {
    const char* env = std::getenv("BUNMOT_FORMAT");
    return env ? parse_format(env) : Format::text;
}

void emit(const json& j, const std::string& text, const std::string& latex, Format f) {
    switch (f) {
        case Format::json: std::cout << j.dump(2) << "\n"; break;
        case Format::text: std::cout << text; break;
        case Format::latex: std::cout << latex; break;
    }
}

IsogenyDatum parse_isogeny(const RootSystem& rs, const std::string& s) {
    if (s == "sc" || s == "simply_connected")
        return fundamental_group_order(rs, IsogenyKind::simply_connected);
    if (s == "adjoint") return fundamental_group_order(rs, IsogenyKind::adjoint);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw validation_error("isogeny: expected sc, adjoint or a positive integer, got '" +
                                   s + "'");
    return fundamental_group_order(rs, IsogenyKind::custom, Int(s));
}

std::pair<int, int> parse_range(const std::string& s, const char* field) {
    auto fail = [&] {
        throw validation_error(std::string(field) + ": expected N or LO..HI, got '" + s + "'");
    };
    auto dots = s.find("..");
    auto to_int = [&](const std::string& p) {
        if (p.empty()) fail();
        for (char c : p)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        return std::stoi(p);
    };
    if (dots == std::string::npos) {
        int v = to_int(s);
        return {v, v};
    }
    int lo = to_int(s.substr(0, dots));
    int hi = to_int(s.substr(dots + 2));
    if (hi < lo) throw validation_error(std::string(field) + ": empty range '" + s + "'");
    return {lo, hi};
}

std::vector<int> parse_subset(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (cur.empty()) throw validation_error("subset: empty entry in '" + s + "'");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else {
            throw validation_error("subset: expected comma-separated indices, got '" + s + "'");
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

json series_meta(const RootSystem* rs, int genus, const std::string& isogeny,
                 const std::string& space) {
    json m = json::object();
    if (rs) m["group"] = rs->label();
    m["space"] = space;
    if (genus >= 0) m["genus"] = genus;
    if (!isogeny.empty()) m["isogeny"] = isogeny;
    return m;
}

int run(int argc, char** argv) {
    CLI::App app{"exact invariants of root systems and of the moduli stack of bundles over "
                 "a curve"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_str;
    app.add_option("--format", format_str, "output format: json, text or latex");

    std::string group, isogeny = "sc", input, curve, subset, families = "ABCD";
    std::string ranks = "1..8", genus_range = "2..6", space = "bun";
    int genus = -1, trunc = -1, max_degree = -1, constant_levels = -1;
    bool emit_datum = false;

    auto add_group = [&](CLI::App* cmd) {
        cmd->add_option("group", group, "group label FAMILYrank, e.g. B3")->required();
    };

    auto* cmd_roots = app.add_subcommand("roots", "roots, Cartan matrix, dimensions");
    add_group(cmd_roots);

    auto* cmd_degrees = app.add_subcommand("degrees", "fundamental degrees and |W|");
    add_group(cmd_degrees);

    auto* cmd_par = app.add_subcommand("parabolics", "unipotent-radical dimensions");
    add_group(cmd_par);
    cmd_par->add_option("--subset", subset, "comma-separated simple-root indices for one subset");

    auto* cmd_dmin = app.add_subcommand("dmin", "instability codimension: table vs brute force");
    add_group(cmd_dmin);
    cmd_dmin->add_option("--genus", genus, "curve genus (>= 2)")->required();

    auto* cmd_range = app.add_subcommand("range", "stable comparison range i < 2d");
    add_group(cmd_range);
    cmd_range->add_option("--genus", genus, "curve genus (>= 2)")->required();

    auto* cmd_poinc = app.add_subcommand("poincare", "Poincare series");
    add_group(cmd_poinc);
    cmd_poinc->add_option("--genus", genus, "curve genus (needed for the bundle stack)");
    cmd_poinc->add_option("--trunc", trunc, "truncation order in t (default 2*max-degree+1 or 20)");
    cmd_poinc->add_option("--max-degree", max_degree, "request degrees up to this instead");
    cmd_poinc->add_option("--isogeny", isogeny, "sc, adjoint or a positive integer");
    cmd_poinc->add_option("--space", space, "bun, bg, g, loopg or bt");

    auto* cmd_epoly = app.add_subcommand("epoly", "Hodge-Deligne E-polynomial of the stack");
    add_group(cmd_epoly);
    cmd_epoly->add_option("--genus", genus, "curve genus")->required();
    cmd_epoly->add_option("--trunc", trunc, "truncation order in t");
    cmd_epoly->add_option("--max-degree", max_degree, "request degrees up to this instead");
    cmd_epoly->add_option("--isogeny", isogeny, "sc, adjoint or a positive integer");

    auto* cmd_motive = app.add_subcommand("motive", "term-by-term motive of the stack");
    add_group(cmd_motive);
    cmd_motive->add_option("--genus", genus, "curve genus (>= 2)")->required();
    cmd_motive->add_option("--max-degree", max_degree, "top cohomological degree (default 12)");
    cmd_motive->add_option("--isogeny", isogeny, "sc, adjoint or a positive integer");

    auto* cmd_coarse = app.add_subcommand("coarse", "motive of the coarse space, valid range");
    add_group(cmd_coarse);
    cmd_coarse->add_option("--genus", genus, "curve genus (>= 2)")->required();
    cmd_coarse->add_option("--max-degree", max_degree, "report degrees up to this");
    cmd_coarse->add_option("--isogeny", isogeny, "sc, adjoint or a positive integer");

    auto* cmd_wcx = app.add_subcommand("weightcx", "weight-graded cohomology from boundary data");
    cmd_wcx->add_option("--input", input, "JSON file with the strata datum");
    cmd_wcx->add_option("--curve", curve, "builder: genus,points for a punctured curve");
    cmd_wcx->add_option("--constant-levels", constant_levels,
                        "wrap the pair into a constant simplicial object with this top level");
    cmd_wcx->add_flag("--emit-datum", emit_datum, "print the input datum as JSON and exit");

    auto* cmd_audit = app.add_subcommand("audit", "sweep the closed-form table against brute force");
    cmd_audit->add_option("--families", families, "subset of ABCD (default ABCD)");
    cmd_audit->add_option("--ranks", ranks, "rank range LO..HI (default 1..8)");
    cmd_audit->add_option("--genus", genus_range, "genus or range LO..HI (default 2..6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    Format fmt = format_str.empty() ? default_format() : parse_format(format_str);

    if (cmd_roots->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        emit(roots_json(rs), roots_text(rs), roots_latex(rs), fmt);
        return 0;
    }
    if (cmd_degrees->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        InvariantDegrees deg = fundamental_degrees(rs);
        emit(degrees_json(rs, deg), degrees_text(rs, deg), degrees_latex(rs, deg), fmt);
        return 0;
    }
    if (cmd_par->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        if (!subset.empty()) {
            ParabolicSubset p = parabolic_subset(rs, parse_subset(subset));
            json j;
            j["schema_version"] = kSchemaVersion;
            j["kind"] = "parabolic_subset";
            j["group"] = rs.label();
            j["I"] = p.I;
            j["levi_positive_roots"] = p.levi_positive.size();
            j["unipotent_radical_dim"] = p.lambda.size();
            std::string txt = rs.label() + " subset {";
            for (std::size_t i = 0; i < p.I.size(); ++i)
                txt += (i ? "," : "") + std::to_string(p.I[i]);
            txt += "}: dim R_u = " + std::to_string(p.lambda.size()) + "\n";
            emit(j, txt, "% " + txt, fmt);
            return 0;
        }
        emit(parabolics_json(rs), parabolics_text(rs), parabolics_latex(rs), fmt);
        return 0;
    }
    if (cmd_dmin->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        StabilityBound brute = instability_codim_bruteforce(rs, genus);
        StabilityBound closed = closed_form_d(f, n, genus);
        emit(dmin_json(rs, brute, closed), dmin_text(rs, brute, closed),
             dmin_latex(rs, brute, closed), fmt);
        return 0;
    }
    if (cmd_range->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        StabilityBound brute = instability_codim_bruteforce(rs, genus);
        long long db = dim_bun(rs, genus);
        emit(range_json(rs, brute, db), range_text(rs, brute, db), range_latex(rs, brute, db),
             fmt);
        return 0;
    }
    if (cmd_poinc->parsed() || cmd_epoly->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        InvariantDegrees deg = fundamental_degrees(rs);
        CLI::App* active = cmd_poinc->parsed() ? cmd_poinc : cmd_epoly;
        if (active->count("--max-degree") && max_degree < 0)
            throw validation_error("max_degree: must be >= 0");
        if (!active->count("--trunc")) trunc = max_degree >= 0 ? 2 * max_degree + 1 : 20;
        TruncatedSeries s(trunc);
        std::string kind;
        if (cmd_epoly->parsed()) {
            IsogenyDatum iso = parse_isogeny(rs, isogeny);
            s = e_polynomial_bun(deg, iso, genus, trunc);
            kind = "epoly";
            space = "bun";
        } else if (space == "bun") {
            if (genus < 0) throw validation_error("genus: required for the bundle stack");
            IsogenyDatum iso = parse_isogeny(rs, isogeny);
            s = poincare_bun(deg, iso, genus, trunc);
            kind = "poincare";
        } else if (space == "bg") {
            s = poincare_BG(deg, trunc);
            kind = "poincare";
        } else if (space == "g") {
            s = poincare_G(deg, trunc);
            kind = "poincare";
        } else if (space == "loopg") {
            s = poincare_loopG(deg, trunc);
            kind = "poincare";
        } else if (space == "bt") {
            s = poincare_BT(rs.rank, trunc);
            kind = "poincare";
        } else {
            throw validation_error("space: expected bun, bg, g, loopg or bt, got '" + space + "'");
        }
        json meta = series_meta(&rs, genus, space == "bun" ? isogeny : "", space);
        std::string txt = kind == "epoly" ? series_text_by_degree(s) : series_text(s) + "\n";
        emit(series_json(s, kind, meta), txt, series_latex(s), fmt);
        return 0;
    }
    if (cmd_motive->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        InvariantDegrees deg = fundamental_degrees(rs);
        IsogenyDatum iso = parse_isogeny(rs, isogeny);
        if (!cmd_motive->count("--max-degree")) max_degree = 12;
        MotiveClass mc = bun_motive(deg, iso, genus, max_degree);
        emit(motive_json(mc, rs.label(), isogeny_name(iso.kind)), motive_text(mc),
             motive_latex(mc), fmt);
        return 0;
    }
    if (cmd_coarse->parsed()) {
        auto [f, n] = parse_group_spec(group);
        RootSystem rs = build_root_system(f, n);
        InvariantDegrees deg = fundamental_degrees(rs);
        IsogenyDatum iso = parse_isogeny(rs, isogeny);
        if (cmd_coarse->count("--max-degree") && max_degree < 0)
            throw validation_error("max_degree: must be >= 0");
        CoarseMotive cm = coarse_motive(deg, iso, genus, rs, max_degree);
        emit(coarse_json(cm, rs.label(), isogeny_name(iso.kind)), coarse_text(cm),
             coarse_latex(cm), fmt);
        return 0;
    }
    if (cmd_wcx->parsed()) {
        json input_json;
        if (!curve.empty()) {
            if (!input.empty()) throw validation_error("input: give either --input or --curve");
            auto comma = curve.find(',');
            if (comma == std::string::npos)
                throw validation_error("curve: expected genus,points, got '" + curve + "'");
            int g = std::stoi(curve.substr(0, comma));
            int k = std::stoi(curve.substr(comma + 1));
            input_json = log_pair_to_json(curve_minus_points(g, k));
        } else if (!input.empty()) {
            std::ifstream in(input);
            if (!in) throw validation_error("input: cannot open '" + input + "'");
            try {
                input_json = json::parse(in);
            } catch (const std::exception& e) {
                throw validation_error("input: malformed JSON in '" + input + "': " + e.what());
            }
        } else {
            throw validation_error("input: one of --input or --curve is required");
        }
        if (emit_datum) {
            std::cout << input_json.dump(2) << "\n";
            return 0;
        }
        if (constant_levels >= 0 && json_is_simplicial(input_json))
            throw validation_error("constant_levels: the input is already simplicial");
        if (constant_levels >= 0 && !json_is_simplicial(input_json)) {
            SimplicialLogDatum s =
                constant_simplicial(log_pair_from_json(input_json), constant_levels);
            GrWTable table = gr_w_cohomology(s);
            emit(weightcx_json(table, nullptr), weightcx_text(table, nullptr),
                 weightcx_latex(table), fmt);
            return 0;
        }
        if (json_is_simplicial(input_json)) {
            GrWTable table = gr_w_cohomology(simplicial_from_json(input_json));
            emit(weightcx_json(table, nullptr), weightcx_text(table, nullptr),
                 weightcx_latex(table), fmt);
            return 0;
        }
        LogPairDatum datum = log_pair_from_json(input_json);
        TwistedComplex cx = build_pair_complex(datum);
        std::vector<CohomologyEntry> cohom = cohomology(cx);
        GrWTable table = gr_w_cohomology(datum);
        emit(weightcx_json(table, &cohom), weightcx_text(table, &cohom), weightcx_latex(table),
             fmt);
        return 0;
    }
    if (cmd_audit->parsed()) {
        std::vector<Family> fams;
        for (char c : families) fams.push_back(family_from_letter(c));
        auto [rlo, rhi] = parse_range(ranks, "ranks");
        auto [glo, ghi] = parse_range(genus_range, "genus");
        AuditReport report = audit_table(fams, rlo, rhi, glo, ghi);
        emit(audit_json(report), audit_text(report), render_latex_table(report), fmt);
        return 0;
    }
    throw validation_error("subcommand: none selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
