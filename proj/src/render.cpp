#include <bunmot/render.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

namespace bunmot {

json int_str(const Int& v) { return v.str(); }

namespace {

json vec_json(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

std::string vec_text(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

json payload(const std::string& kind) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    return j;
}

json bound_json(const StabilityBound& b) {
    json j;
    j["d"] = b.d;
    j["genus"] = b.genus;
    j["stable_range"] = b.stable_range;
    j["source"] = b.source == BoundSource::brute_force ? "brute_force" : "closed_form";
    if (b.source == BoundSource::brute_force) {
        j["witness"] = b.witness;
        j["witnesses"] = b.witnesses;
    }
    return j;
}

// c(n) = a*n + b rendered the way the printed table writes it, e.g.
// (1,0) -> "n", (2,-2) -> "2(n-1)", (2,-1) -> "(2n-1)".
std::string affine_in_n(long long a, long long b) {
    std::ostringstream os;
    if (b == 0) {
        if (a == 1)
            os << "n";
        else
            os << a << "n";
    } else if (b % a == 0) {
        long long shift = -b / a;
        if (a != 1) os << a;
        os << "(n" << (shift >= 0 ? "-" : "+") << std::llabs(shift) << ")";
    } else {
        os << "(";
        if (a != 1) os << a;
        os << "n" << (b > 0 ? "+" : "-") << std::llabs(b) << ")";
    }
    return os.str();
}

std::string monomial_text(const TermKey& k, bool latex) {
    std::ostringstream os;
    auto power = [&](const char* var, int e) {
        if (e == 0) return;
        os << var;
        if (e != 1) {
            if (latex)
                os << "^{" << e << "}";
            else
                os << "^" << e;
        }
    };
    power("x", k.x);
    power("y", k.y);
    power("t", k.t);
    return os.str();
}

std::string polynomial_string(const std::map<TermKey, Int>& term_map, bool latex) {
    if (term_map.empty()) return "0";
    // Display order: ascending t, then descending x (the usual layout of
    // Hodge polynomials).
    std::vector<std::pair<TermKey, Int>> terms(term_map.begin(), term_map.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.t != b.first.t) return a.first.t < b.first.t;
        if (a.first.x != b.first.x) return a.first.x > b.first.x;
        return a.first.y < b.first.y;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono = monomial_text(k, latex);
        if (mono.empty())
            os << a.str();
        else if (a == 1)
            os << mono;
        else
            os << a.str() << mono;
    }
    return os.str();
}

std::string term_symbol(const MotiveTerm& t, bool latex) {
    std::ostringstream os;
    if (t.mult != 1) os << t.mult.str() << (latex ? "\\," : "*");
    if (t.word.empty()) {
        os << (latex ? "\\mathbf{Q}" : "Q");
    } else {
        bool first = true;
        for (int k : t.word) {
            if (!first) os << (latex ? "\\otimes" : " (x) ");
            first = false;
            if (latex)
                os << "\\Lambda^{" << k << "}h^{1}(C)";
            else
                os << "Lambda^" << k << " h^1(C)";
        }
    }
    if (t.twist != 0) os << "(-" << t.twist << ")";
    return os.str();
}

std::string motive_lines(const MotiveClass& mc, bool latex, int up_to) {
    std::ostringstream os;
    for (int i = 0; i <= up_to; ++i) {
        auto it = mc.per_degree.find(i);
        os << (latex ? "h^{" : "h^") << i << (latex ? "} &= " : " = ");
        if (it == mc.per_degree.end() || it->second.empty()) {
            os << "0";
        } else {
            bool first = true;
            for (const MotiveTerm& t : it->second) {
                if (!first) os << (latex ? " \\oplus " : " + ");
                first = false;
                os << term_symbol(t, latex);
            }
        }
        os << (latex ? " \\\\\n" : "\n");
    }
    return os.str();
}

}  // namespace

json roots_json(const RootSystem& rs) {
    json j = payload("roots");
    j["group"] = rs.label();
    j["family"] = std::string(1, family_letter(rs.family));
    j["rank"] = rs.rank;
    j["ambient_dim"] = rs.ambient_dim;
    j["simple_roots"] = json::array();
    for (const Vec& v : rs.simple_roots) j["simple_roots"].push_back(vec_json(v));
    j["positive_roots"] = json::array();
    for (const Vec& v : rs.positive_roots) j["positive_roots"].push_back(vec_json(v));
    j["num_roots"] = rs.all_roots.size();
    auto cm = cartan_matrix(rs);
    json m = json::array();
    for (const auto& row : cm) {
        json r = json::array();
        for (const Int& v : row) r.push_back(static_cast<long long>(v));
        m.push_back(r);
    }
    j["cartan_matrix"] = m;
    j["cartan_determinant"] = static_cast<long long>(cartan_determinant(rs));
    j["dim_group"] = dim_group(rs);
    return j;
}

std::string roots_text(const RootSystem& rs) {
    std::ostringstream os;
    os << rs.label() << ": rank " << rs.rank << ", ambient dimension " << rs.ambient_dim << ", "
       << rs.positive_roots.size() << " positive roots, dim G = " << dim_group(rs) << "\n";
    os << "simple roots:\n";
    for (int i = 0; i < rs.rank; ++i)
        os << "  alpha_" << i + 1 << " = " << vec_text(rs.simple_roots[i]) << "\n";
    os << "positive roots (by height):\n";
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r)
        os << "  " << vec_text(rs.positive_roots[r]) << "  height "
           << rs.height(static_cast<int>(r)) << "\n";
    os << "Cartan matrix:\n";
    for (const auto& row : cartan_matrix(rs)) {
        os << " ";
        for (const Int& v : row) os << " " << v.str();
        os << "\n";
    }
    os << "det(Cartan) = " << cartan_determinant(rs).str() << "\n";
    return os.str();
}

std::string roots_latex(const RootSystem& rs) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|}\\hline\n";
    os << "$i$ & $\\alpha_i$ \\\\ \\hline\n";
    for (int i = 0; i < rs.rank; ++i) {
        os << i + 1 << " & (";
        for (int c = 0; c < rs.ambient_dim; ++c) {
            if (c) os << ",";
            os << rat_str(rs.simple_roots[i][c]);
        }
        os << ") \\\\ \\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

json degrees_json(const RootSystem& rs, const InvariantDegrees& deg) {
    json j = payload("degrees");
    j["group"] = rs.label();
    j["degrees"] = deg.degrees;
    json spans = json::object();
    for (auto [d, mult] : deg.graded_span_dims) spans[std::to_string(d)] = mult;
    j["graded_span_dims"] = spans;
    j["weyl_order"] = int_str(weyl_group_order(rs));
    j["dim_group"] = dim_group(rs);
    return j;
}

std::string degrees_text(const RootSystem& rs, const InvariantDegrees& deg) {
    std::ostringstream os;
    os << rs.label() << " fundamental degrees:";
    for (int n : deg.degrees) os << " " << n;
    os << "\n|W| = " << weyl_group_order(rs).str() << ", dim G = " << dim_group(rs) << "\n";
    return os.str();
}

std::string degrees_latex(const RootSystem& rs, const InvariantDegrees& deg) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|c|}\\hline\n";
    os << "$G$ & $n_1,\\ldots,n_r$ & $|W|$ \\\\ \\hline\n";
    os << "$" << family_letter(rs.family) << "_{" << rs.rank << "}$ & $";
    for (std::size_t i = 0; i < deg.degrees.size(); ++i) {
        if (i) os << ",";
        os << deg.degrees[i];
    }
    os << "$ & $" << weyl_group_order(rs).str() << "$ \\\\ \\hline\n\\end{tabular}\n";
    return os.str();
}

json parabolics_json(const RootSystem& rs) {
    json j = payload("parabolics");
    j["group"] = rs.label();
    j["positive_roots"] = rs.positive_roots.size();
    json list = json::array();
    for (int m = 1; m <= rs.rank; ++m) {
        std::vector<int> I;
        for (int i = 1; i <= rs.rank; ++i)
            if (i != m) I.push_back(i);
        ParabolicSubset p = parabolic_subset(rs, I);
        json e;
        e["removed"] = m;
        e["levi_positive_roots"] = p.levi_positive.size();
        e["unipotent_radical_dim"] = p.lambda.size();
        list.push_back(e);
    }
    j["maximal_parabolics"] = list;
    return j;
}

std::string parabolics_text(const RootSystem& rs) {
    std::ostringstream os;
    os << rs.label() << " maximal proper parabolic subsets (|R_+| = "
       << rs.positive_roots.size() << "):\n";
    for (int m = 1; m <= rs.rank; ++m) {
        std::vector<int> I;
        for (int i = 1; i <= rs.rank; ++i)
            if (i != m) I.push_back(i);
        ParabolicSubset p = parabolic_subset(rs, I);
        os << "  remove alpha_" << m << ": dim R_u = " << p.lambda.size() << " (Levi keeps "
           << p.levi_positive.size() << " positive roots)\n";
    }
    return os.str();
}

std::string parabolics_latex(const RootSystem& rs) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|}\\hline\n";
    os << "$m$ & $\\dim R_u(P_{\\Delta\\setminus\\{\\alpha_m\\}})$ \\\\ \\hline\n";
    for (int m = 1; m <= rs.rank; ++m) {
        std::vector<int> I;
        for (int i = 1; i <= rs.rank; ++i)
            if (i != m) I.push_back(i);
        os << m << " & " << unipotent_radical_dim(rs, I) << " \\\\ \\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

json dmin_json(const RootSystem& rs, const StabilityBound& brute, const StabilityBound& closed) {
    json j = payload("dmin");
    j["group"] = rs.label();
    j["genus"] = brute.genus;
    j["closed_form"] = closed.d;
    j["brute_force"] = brute.d;
    j["agree"] = closed.d == brute.d;
    j["witness"] = brute.witness;
    j["witnesses"] = brute.witnesses;
    j["stable_range"] = brute.stable_range;
    return j;
}

std::string dmin_text(const RootSystem& rs, const StabilityBound& brute,
                      const StabilityBound& closed) {
    std::ostringstream os;
    os << rs.label() << ", genus " << brute.genus << ": d (brute force) = " << brute.d
       << ", d (table) = " << closed.d << (brute.d == closed.d ? " -- agree" : " -- DISAGREE")
       << "\nwitness: remove alpha_" << brute.witness;
    if (brute.witnesses.size() > 1) {
        os << " (ties:";
        for (int w : brute.witnesses) os << " " << w;
        os << ")";
    }
    os << "\nstable range: degrees < " << brute.stable_range << "\n";
    return os.str();
}

std::string dmin_latex(const RootSystem& rs, const StabilityBound& brute,
                       const StabilityBound& closed) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|c|}\\hline\n";
    os << "$G$ & $d_G$ (table) & $d_G$ (brute force) \\\\ \\hline\n";
    os << "$" << family_letter(rs.family) << "_{" << rs.rank << "}$ & $" << closed.d
       << "$ & $" << brute.d << "$ \\\\ \\hline\n\\end{tabular}\n";
    return os.str();
}

json range_json(const RootSystem& rs, const StabilityBound& brute, long long dim_stack) {
    json j = payload("range");
    j["group"] = rs.label();
    j["genus"] = brute.genus;
    j["bound"] = bound_json(brute);
    j["comparison_range"] = brute.stable_range;  // isomorphism in degrees < 2d
    j["dim_bun"] = dim_stack;
    return j;
}

std::string range_text(const RootSystem& rs, const StabilityBound& brute, long long dim_stack) {
    std::ostringstream os;
    os << rs.label() << ", genus " << brute.genus << ": d = " << brute.d
       << "; stack and coarse space agree in degrees < " << brute.stable_range
       << "; dim Bun = " << dim_stack << "\n";
    return os.str();
}

std::string range_latex(const RootSystem& rs, const StabilityBound& brute, long long dim_stack) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|c|c|}\\hline\n"
       << "$G$ & $d$ & range & $\\dim$ \\\\ \\hline\n"
       << "$" << family_letter(rs.family) << "_{" << rs.rank << "}$ & $" << brute.d
       << "$ & $i<" << brute.stable_range << "$ & $" << dim_stack
       << "$ \\\\ \\hline\n\\end{tabular}\n";
    return os.str();
}

json series_json(const TruncatedSeries& s, const std::string& kind, const json& meta) {
    json j = payload(kind);
    for (auto it = meta.begin(); it != meta.end(); ++it) j[it.key()] = it.value();
    j["trunc"] = s.trunc_order();
    json terms = json::array();
    for (const auto& [k, c] : s.terms()) {
        json t;
        t["t"] = k.t;
        t["x"] = k.x;
        t["y"] = k.y;
        t["coeff"] = int_str(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

std::string series_text(const TruncatedSeries& s) { return polynomial_string(s.terms(), false); }

std::string series_text_by_degree(const TruncatedSeries& s) {
    std::map<int, std::map<TermKey, Int>> by_t;
    for (const auto& [k, c] : s.terms()) by_t[k.t][TermKey{0, k.x, k.y}] = c;
    std::ostringstream os;
    for (const auto& [t, terms] : by_t)
        os << "t^" << t << ": " << polynomial_string(terms, false) << "\n";
    return os.str();
}

std::string series_latex(const TruncatedSeries& s) {
    return "$" + polynomial_string(s.terms(), true) + "$\n";
}

json motive_json(const MotiveClass& mc, const std::string& group, const std::string& isogeny) {
    json j = payload("motive");
    j["group"] = group;
    j["genus"] = mc.genus;
    j["isogeny"] = isogeny;
    j["pi1_order"] = int_str(mc.pi1_order);
    j["max_degree"] = mc.max_degree;
    json per = json::array();
    for (const auto& [deg, terms] : mc.per_degree) {
        json e;
        e["degree"] = deg;
        json ts = json::array();
        for (const MotiveTerm& t : terms) {
            json tj;
            tj["word"] = t.word;
            tj["twist"] = t.twist;
            tj["mult"] = int_str(t.mult);
            ts.push_back(tj);
        }
        e["terms"] = ts;
        per.push_back(e);
    }
    j["per_degree"] = per;
    return j;
}

std::string motive_text(const MotiveClass& mc) { return motive_lines(mc, false, mc.max_degree); }

std::string motive_latex(const MotiveClass& mc) {
    return "\\begin{align*}\n" + motive_lines(mc, true, mc.max_degree) + "\\end{align*}\n";
}

json coarse_json(const CoarseMotive& cm, const std::string& group, const std::string& isogeny) {
    json j = motive_json(cm.cls, group, isogeny);
    j["kind"] = "coarse";
    j["d"] = cm.d;
    j["valid_below"] = cm.stable_range;
    j["witness"] = cm.witness;
    j["witnesses"] = cm.witnesses;
    j["requested_max"] = cm.requested_max;
    j["no_claim_degrees"] = cm.no_claim_degrees;
    return j;
}

std::string coarse_text(const CoarseMotive& cm) {
    std::ostringstream os;
    os << "coarse-space motive valid in degrees < " << cm.stable_range << " (d = " << cm.d
       << ", witness alpha_" << cm.witness << ")\n";
    os << motive_lines(cm.cls, false, static_cast<int>(cm.stable_range) - 1);
    for (int i : cm.no_claim_degrees) os << "h^" << i << " : no claim\n";
    return os.str();
}

std::string coarse_latex(const CoarseMotive& cm) {
    std::ostringstream os;
    os << "% valid for i<" << cm.stable_range << "\n\\begin{align*}\n"
       << motive_lines(cm.cls, true, static_cast<int>(cm.stable_range) - 1) << "\\end{align*}\n";
    for (int i : cm.no_claim_degrees) os << "% h^{" << i << "}: no claim\n";
    return os.str();
}

json audit_json(const AuditReport& report) {
    json j = payload("audit");
    json cells = json::array();
    for (const AuditCell& c : report.cells) {
        json e;
        e["family"] = std::string(1, family_letter(c.family));
        e["rank"] = c.rank;
        e["genus"] = c.genus;
        e["closed_form"] = c.closed_form;
        e["brute_force"] = c.brute_force;
        e["agree"] = c.agree;
        e["witness"] = c.witness;
        e["witnesses"] = c.witnesses;
        cells.push_back(e);
    }
    j["cells"] = cells;
    j["disagreements"] = report.disagreements;
    return j;
}

std::string audit_text(const AuditReport& report) {
    std::ostringstream os;
    os << "family  rank  genus  table  brute  agree  witnesses\n";
    for (const AuditCell& c : report.cells) {
        os << std::setw(6) << family_letter(c.family) << std::setw(6) << c.rank << std::setw(7)
           << c.genus << std::setw(7) << c.closed_form << std::setw(7) << c.brute_force
           << std::setw(7) << (c.agree ? "yes" : "NO") << "  ";
        for (int w : c.witnesses) os << " " << w;
        os << "\n";
    }
    os << "disagreements: " << report.disagreements << "\n";
    return os.str();
}

namespace {

// Fit the audited cells of one family to c(n)*(g-1) with c affine in n.
std::optional<std::string> fit_family(const std::vector<const AuditCell*>& cells, bool closed) {
    std::map<int, long long> c_of_n;
    for (const AuditCell* cell : cells) {
        long long v = closed ? cell->closed_form : cell->brute_force;
        if (v % (cell->genus - 1) != 0) return std::nullopt;
        long long c = v / (cell->genus - 1);
        auto [it, fresh] = c_of_n.emplace(cell->rank, c);
        if (!fresh && it->second != c) return std::nullopt;
    }
    if (c_of_n.empty()) return std::nullopt;
    if (c_of_n.size() == 1)
        return std::optional<std::string>(std::to_string(c_of_n.begin()->second) + "(g-1)");
    auto it = c_of_n.begin();
    auto [n0, c0] = *it;
    ++it;
    auto [n1, c1] = *it;
    if ((c1 - c0) % (n1 - n0) != 0) return std::nullopt;
    long long a = (c1 - c0) / (n1 - n0);
    long long b = c0 - a * n0;
    if (a == 0) return std::optional<std::string>(std::to_string(b) + "(g-1)");
    for (auto [n, c] : c_of_n)
        if (c != a * n + b) return std::nullopt;
    return affine_in_n(a, b) + "(g-1)";
}

}  // namespace

std::string render_latex_table(const AuditReport& report) {
    if (report.cells.empty()) throw validation_error("audit: empty report");
    std::map<Family, std::vector<const AuditCell*>> by_family;
    for (const AuditCell& c : report.cells) by_family[c.family].push_back(&c);

    std::ostringstream os;
    os << "% audited cells: " << report.cells.size() << ", disagreements: "
       << report.disagreements << "\n";
    os << "\\begin{tabular}{|c|";
    for (std::size_t i = 0; i < by_family.size(); ++i) os << "|c";
    os << "|}\n\\hline\n$G$";
    for (const auto& [f, cells] : by_family) {
        os << " & $" << family_letter(f) << "_n";
        switch (f) {
            case Family::A: break;
            case Family::B:
            case Family::C: os << "\\ (n\\ge 2)"; break;
            case Family::D: os << "\\ (n\\ge 3)"; break;
        }
        os << "$";
    }
    os << " \\\\ \\hline\n$d_G$ (table)";
    for (const auto& [f, cells] : by_family) {
        auto fit = fit_family(cells, true);
        os << " & $" << (fit ? *fit : std::string("\\mathrm{irregular}")) << "$";
    }
    os << " \\\\ \\hline\n$d_G$ (brute force)";
    for (const auto& [f, cells] : by_family) {
        auto fit = fit_family(cells, false);
        os << " & $" << (fit ? *fit : std::string("\\mathrm{irregular}")) << "$";
    }
    os << " \\\\ \\hline\n\\end{tabular}\n";
    return os.str();
}

LogPairDatum log_pair_from_json(const json& j) {
    if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array())
        throw validation_error("levels: missing or not an array");
    LogPairDatum d;
    for (const auto& jl : j["levels"]) {
        if (!jl.is_object() || !jl.contains("strata") || !jl["strata"].is_array())
            throw validation_error("levels.strata: missing or not an array");
        std::vector<Stratum> level;
        for (const auto& js : jl["strata"]) {
            Stratum s;
            if (js.contains("name")) {
                if (!js["name"].is_string()) throw validation_error("strata.name: not a string");
                s.name = js["name"].get<std::string>();
            }
            if (!js.contains("betti") || !js["betti"].is_array())
                throw validation_error("strata.betti: missing or not an array");
            for (const auto& b : js["betti"]) {
                if (!b.is_number_integer() || b.get<long long>() < 0)
                    throw validation_error("strata.betti: entries must be integers >= 0");
                s.betti.push_back(b.get<int>());
            }
            level.push_back(std::move(s));
        }
        d.levels.push_back(std::move(level));
    }
    if (j.contains("incidences")) {
        if (!j["incidences"].is_array()) throw validation_error("incidences: not an array");
        for (const auto& ji : j["incidences"]) {
            Incidence inc;
            auto need_int = [&](const char* field) {
                if (!ji.contains(field) || !ji[field].is_number_integer())
                    throw validation_error(std::string("incidences.") + field +
                                           ": missing or not an integer");
                return ji[field].get<int>();
            };
            inc.from_level = need_int("from_level");
            inc.from_index = need_int("from");
            inc.to_index = need_int("to");
            inc.k = ji.contains("k") ? need_int("k") : 1;
            if (!ji.contains("gysin") || !ji["gysin"].is_object())
                throw validation_error("incidences.gysin: missing or not an object");
            for (auto it = ji["gysin"].begin(); it != ji["gysin"].end(); ++it) {
                int m;
                try {
                    m = std::stoi(it.key());
                } catch (...) {
                    throw validation_error("incidences.gysin: degree key '" + it.key() +
                                           "' is not an integer");
                }
                if (m < 0) throw validation_error("incidences.gysin: negative degree key");
                if (!it.value().is_array())
                    throw validation_error("incidences.gysin: matrix is not an array");
                RatMatrix mat;
                for (const auto& row : it.value()) {
                    if (!row.is_array())
                        throw validation_error("incidences.gysin: matrix row is not an array");
                    std::vector<Rat> r;
                    for (const auto& v : row) {
                        if (!v.is_string())
                            throw validation_error(
                                "incidences.gysin: entries must be rational strings \"p/q\"");
                        r.push_back(parse_rational(v.get<std::string>()));
                    }
                    mat.push_back(std::move(r));
                }
                inc.gysin[m] = std::move(mat);
            }
            d.incidences.push_back(std::move(inc));
        }
    }
    return d;
}

bool json_is_simplicial(const json& j) { return j.is_object() && j.contains("pairs"); }

SimplicialLogDatum simplicial_from_json(const json& j) {
    if (!json_is_simplicial(j) || !j["pairs"].is_array())
        throw validation_error("pairs: missing or not an array");
    SimplicialLogDatum s;
    for (const auto& jp : j["pairs"]) s.pairs.push_back(log_pair_from_json(jp));
    s.faces.resize(s.pairs.size());
    if (!j.contains("faces") || !j["faces"].is_array())
        throw validation_error("faces: missing or not an array");
    if (j["faces"].size() != s.pairs.size())
        throw validation_error("faces: need exactly one (possibly empty) list per pair");
    for (std::size_t p = 0; p < s.pairs.size(); ++p) {
        for (const auto& jf : j["faces"][p]) {
            FaceMap f;
            if (!jf.is_object() || !jf.contains("blocks") || !jf["blocks"].is_array())
                throw validation_error("faces.blocks: missing or not an array");
            for (const auto& jb : jf["blocks"]) {
                if (!jb.contains("level") || !jb["level"].is_number_integer() ||
                    !jb.contains("degree") || !jb["degree"].is_number_integer() ||
                    !jb.contains("matrix") || !jb["matrix"].is_array())
                    throw validation_error("faces.blocks: need integer level, integer degree, "
                                           "matrix");
                RatMatrix mat;
                for (const auto& row : jb["matrix"]) {
                    if (!row.is_array())
                        throw validation_error("faces.blocks.matrix: row is not an array");
                    std::vector<Rat> r;
                    for (const auto& v : row) {
                        if (!v.is_string())
                            throw validation_error(
                                "faces.blocks.matrix: entries must be rational strings");
                        r.push_back(parse_rational(v.get<std::string>()));
                    }
                    mat.push_back(std::move(r));
                }
                f.blocks[{jb["level"].get<int>(), jb["degree"].get<int>()}] = std::move(mat);
            }
            s.faces[p].push_back(std::move(f));
        }
    }
    return s;
}

json log_pair_to_json(const LogPairDatum& datum) {
    json j;
    j["levels"] = json::array();
    for (const auto& level : datum.levels) {
        json jl;
        jl["strata"] = json::array();
        for (const Stratum& s : level) {
            json js;
            js["name"] = s.name;
            js["betti"] = s.betti;
            jl["strata"].push_back(js);
        }
        j["levels"].push_back(jl);
    }
    j["incidences"] = json::array();
    for (const Incidence& inc : datum.incidences) {
        json ji;
        ji["from_level"] = inc.from_level;
        ji["from"] = inc.from_index;
        ji["to"] = inc.to_index;
        ji["k"] = inc.k;
        json g = json::object();
        for (const auto& [m, mat] : inc.gysin) {
            json rows = json::array();
            for (const auto& row : mat) {
                json r = json::array();
                for (const Rat& v : row) r.push_back(rat_str(v));
                rows.push_back(r);
            }
            g[std::to_string(m)] = rows;
        }
        ji["gysin"] = g;
        j["incidences"].push_back(ji);
    }
    return j;
}

json weightcx_json(const GrWTable& table, const std::vector<CohomologyEntry>* cohom) {
    json j = payload("weightcx");
    json grw = json::array();
    for (const GrWEntry& e : table.entries) {
        json g;
        g["degree"] = e.degree;
        g["weight"] = e.weight;
        g["dim"] = e.dim;
        grw.push_back(g);
    }
    j["gr_w"] = grw;
    if (cohom) {
        json cj = json::array();
        for (const CohomologyEntry& e : *cohom) {
            json c;
            c["position"] = e.position;
            c["degree"] = e.degree;
            c["twist"] = e.twist;
            c["dim"] = e.dim;
            cj.push_back(c);
        }
        j["complex_cohomology"] = cj;
    }
    j["euler"] = table.euler_output;
    return j;
}

std::string weightcx_text(const GrWTable& table, const std::vector<CohomologyEntry>* cohom) {
    std::ostringstream os;
    if (cohom) {
        os << "complex cohomology:\n  position  degree  twist    dim\n";
        for (const CohomologyEntry& e : *cohom)
            os << std::setw(10) << e.position << std::setw(8) << e.degree << std::setw(7)
               << e.twist << std::setw(7) << e.dim << "\n";
    }
    os << "Gr_W^j H^k(U):\n   k   j  dim\n";
    for (const GrWEntry& e : table.entries)
        os << std::setw(4) << e.degree << std::setw(4) << e.weight << std::setw(5) << e.dim
           << "\n";
    os << "euler = " << table.euler_output << "\n";
    return os.str();
}

std::string weightcx_latex(const GrWTable& table) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|c|c|}\\hline\n";
    os << "$k$ & $j$ & $\\dim \\mathrm{Gr}_W^j H^k$ \\\\ \\hline\n";
    for (const GrWEntry& e : table.entries)
        os << e.degree << " & " << e.weight << " & " << e.dim << " \\\\ \\hline\n";
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace bunmot
