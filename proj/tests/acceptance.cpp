// Acceptance suite: each criterion prints one PASS/FAIL line; the exit code
// is the number of failed criteria.

#include <bunmot/motive.hpp>
#include <bunmot/parabolic.hpp>
#include <bunmot/render.hpp>
#include <bunmot/series.hpp>
#include <bunmot/weightcx.hpp>

#include "oracles.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

using namespace bunmot;

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> failures;
    double seconds = 0;

    void check(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    template <typename A, typename B>
    void check_eq(const A& a, const B& b, const std::string& what) {
        if (!(a == b)) {
            std::ostringstream os;
            os << what << ": got " << a << ", expected " << b;
            failures.push_back(os.str());
        }
    }
};

std::vector<std::pair<Family, int>> implemented_types(int max_rank) {
    std::vector<std::pair<Family, int>> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    return out;
}

std::map<std::pair<Family, int>, InvariantDegrees> g_degrees;

const InvariantDegrees& degrees_of(Family f, int n) {
    auto it = g_degrees.find({f, n});
    if (it == g_degrees.end())
        it = g_degrees.emplace(std::make_pair(f, n),
                               fundamental_degrees(build_root_system(f, n))).first;
    return it->second;
}

IsogenyDatum sc_of(Family f, int n) {
    return fundamental_group_order(build_root_system(f, n), IsogenyKind::simply_connected);
}

std::string cell_name(Family f, int n, int g) {
    std::ostringstream os;
    os << family_letter(f) << n << " g=" << g;
    return os.str();
}

void criterion_1_table_audit(Criterion& c) {
    AuditReport report = audit_table({Family::A, Family::B, Family::C, Family::D}, 1, 8, 2, 6);
    long long expected_disagreements = 0;
    for (const AuditCell& cell : report.cells) {
        const std::string name = cell_name(cell.family, cell.rank, cell.genus);
        c.check(!cell.witnesses.empty(), name + ": missing witness");
        switch (cell.family) {
            case Family::A:
                c.check_eq(cell.brute_force, 1LL * cell.rank * (cell.genus - 1),
                           name + " brute force");
                c.check(cell.agree, name + ": expected agreement with n(g-1)");
                break;
            case Family::B:
            case Family::C:
                // brute force exceeds the printed table by exactly (g-1)
                c.check_eq(cell.brute_force - cell.closed_form, 1LL * (cell.genus - 1),
                           name + " brute force minus table");
                c.check(!cell.agree, name + ": expected a discrepancy record");
                ++expected_disagreements;
                break;
            case Family::D:
                if (cell.rank == 3) {
                    c.check_eq(cell.brute_force, 3LL * (cell.genus - 1),
                               name + " brute force (A3 value)");
                    c.check(!cell.agree, name + ": expected a discrepancy record");
                    ++expected_disagreements;
                } else {
                    c.check_eq(cell.brute_force, 2LL * (cell.rank - 1) * (cell.genus - 1),
                               name + " brute force");
                    c.check(cell.agree, name + ": expected agreement with 2(n-1)(g-1)");
                }
                break;
        }
    }
    c.check_eq(report.disagreements, expected_disagreements, "disagreement count");

    // D3 brute force equals the A3 brute force cell by cell.
    for (int g = 2; g <= 6; ++g) {
        long long d3 = instability_codim_bruteforce(build_root_system(Family::D, 3), g).d;
        long long a3 = instability_codim_bruteforce(build_root_system(Family::A, 3), g).d;
        c.check_eq(d3, a3, "D3 vs A3 at g=" + std::to_string(g));
    }

    // Determinism of the report.
    AuditReport again = audit_table({Family::A, Family::B, Family::C, Family::D}, 1, 8, 2, 6);
    c.check(audit_json(report) == audit_json(again), "audit report not deterministic");
}

void criterion_2_degree_identities(Criterion& c) {
    for (auto [f, n] : implemented_types(8)) {
        RootSystem rs = build_root_system(f, n);
        InvariantDegrees deg = degrees_of(f, n);
        Int prod = 1;
        long long sum = 0;
        for (int d : deg.degrees) {
            prod *= d;
            sum += 2 * d - 1;
        }
        Int w = weyl_group_order(rs);
        c.check_eq(prod.str(), w.str(), rs.label() + ": prod n_i vs |W|");
        c.check_eq(sum, dim_group(rs), rs.label() + ": sum (2n_i - 1) vs dim G");
    }
}

void criterion_3_radical_polynomials(Criterion& c) {
    for (Family f : {Family::B, Family::C})
        for (int n = 2; n <= 8; ++n) {
            RootSystem rs = build_root_system(f, n);
            for (int m = 1; m <= n; ++m) {
                RadicalPolyValue v = printed_radical_polynomial(f, n, m);
                c.check(v.integral, cell_name(f, n, 0) + ": non-integral polynomial value");
                std::vector<int> I;
                for (int i = 1; i <= n; ++i)
                    if (i != m) I.push_back(i);
                c.check_eq(v.as_integer, unipotent_radical_dim(rs, I),
                           std::string(1, family_letter(f)) + std::to_string(n) + " m=" +
                               std::to_string(m) + ": polynomial vs enumeration");
            }
        }

    // D: evaluate and report agreement per (n, m); at least one disagreement
    // witness must be recorded if any disagreement exists.
    struct DRecord {
        int n, m;
        long long poly, enumerated;
        bool agree;
    };
    std::vector<DRecord> records;
    for (int n = 3; n <= 8; ++n) {
        RootSystem rs = build_root_system(Family::D, n);
        for (int m = 1; m <= n; ++m) {
            RadicalPolyValue v = printed_radical_polynomial(Family::D, n, m);
            c.check(v.integral, "D" + std::to_string(n) + " m=" + std::to_string(m) +
                                    ": non-integral polynomial value");
            std::vector<int> I;
            for (int i = 1; i <= n; ++i)
                if (i != m) I.push_back(i);
            long long e = unipotent_radical_dim(rs, I);
            records.push_back({n, m, v.as_integer, e, v.as_integer == e});
        }
    }
    bool any_disagree = false;
    const DRecord* first_witness = nullptr;
    for (const DRecord& r : records)
        if (!r.agree) {
            any_disagree = true;
            if (!first_witness) first_witness = &r;
        }
    c.check(!any_disagree || first_witness != nullptr, "D: disagreement without witness");
    if (first_witness) {
        std::cout << "       D polynomial disagreement witness: (n,m)=(" << first_witness->n
                  << "," << first_witness->m << ") polynomial " << first_witness->poly
                  << " vs enumeration " << first_witness->enumerated << "\n";
    }
    // The (4,1) record in particular: printed value 3, enumeration 6.
    for (const DRecord& r : records)
        if (r.n == 4 && r.m == 1) {
            c.check_eq(r.poly, 3LL, "D4 m=1 polynomial value");
            c.check_eq(r.enumerated, 6LL, "D4 m=1 enumeration");
            c.check(!r.agree, "D4 m=1 must be recorded as a disagreement");
        }
}

void criterion_4_poincare(Criterion& c) {
    const int T = 20;
    TruncatedSeries s = poincare_bun(degrees_of(Family::A, 1), sc_of(Family::A, 1), 2, T);
    std::vector<long long> through6 = {1, 0, 1, 4, 2, 4, 8};
    for (int t = 0; t <= 6; ++t)
        c.check_eq(s.coeff(t).str(), std::to_string(through6[t]),
                   "A1 g=2 coefficient of t^" + std::to_string(t));

    // Independent oracle expansion of (1+t^3)^4 / ((1-t^4)(1-t^2)) to t^20.
    oracle::DensePoly num(T);
    num.c[0] = 1;
    num.c[3] = 1;
    oracle::DensePoly expect =
        num.pow(4).mul(oracle::DensePoly::geometric(T, 4)).mul(oracle::DensePoly::geometric(T, 2));
    for (int t = 0; t <= T; ++t)
        c.check_eq(s.coeff(t).str(), expect.c[t].str(),
                   "A1 g=2 oracle coefficient of t^" + std::to_string(t));

    for (auto [f, n] : implemented_types(8)) {
        TruncatedSeries p = poincare_bun(degrees_of(f, n), sc_of(f, n), 2, T);
        c.check_eq(p.coeff(2).str(), std::string("1"),
                   std::string(1, family_letter(f)) + std::to_string(n) +
                       ": coefficient of t^2");
    }

    for (auto [f, n] :
         {std::pair{Family::A, 1}, {Family::A, 3}, {Family::B, 3}, {Family::C, 4},
          {Family::D, 4}}) {
        RootSystem rs = build_root_system(f, n);
        Int det = cartan_determinant(rs);
        TruncatedSeries plain = poincare_bun(degrees_of(f, n), sc_of(f, n), 2, T);
        TruncatedSeries adj =
            poincare_bun(degrees_of(f, n), fundamental_group_order(rs, IsogenyKind::adjoint), 2, T);
        TruncatedSeries scaled = plain;
        scaled *= det;
        c.check(adj == scaled, rs.label() + ": adjoint series is not det(Cartan) times sc");
    }
}

std::vector<std::pair<Family, int>> rank_le_3_grid() {
    return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
            {Family::B, 3}, {Family::C, 2}, {Family::C, 3}, {Family::D, 3}};
}

void criterion_5_motive_vs_series(Criterion& c) {
    for (auto [f, n] : rank_le_3_grid())
        for (int g : {2, 3}) {
            MotiveClass mc = bun_motive(degrees_of(f, n), sc_of(f, n), g, 12);
            TruncatedSeries via_motive = realize_dim(mc);
            TruncatedSeries via_series = poincare_bun(degrees_of(f, n), sc_of(f, n), g, 12);
            c.check(via_motive == via_series,
                    cell_name(f, n, g) + ": realize_dim(bun_motive) != poincare_bun");
        }
}

void criterion_6_purity(Criterion& c) {
    for (auto [f, n] : rank_le_3_grid())
        for (int g : {2, 3}) {
            auto v1 = purity_check(e_polynomial_bun(degrees_of(f, n), sc_of(f, n), g, 12));
            c.check(!v1.has_value(), cell_name(f, n, g) + ": e_polynomial_bun not pure");
            MotiveClass mc = bun_motive(degrees_of(f, n), sc_of(f, n), g, 12);
            auto v2 = purity_check(realize_E(mc));
            c.check(!v2.has_value(), cell_name(f, n, g) + ": realize_E not pure");
        }
}

void criterion_7_weight_complex(Criterion& c) {
    for (int g = 0; g <= 3; ++g)
        for (int k = 0; k <= 4; ++k) {
            LogPairDatum datum = curve_minus_points(g, k);
            build_pair_complex(datum);  // verifies d.d = 0
            GrWTable t = gr_w_cohomology(datum);
            const std::string name = "curve g=" + std::to_string(g) + " k=" + std::to_string(k);
            c.check_eq(t.dim(0, 0), 1, name + ": Gr_W^0 H^0");
            c.check_eq(t.dim(1, 1), 2 * g, name + ": Gr_W^1 H^1");
            c.check_eq(t.dim(1, 2), std::max(k - 1, 0), name + ": Gr_W^2 H^1");
            for (const GrWEntry& e : t.entries) {
                bool listed = (e.degree == 0 && e.weight == 0) ||
                              (e.degree == 1 && (e.weight == 1 || e.weight == 2));
                // With no punctures the curve is compact and H^2 survives,
                // pure of weight 2; everything else must vanish.
                if (k == 0 && e.degree == 2 && e.weight == 2) {
                    c.check_eq(e.dim, 1, name + ": Gr_W^2 H^2 of the compact curve");
                    continue;
                }
                c.check(listed, name + ": unexpected nonzero Gr_W^" + std::to_string(e.weight) +
                                    " H^" + std::to_string(e.degree));
            }
            c.check_eq(t.euler_output, 2LL - 2 * g - k, name + ": Euler characteristic");
            c.check_eq(t.euler_input, t.euler_output, name + ": Euler conservation");
        }
}

void criterion_8_comparison_range(Criterion& c) {
    RootSystem a1 = build_root_system(Family::A, 1);
    CoarseMotive cm = coarse_motive(degrees_of(Family::A, 1), sc_of(Family::A, 1), 2, a1);
    c.check_eq(cm.stable_range, 2LL, "A1 g=2 comparison range");
    c.check(cm.cls.per_degree.count(0) == 1 &&
                cm.cls.per_degree.at(0) == std::vector<MotiveTerm>{MotiveTerm{{}, 0, 1}},
            "A1 g=2: h^0 is not the unit");
    c.check(cm.cls.per_degree.count(1) == 0, "A1 g=2: h^1 should vanish");
    c.check(cm.no_claim_degrees == std::vector<int>{2}, "A1 g=2: degree 2 must carry no claim");
    for (const auto& [deg, terms] : cm.cls.per_degree)
        c.check(deg < 2, "A1 g=2: claimed degree " + std::to_string(deg) + " beyond the range");

    RootSystem a4 = build_root_system(Family::A, 4);
    CoarseMotive cm4 = coarse_motive(degrees_of(Family::A, 4), sc_of(Family::A, 4), 3, a4, 0);
    c.check_eq(cm4.stable_range, 16LL, "A4 g=3 comparison range");
}

}  // namespace

int main() {
    struct Entry {
        std::string name;
        void (*fn)(Criterion&);
        double budget_seconds;  // 0 = no stated budget
    };
    std::vector<Entry> entries = {
        {"1. table audit across A/B/C/D, ranks to 8, genus 2..6", criterion_1_table_audit, 60},
        {"2. degree identities (prod = |W| enumerated, sum = dim G)", criterion_2_degree_identities,
         30},
        {"3. printed radical polynomials vs enumeration", criterion_3_radical_polynomials, 0},
        {"4. Poincare series of the stack", criterion_4_poincare, 0},
        {"5. motive realization matches the series, rank <= 3", criterion_5_motive_vs_series, 0},
        {"6. purity of every Hodge monomial", criterion_6_purity, 0},
        {"7. weight complex of punctured curves", criterion_7_weight_complex, 5},
        {"8. coarse-space comparison range", criterion_8_comparison_range, 0},
    };

    int failed = 0;
    for (Entry& e : entries) {
        Criterion c;
        c.name = e.name;
        auto start = std::chrono::steady_clock::now();
        try {
            e.fn(c);
        } catch (const std::exception& ex) {
            c.failures.push_back(std::string("exception: ") + ex.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.budget_seconds > 0 && c.seconds > e.budget_seconds) {
            std::ostringstream os;
            os << "exceeded time budget: " << c.seconds << "s > " << e.budget_seconds << "s";
            c.failures.push_back(os.str());
        }
        bool ok = c.failures.empty();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << e.name << "  (" << c.seconds << "s)\n";
        for (const std::string& f : c.failures) std::cout << "       " << f << "\n";
        if (!ok) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : "criteria failed: " + std::to_string(failed))
              << "\n";
    return failed;
}
