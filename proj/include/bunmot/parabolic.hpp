#pragma once

#include <bunmot/rootsys.hpp>

#include <vector>

namespace bunmot {

/// A subset I of the simple roots together with the split of the positive
/// roots it induces: levi_positive holds the indices (into
/// rs.positive_roots) of roots lying in the integer span of {alpha_i : i in
/// I}, lambda the complementary indices. |lambda| is the dimension of the
/// unipotent radical of the associated parabolic subgroup.
struct ParabolicSubset {
    std::vector<int> I;              // sorted, 1-based simple-root indices
    std::vector<int> levi_positive;  // indices into positive_roots
    std::vector<int> lambda;         // complementary indices
};

// Indices must lie in 1..rank; duplicates are merged.
ParabolicSubset parabolic_subset(const RootSystem& rs, std::vector<int> I);

long long unipotent_radical_dim(const RootSystem& rs, const std::vector<int>& I);

/// Value of the printed per-family unipotent-radical polynomial at
/// (rank n, removed simple root m), evaluated in exact arithmetic. The
/// division by 2 is checked: `integral` is false (and `as_integer`
/// meaningless) if the printed formula fails to produce an integer, which
/// is reported as a table anomaly rather than an internal error.
struct RadicalPolyValue {
    Rat value;
    bool integral;
    long long as_integer;
};

// Families with a printed polynomial: B, C, D. A has no displayed
// polynomial and is handled by direct count (m(n+1-m)).
RadicalPolyValue printed_radical_polynomial(Family family, int n, int m);

enum class BoundSource { brute_force, closed_form };

struct StabilityBound {
    long long d = 0;           // codimension bound
    int genus = 0;
    long long stable_range = 0;  // 2d
    int witness = 0;             // smallest removed index achieving the minimum
    std::vector<int> witnesses;  // all of them, ascending (empty for closed form)
    BoundSource source = BoundSource::brute_force;
};

// min over I = Delta \ {alpha_m} of |Lambda_I| * (g-1). Requires g >= 2.
StabilityBound instability_codim_bruteforce(const RootSystem& rs, int genus);

// Tabulated closed forms: A_n -> n(g-1); B_n, C_n, D_n -> 2(n-1)(g-1).
// Never a substitute for the brute-force value; the two are compared by
// audit_table.
StabilityBound closed_form_d(Family family, int rank, int genus);

long long dim_bun(const RootSystem& rs, int genus);

struct AuditCell {
    Family family;
    int rank = 0;
    int genus = 0;
    long long closed_form = 0;
    long long brute_force = 0;
    bool agree = false;
    int witness = 0;
    std::vector<int> witnesses;
};

struct AuditReport {
    std::vector<AuditCell> cells;  // family, then rank, then genus
    long long disagreements = 0;
};

// Ranks are clamped per family to the validity minimum (A:1, B:2, C:2, D:3);
// families whose clamped range is empty contribute no cells.
AuditReport audit_table(const std::vector<Family>& families, int rank_lo, int rank_hi,
                        int genus_lo, int genus_hi);

}  // namespace bunmot
