#include <bunmot/parabolic.hpp>

#include <algorithm>
#include <set>
#include <string>

namespace bunmot {

ParabolicSubset parabolic_subset(const RootSystem& rs, std::vector<int> I) {
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    for (int i : I)
        if (i < 1 || i > rs.rank)
            throw validation_error("subset: index " + std::to_string(i) + " outside 1.." +
                                   std::to_string(rs.rank));
    std::vector<bool> in_I(rs.rank + 1, false);
    for (int i : I) in_I[i] = true;

    ParabolicSubset p;
    p.I = std::move(I);
    // A positive root lies in the span of {alpha_i : i in I} exactly when its
    // (unique) simple-root expansion is supported on I.
    for (std::size_t r = 0; r < rs.positive_roots.size(); ++r) {
        bool inside = true;
        for (int j = 0; j < rs.rank; ++j)
            if (rs.positive_coords[r][j] != 0 && !in_I[j + 1]) {
                inside = false;
                break;
            }
        (inside ? p.levi_positive : p.lambda).push_back(static_cast<int>(r));
    }
    return p;
}

long long unipotent_radical_dim(const RootSystem& rs, const std::vector<int>& I) {
    return static_cast<long long>(parabolic_subset(rs, I).lambda.size());
}

RadicalPolyValue printed_radical_polynomial(Family family, int n, int m) {
    if (n < 1) throw validation_error("rank: must be >= 1");
    if (m < 1 || m > n)
        throw validation_error("removed: index " + std::to_string(m) + " outside 1.." +
                               std::to_string(n));
    Rat nn = n, mm = m;
    Rat v;
    switch (family) {
        case Family::B:
            v = mm + mm * (nn - mm) + mm / 2 * (2 * nn - mm - 1);
            break;
        case Family::C:
            v = mm * (nn - mm) + mm / 2 * (2 * nn - mm - 1) + mm;
            break;
        case Family::D:
            v = (mm - 1) * (nn - mm) + mm + mm / 2 * (2 * nn - mm - 3);
            break;
        case Family::A:
            throw validation_error("family: A has no displayed radical polynomial; "
                                   "use the direct count");
    }
    RadicalPolyValue out;
    out.value = v;
    out.integral = is_integer(v);
    out.as_integer = out.integral ? static_cast<long long>(numerator(v)) : 0;
    return out;
}

StabilityBound instability_codim_bruteforce(const RootSystem& rs, int genus) {
    if (genus < 2) throw validation_error("genus: must be >= 2, got " + std::to_string(genus));
    long long best = -1;
    std::vector<int> witnesses;
    for (int m = 1; m <= rs.rank; ++m) {
        std::vector<int> I;
        for (int i = 1; i <= rs.rank; ++i)
            if (i != m) I.push_back(i);
        long long lam = unipotent_radical_dim(rs, I);
        if (best < 0 || lam < best) {
            best = lam;
            witnesses = {m};
        } else if (lam == best) {
            witnesses.push_back(m);
        }
    }
    StabilityBound b;
    b.d = best * (genus - 1);
    b.genus = genus;
    b.stable_range = 2 * b.d;
    b.witness = witnesses.front();
    b.witnesses = std::move(witnesses);
    b.source = BoundSource::brute_force;
    return b;
}

StabilityBound closed_form_d(Family family, int rank, int genus) {
    if (genus < 2) throw validation_error("genus: must be >= 2, got " + std::to_string(genus));
    long long v = 0;
    switch (family) {
        case Family::A:
            if (rank < 1) throw validation_error("rank: table requires A n>=1");
            v = static_cast<long long>(rank) * (genus - 1);
            break;
        case Family::B:
        case Family::C:
            if (rank < 2)
                throw validation_error(std::string("rank: table requires ") +
                                       family_letter(family) + " n>=2");
            v = 2LL * (rank - 1) * (genus - 1);
            break;
        case Family::D:
            if (rank < 3) throw validation_error("rank: table requires D n>=3");
            v = 2LL * (rank - 1) * (genus - 1);
            break;
    }
    StabilityBound b;
    b.d = v;
    b.genus = genus;
    b.stable_range = 2 * v;
    b.witness = 0;
    b.source = BoundSource::closed_form;
    return b;
}

long long dim_bun(const RootSystem& rs, int genus) {
    if (genus < 2) throw validation_error("genus: must be >= 2, got " + std::to_string(genus));
    return dim_group(rs) * (genus - 1);
}

AuditReport audit_table(const std::vector<Family>& families, int rank_lo, int rank_hi,
                        int genus_lo, int genus_hi) {
    if (genus_lo < 2) throw validation_error("genus: must be >= 2, got " + std::to_string(genus_lo));
    if (genus_hi < genus_lo) throw validation_error("genus: empty range");
    if (rank_hi < rank_lo) throw validation_error("rank: empty range");

    std::vector<Family> fams = families;
    std::sort(fams.begin(), fams.end());
    fams.erase(std::unique(fams.begin(), fams.end()), fams.end());

    AuditReport report;
    for (Family f : fams) {
        int lo = rank_lo;
        switch (f) {
            case Family::A: lo = std::max(lo, 1); break;
            case Family::B:
            case Family::C: lo = std::max(lo, 2); break;
            case Family::D: lo = std::max(lo, 3); break;
        }
        for (int n = lo; n <= rank_hi; ++n) {
            RootSystem rs = build_root_system(f, n);
            for (int g = genus_lo; g <= genus_hi; ++g) {
                StabilityBound brute = instability_codim_bruteforce(rs, g);
                StabilityBound closed = closed_form_d(f, n, g);
                AuditCell cell;
                cell.family = f;
                cell.rank = n;
                cell.genus = g;
                cell.closed_form = closed.d;
                cell.brute_force = brute.d;
                cell.agree = closed.d == brute.d;
                cell.witness = brute.witness;
                cell.witnesses = brute.witnesses;
                if (!cell.agree) ++report.disagreements;
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

}  // namespace bunmot
