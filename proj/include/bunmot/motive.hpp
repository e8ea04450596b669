#pragma once

#include <bunmot/parabolic.hpp>
#include <bunmot/series.hpp>

#include <set>
#include <vector>

namespace bunmot {

/// One summand of a cohomological degree: a tensor product of exterior
/// powers of V = h^1 of the curve (the sorted word lists the powers), a
/// Tate twist L^b, and a multiplicity. Its weight is sum(word) + 2b.
struct MotiveTerm {
    std::vector<int> word;  // sorted, entries >= 1 and <= 2g
    int twist = 0;          // b >= 0
    Int mult = 1;

    int weight() const;
    bool operator==(const MotiveTerm&) const = default;
};

struct MotiveClass {
    int genus = 0;
    InvariantDegrees degrees;
    int max_degree = 0;
    Int pi1_order = 1;
    // degree -> terms, canonically ordered by (word, twist), merged.
    std::map<int, std::vector<MotiveTerm>> per_degree;
};

/// Expansion of the product of three graded factors:
///  - polynomial generators of degree 2n_i carrying twist n_i per power,
///  - for each i an exterior factor contributing, for k in 0..2g, degree
///    k(2n_i - 1), word entry k, twist k(n_i - 1)   (Lambda^k V for k > 2g
///    vanishes and is dropped),
///  - polynomial generators of degree 2n_i - 2 carrying twist n_i - 1,
/// all scaled by pi1_order. Every term satisfies weight = degree.
MotiveClass bun_motive(const InvariantDegrees& degrees, const IsogenyDatum& isogeny, int genus,
                       int max_degree);

// dim Lambda^k V = C(2g, k); twists have dimension 1.
TruncatedSeries realize_dim(const MotiveClass& mc);
// E(Lambda^k V) = sum_j C(g,j) C(g,k-j) x^j y^{k-j}; E(L) = xy.
TruncatedSeries realize_E(const MotiveClass& mc);

/// bun_motive cut to the range where the stack computes the coarse space:
/// degrees below stable_range = 2d (d from the brute-force instability
/// bound) are listed; degrees in [stable_range, requested_max] carry no
/// claim and are only named.
struct CoarseMotive {
    MotiveClass cls;
    long long d = 0;
    long long stable_range = 0;  // 2d, exclusive upper bound of validity
    int witness = 0;
    std::vector<int> witnesses;
    int requested_max = 0;
    std::vector<int> no_claim_degrees;  // degrees in [stable_range, requested_max]
};

// requested_max < 0 means "up to stable_range", which makes the first
// no-claim degree visible.
CoarseMotive coarse_motive(const InvariantDegrees& degrees, const IsogenyDatum& isogeny, int genus,
                           const RootSystem& rs, int requested_max = -1);

struct TannakianFootprint {
    std::set<std::vector<int>> words;
    std::set<int> twists;
    // Entries violating the expected shape (word entry above 2g, or a
    // negative twist); empty on every class this library constructs.
    std::vector<std::string> violations;
};

TannakianFootprint tannakian_footprint(const MotiveClass& mc);

}  // namespace bunmot
