#pragma once

#include <bunmot/rootsys.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace bunmot {

struct TermKey {
    int t = 0;  // cohomological degree
    int x = 0;  // Hodge degree p
    int y = 0;  // Hodge degree q
    auto operator<=>(const TermKey&) const = default;
};

/// Polynomial in t, x, y with exact integer coefficients, truncated in t:
/// no stored term has t-degree above trunc_order, and ring operations drop
/// anything beyond it. x and y are never truncated.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int trunc_order);

    static TruncatedSeries one(int trunc_order);
    static TruncatedSeries monomial(int trunc_order, int t, int x, int y, Int coeff);

    int trunc_order() const { return trunc_; }
    const std::map<TermKey, Int>& terms() const { return terms_; }
    Int coeff(int t, int x = 0, int y = 0) const;
    bool is_zero() const { return terms_.empty(); }
    // Smallest t-degree among nonzero terms; trunc_order()+1 when zero.
    int t_valuation() const;

    TruncatedSeries& add_term(int t, int x, int y, const Int& coeff);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator*=(const Int& scalar);

    TruncatedSeries pow(int e) const;

    // Inverse of (1 - u) for this = u, which must have positive t-valuation.
    TruncatedSeries geometric_inverse_of_one_minus() const;

    TruncatedSeries specialize_xy_to_one() const;
    bool is_univariate() const;

    bool operator==(const TruncatedSeries& other) const = default;

private:
    int trunc_;
    std::map<TermKey, Int> terms_;
};

// Sum_i C(rank + i - 1, i) t^{2i}.
TruncatedSeries poincare_BT(int rank, int trunc);
// prod_i 1 / (1 - t^{2 n_i}).
TruncatedSeries poincare_BG(const InvariantDegrees& degrees, int trunc);
// prod_i (1 + t^{2 n_i - 1}).
TruncatedSeries poincare_G(const InvariantDegrees& degrees, int trunc);
// prod_i 1 / (1 - t^{2 n_i - 2})  (one connected component).
TruncatedSeries poincare_loopG(const InvariantDegrees& degrees, int trunc);
// pi1 * prod_i (1 + t^{2n_i-1})^{2g} / ((1 - t^{2n_i})(1 - t^{2n_i-2})).
TruncatedSeries poincare_bun(const InvariantDegrees& degrees, const IsogenyDatum& isogeny,
                             int genus, int trunc);
// Hodge--Deligne refinement: even generators carry (xy)^{n_i} resp.
// (xy)^{n_i-1}; each odd generator splits into g copies of bidegree
// (n_i, n_i-1) and g of (n_i-1, n_i).
TruncatedSeries e_polynomial_bun(const InvariantDegrees& degrees, const IsogenyDatum& isogeny,
                                 int genus, int trunc);

struct PurityViolation {
    int t = 0, x = 0, y = 0;
};

// Engaged with the first offending term (in key order) unless every nonzero
// term satisfies x + y = t.
std::optional<PurityViolation> purity_check(const TruncatedSeries& s);

}  // namespace bunmot
