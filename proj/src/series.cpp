#include <bunmot/series.hpp>

namespace bunmot {

TruncatedSeries::TruncatedSeries(int trunc_order) : trunc_(trunc_order) {
    if (trunc_order < 0) throw validation_error("trunc: must be >= 0");
}

TruncatedSeries TruncatedSeries::one(int trunc_order) {
    TruncatedSeries s(trunc_order);
    s.add_term(0, 0, 0, 1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int trunc_order, int t, int x, int y, Int coeff) {
    TruncatedSeries s(trunc_order);
    s.add_term(t, x, y, coeff);
    return s;
}

Int TruncatedSeries::coeff(int t, int x, int y) const {
    auto it = terms_.find(TermKey{t, x, y});
    return it == terms_.end() ? Int(0) : it->second;
}

int TruncatedSeries::t_valuation() const {
    return terms_.empty() ? trunc_ + 1 : terms_.begin()->first.t;
}

TruncatedSeries& TruncatedSeries::add_term(int t, int x, int y, const Int& coeff) {
    if (t < 0) throw validation_error("term: negative t-degree");
    if (coeff == 0 || t > trunc_) return *this;
    TermKey k{t, x, y};
    Int& c = terms_[k];
    c += coeff;
    if (c == 0) terms_.erase(k);
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc_ != b.trunc_) throw consistency_error("series: truncation mismatch in +");
    TruncatedSeries out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.t, k.x, k.y, c);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc_ != b.trunc_) throw consistency_error("series: truncation mismatch in -");
    TruncatedSeries out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k.t, k.x, k.y, -c);
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.trunc_ != b.trunc_) throw consistency_error("series: truncation mismatch in *");
    TruncatedSeries out(a.trunc_);
    for (const auto& [ka, ca] : a.terms_) {
        if (ka.t > a.trunc_) continue;
        for (const auto& [kb, cb] : b.terms_) {
            int t = ka.t + kb.t;
            if (t > a.trunc_) break;  // map keys iterate with non-decreasing t
            out.add_term(t, ka.x + kb.x, ka.y + kb.y, ca * cb);
        }
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const Int& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw validation_error("exponent: must be >= 0");
    TruncatedSeries acc = one(trunc_);
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::geometric_inverse_of_one_minus() const {
    if (t_valuation() < 1)
        throw validation_error("series: geometric inverse needs positive t-valuation");
    TruncatedSeries acc = one(trunc_);
    TruncatedSeries p = *this;
    while (!p.is_zero()) {
        acc = acc + p;
        p = p * *this;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::specialize_xy_to_one() const {
    TruncatedSeries out(trunc_);
    for (const auto& [k, c] : terms_) out.add_term(k.t, 0, 0, c);
    return out;
}

bool TruncatedSeries::is_univariate() const {
    for (const auto& [k, c] : terms_)
        if (k.x != 0 || k.y != 0) return false;
    return true;
}

TruncatedSeries poincare_BT(int rank, int trunc) {
    if (rank < 1) throw validation_error("rank: must be >= 1");
    TruncatedSeries s(trunc);
    for (int i = 0; 2 * i <= trunc; ++i) s.add_term(2 * i, 0, 0, binomial(rank + i - 1, i));
    return s;
}

namespace {

TruncatedSeries inverse_one_minus_monomial(int trunc, int t, int x, int y) {
    return TruncatedSeries::monomial(trunc, t, x, y, 1).geometric_inverse_of_one_minus();
}

}  // namespace

TruncatedSeries poincare_BG(const InvariantDegrees& degrees, int trunc) {
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int n : degrees.degrees) s = s * inverse_one_minus_monomial(trunc, 2 * n, 0, 0);
    return s;
}

TruncatedSeries poincare_G(const InvariantDegrees& degrees, int trunc) {
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int n : degrees.degrees)
        s = s * (TruncatedSeries::one(trunc) + TruncatedSeries::monomial(trunc, 2 * n - 1, 0, 0, 1));
    return s;
}

TruncatedSeries poincare_loopG(const InvariantDegrees& degrees, int trunc) {
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int n : degrees.degrees) s = s * inverse_one_minus_monomial(trunc, 2 * n - 2, 0, 0);
    return s;
}

TruncatedSeries poincare_bun(const InvariantDegrees& degrees, const IsogenyDatum& isogeny,
                             int genus, int trunc) {
    if (genus < 0) throw validation_error("genus: must be >= 0");
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int n : degrees.degrees) {
        TruncatedSeries odd =
            TruncatedSeries::one(trunc) + TruncatedSeries::monomial(trunc, 2 * n - 1, 0, 0, 1);
        s = s * odd.pow(2 * genus);
        s = s * inverse_one_minus_monomial(trunc, 2 * n, 0, 0);
        s = s * inverse_one_minus_monomial(trunc, 2 * n - 2, 0, 0);
    }
    s *= isogeny.pi1_order;
    return s;
}

TruncatedSeries e_polynomial_bun(const InvariantDegrees& degrees, const IsogenyDatum& isogeny,
                                 int genus, int trunc) {
    if (genus < 0) throw validation_error("genus: must be >= 0");
    TruncatedSeries s = TruncatedSeries::one(trunc);
    for (int n : degrees.degrees) {
        TruncatedSeries odd_xy =
            TruncatedSeries::one(trunc) + TruncatedSeries::monomial(trunc, 2 * n - 1, n, n - 1, 1);
        TruncatedSeries odd_yx =
            TruncatedSeries::one(trunc) + TruncatedSeries::monomial(trunc, 2 * n - 1, n - 1, n, 1);
        s = s * odd_xy.pow(genus) * odd_yx.pow(genus);
        s = s * inverse_one_minus_monomial(trunc, 2 * n, n, n);
        s = s * inverse_one_minus_monomial(trunc, 2 * n - 2, n - 1, n - 1);
    }
    s *= isogeny.pi1_order;
    return s;
}

std::optional<PurityViolation> purity_check(const TruncatedSeries& s) {
    for (const auto& [k, c] : s.terms())
        if (k.x + k.y != k.t) return PurityViolation{k.t, k.x, k.y};
    return std::nullopt;
}

}  // namespace bunmot
