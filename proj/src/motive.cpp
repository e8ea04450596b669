#include <bunmot/motive.hpp>

#include <algorithm>
#include <sstream>

namespace bunmot {

int MotiveTerm::weight() const {
    int w = 2 * twist;
    for (int k : word) w += k;
    return w;
}

namespace {

// Accumulator keyed by (degree, word, twist).
using TermMap = std::map<std::pair<int, std::pair<std::vector<int>, int>>, Int>;

void accumulate(TermMap& into, int degree, std::vector<int> word, int twist, const Int& mult) {
    std::sort(word.begin(), word.end());
    into[{degree, {std::move(word), twist}}] += mult;
}

// Multiply the accumulated partial product by one graded factor, given as a
// list of (degree, word-entry-or-0, twist) monomials of multiplicity 1.
struct FactorMonomial {
    int degree;
    int word_entry;  // 0 = none
    int twist;
};

TermMap multiply(const TermMap& acc, const std::vector<FactorMonomial>& factor, int max_degree) {
    TermMap out;
    for (const auto& [key, mult] : acc) {
        const auto& [deg, wt] = key;
        const auto& [word, twist] = wt;
        for (const FactorMonomial& f : factor) {
            int d = deg + f.degree;
            if (d > max_degree) break;  // factor monomials sorted by degree
            std::vector<int> w = word;
            if (f.word_entry > 0) w.push_back(f.word_entry);
            accumulate(out, d, std::move(w), twist + f.twist, mult);
        }
    }
    return out;
}

}  // namespace

MotiveClass bun_motive(const InvariantDegrees& degrees, const IsogenyDatum& isogeny, int genus,
                       int max_degree) {
    if (genus < 2) throw validation_error("genus: must be >= 2, got " + std::to_string(genus));
    if (max_degree < 0) throw validation_error("max_degree: must be >= 0");

    TermMap acc;
    acc[{0, {{}, 0}}] = 1;
    for (int n : degrees.degrees) {
        std::vector<FactorMonomial> poly_high;  // degree 2n per power, twist n
        for (int e = 0; 2 * n * e <= max_degree; ++e) poly_high.push_back({2 * n * e, 0, n * e});
        std::vector<FactorMonomial> exterior;  // Lambda^k of the 2g-dimensional V
        for (int k = 0; k <= 2 * genus && k * (2 * n - 1) <= max_degree; ++k)
            exterior.push_back({k * (2 * n - 1), k, k * (n - 1)});
        std::vector<FactorMonomial> poly_low;  // degree 2n-2 per power, twist n-1
        for (int f = 0; (2 * n - 2) * f <= max_degree; ++f)
            poly_low.push_back({(2 * n - 2) * f, 0, (n - 1) * f});

        acc = multiply(acc, poly_high, max_degree);
        acc = multiply(acc, exterior, max_degree);
        acc = multiply(acc, poly_low, max_degree);
    }

    MotiveClass mc;
    mc.genus = genus;
    mc.degrees = degrees;
    mc.max_degree = max_degree;
    mc.pi1_order = isogeny.pi1_order;
    for (const auto& [key, mult] : acc) {
        if (mult == 0) continue;
        const auto& [deg, wt] = key;
        MotiveTerm term;
        term.word = wt.first;
        term.twist = wt.second;
        term.mult = mult * isogeny.pi1_order;
        if (term.weight() != deg)
            throw consistency_error("bun_motive: term of weight " +
                                    std::to_string(term.weight()) + " in degree " +
                                    std::to_string(deg));
        mc.per_degree[deg].push_back(std::move(term));
    }
    return mc;
}

TruncatedSeries realize_dim(const MotiveClass& mc) {
    TruncatedSeries s(mc.max_degree);
    for (const auto& [deg, terms] : mc.per_degree)
        for (const MotiveTerm& t : terms) {
            Int dim = t.mult;
            for (int k : t.word) dim *= binomial(2LL * mc.genus, k);
            s.add_term(deg, 0, 0, dim);
        }
    return s;
}

TruncatedSeries realize_E(const MotiveClass& mc) {
    TruncatedSeries s(mc.max_degree);
    for (const auto& [deg, terms] : mc.per_degree)
        for (const MotiveTerm& t : terms) {
            // Bidegree distribution of the term: start from L^b = (x y)^b and
            // convolve with each Lambda^k V.
            std::map<std::pair<int, int>, Int> dist;
            dist[{t.twist, t.twist}] = t.mult;
            for (int k : t.word) {
                std::map<std::pair<int, int>, Int> next;
                for (int j = 0; j <= k; ++j) {
                    Int c = binomial(mc.genus, j) * binomial(mc.genus, k - j);
                    if (c == 0) continue;
                    for (const auto& [xy, m] : dist)
                        next[{xy.first + j, xy.second + (k - j)}] += m * c;
                }
                dist = std::move(next);
            }
            for (const auto& [xy, m] : dist) s.add_term(deg, xy.first, xy.second, m);
        }
    return s;
}

CoarseMotive coarse_motive(const InvariantDegrees& degrees, const IsogenyDatum& isogeny, int genus,
                           const RootSystem& rs, int requested_max) {
    StabilityBound bound = instability_codim_bruteforce(rs, genus);
    CoarseMotive out;
    out.d = bound.d;
    out.stable_range = bound.stable_range;
    out.witness = bound.witness;
    out.witnesses = bound.witnesses;
    out.requested_max = requested_max < 0 ? static_cast<int>(bound.stable_range) : requested_max;

    // d >= 1 for a proper parabolic and g >= 2, so the cut is at least 2.
    int compute_to = static_cast<int>(std::min<long long>(out.requested_max,
                                                          bound.stable_range - 1));
    out.cls = bun_motive(degrees, isogeny, genus, compute_to);
    for (int i = static_cast<int>(out.stable_range); i <= out.requested_max; ++i)
        out.no_claim_degrees.push_back(i);
    return out;
}

TannakianFootprint tannakian_footprint(const MotiveClass& mc) {
    TannakianFootprint fp;
    for (const auto& [deg, terms] : mc.per_degree)
        for (const MotiveTerm& t : terms) {
            fp.words.insert(t.word);
            fp.twists.insert(t.twist);
            for (int k : t.word)
                if (k < 1 || k > 2 * mc.genus) {
                    std::ostringstream os;
                    os << "degree " << deg << ": exterior power " << k << " outside 1.."
                       << 2 * mc.genus;
                    fp.violations.push_back(os.str());
                }
            if (t.twist < 0) {
                std::ostringstream os;
                os << "degree " << deg << ": negative twist " << t.twist;
                fp.violations.push_back(os.str());
            }
        }
    return fp;
}

}  // namespace bunmot
