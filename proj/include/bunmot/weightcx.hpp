#pragma once

#include <bunmot/numeric.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bunmot {

using RatMatrix = std::vector<std::vector<Rat>>;  // rows of equal length

long long matrix_rank(RatMatrix m);  // exact, fraction-free elimination

/// One smooth stratum of the boundary arrangement, described only by its
/// graded Betti numbers: betti[m] = dim H^m.
struct Stratum {
    std::string name;
    std::vector<int> betti;
};

/// Inclusion of a level-l stratum into a level-(l-1) stratum, with the
/// Gysin matrices H^m(source) -> H^{m+2}(target) for every m, and the
/// 1-based position k of the removed index (the sign of this incidence in
/// the assembled differential is (-1)^k).
struct Incidence {
    int from_level = 0;  // l >= 1
    int from_index = 0;  // stratum index within level l
    int to_index = 0;    // stratum index within level l-1
    int k = 1;
    std::map<int, RatMatrix> gysin;
};

/// Combinatorial normal-crossing datum: levels[l] lists the codimension-l
/// strata (level 0 is the ambient variety), incidences carry the Gysin
/// maps. The module does no geometry; callers or builders supply the
/// matrices.
struct LogPairDatum {
    std::vector<std::vector<Stratum>> levels;
    std::vector<Incidence> incidences;
};

/// Square-zero map of faces between consecutive simplicial levels is
/// supplied per face: face j of the map from simplicial level p-1 to p is
/// a pullback block per (divisor level l, internal degree m), with columns
/// indexed by the full level-l degree-m space of pair p-1 and rows by the
/// same space of pair p.
struct FaceMap {
    std::map<std::pair<int, int>, RatMatrix> blocks;  // (level l, degree m) -> matrix
};

struct SimplicialLogDatum {
    std::vector<LogPairDatum> pairs;          // simplicial levels 0..P
    std::vector<std::vector<FaceMap>> faces;  // faces[p] has p+1 maps: pair p-1 -> pair p
};

/// The assembled complex, reduced to its weight decomposition: the object
/// sitting at divisor level l with internal degree m (and simplicial level
/// p) carries weight m + 2l and total position p - l; the differential
/// preserves weight and raises position by 1. Blocks are stored per
/// (weight, position).
struct TwistedComplex {
    bool single_pair = true;
    int max_level = 0;  // n: positions run -n..0 for a single pair
    std::map<std::pair<int, int>, int> block_dims;           // (weight, position) -> dim
    std::map<std::pair<int, int>, RatMatrix> differentials;  // at (weight, position) -> position+1
    long long euler_input = 0;  // sum over blocks of (-1)^{weight+position} dim
};

// Validates shapes and verifies d . d = 0; failures name the offending
// position and weight.
TwistedComplex build_pair_complex(const LogPairDatum& datum);
TwistedComplex build_total_complex(const SimplicialLogDatum& datum);

struct CohomologyEntry {
    int position = 0;  // -l for a single pair
    int degree = 0;    // internal cohomological degree m
    int twist = 0;     // -l
    int dim = 0;
};

// Single-pair view of the cohomology table; requires single_pair.
std::vector<CohomologyEntry> cohomology(const TwistedComplex& cx);

struct GrWEntry {
    int degree = 0;  // k of H^k(U)
    int weight = 0;  // j of Gr_W^j
    int dim = 0;
};

struct GrWTable {
    std::vector<GrWEntry> entries;  // sorted by (degree, weight), zero dims omitted
    long long euler_input = 0;
    long long euler_output = 0;  // sum (-1)^degree dim; always equals euler_input

    int dim(int degree, int weight) const;
};

// Weight-graded cohomology of the open complement: a class of internal
// degree m at divisor level l (simplicial level p) lands in
// Gr_W^{m+2l} H^{m+l+p}(U).
GrWTable gr_w_cohomology(const LogPairDatum& datum);
GrWTable gr_w_cohomology(const SimplicialLogDatum& datum);

// Genus-g curve with k marked points removed: Betti table (1, 2g, 1), k
// point strata, Gysin the fundamental-class row (all ones) into H^2.
LogPairDatum curve_minus_points(int genus, int points);

// Constant simplicial object on a pair: every face map is the identity.
SimplicialLogDatum constant_simplicial(const LogPairDatum& datum, int top_level);

}  // namespace bunmot
