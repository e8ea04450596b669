#pragma once

#include <bunmot/numeric.hpp>

#include <map>
#include <string>
#include <vector>

namespace bunmot {

enum class Family { A, B, C, D };

char family_letter(Family f);
// Throws validation_error for letters outside A..D (exceptional families are
// not built by this library).
Family family_from_letter(char c);

using Vec = std::vector<Rat>;

Rat inner(const Vec& a, const Vec& b);
// Reflection of v in the hyperplane orthogonal to root:
// v - 2(v,root)/(root,root) * root.
Vec reflect(const Vec& v, const Vec& root);

/// A reduced root system for one of the classical families, with exact
/// rational coordinates in the standard model: A_n lives in the hyperplane
/// sum x_i = 0 of (n+1)-space, B/C/D_n in n-space. Simple roots are
/// alpha_i = e_i - e_{i+1} for i < n, and alpha_n = e_n (B), 2e_n (C),
/// e_{n-1} + e_n (D). Positive roots are sorted by (height, coefficient
/// vector), so construction is deterministic.
struct RootSystem {
    Family family;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<Vec> simple_roots;
    std::vector<Vec> positive_roots;
    std::vector<Vec> all_roots;  // positive roots followed by their negatives
    // Expansion of each positive root in the simple basis; entries are
    // non-negative integers (verified at construction).
    std::vector<std::vector<Int>> positive_coords;

    int height(int positive_index) const;
    std::string label() const;  // e.g. "B3"
};

// Valid ranks: A n>=1, B n>=2, C n>=2, D n>=3. All type invariants
// (reflection closure, root counts, integral Cartan pairings, integral
// non-negative simple-root expansions) are verified before returning.
RootSystem build_root_system(Family family, int rank);

// C[i][j] = 2(alpha_i, alpha_j) / (alpha_j, alpha_j).
std::vector<std::vector<Int>> cartan_matrix(const RootSystem& rs);
Int cartan_determinant(const RootSystem& rs);

// |W|, enumerated: breadth-first closure of the orbit of the (verified
// regular) vector 2*rho under the simple reflections. The stabilizer of a
// regular vector is trivial, so the orbit size is the group order.
Int weyl_group_order(const RootSystem& rs);

// |R| + rank.
long long dim_group(const RootSystem& rs);

struct InvariantDegrees {
    std::vector<int> degrees;            // n_1 <= ... <= n_r
    std::map<int, int> graded_span_dims; // cohomological degree 2n -> multiplicity
};

// Degrees of the generating Weyl invariants, computed from the height
// partition of the positive roots: the conjugate of the partition
// (#roots of height 1, #roots of height 2, ...) lists the exponents m_i,
// and n_i = m_i + 1. Fails with consistency_error unless both
// prod n_i = |W| (enumerated) and sum (2n_i - 1) = dim G hold.
InvariantDegrees fundamental_degrees(const RootSystem& rs);

enum class IsogenyKind { simply_connected, adjoint, custom };

struct IsogenyDatum {
    IsogenyKind kind;
    Int pi1_order;  // 1 / det(Cartan) / validated custom order
};

// For custom, order must divide det(Cartan); otherwise validation_error.
IsogenyDatum fundamental_group_order(const RootSystem& rs, IsogenyKind kind,
                                     const Int& custom_order = 1);

std::string isogeny_name(IsogenyKind kind);

// "B3" -> (B, 3). Case-insensitive; no whitespace; the rank must be a
// positive integer. Validity of the (family, rank) pair is checked by
// build_root_system, not here.
std::pair<Family, int> parse_group_spec(const std::string& text);

}  // namespace bunmot
