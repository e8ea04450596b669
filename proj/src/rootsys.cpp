#include <bunmot/rootsys.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace bunmot {

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw validation_error("rational: empty string");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(text, true)) throw validation_error("rational: malformed '" + text + "'");
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false))
        throw validation_error("rational: malformed '" + text + "'");
    Int d(den);
    if (d == 0) throw validation_error("rational: zero denominator in '" + text + "'");
    return Rat(Int(num), d);
}

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    throw consistency_error("family_letter: unreachable");
}

Family family_from_letter(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default:
            throw validation_error(std::string("family: unknown '") + c +
                                   "' (supported: A n>=1, B n>=2, C n>=2, D n>=3)");
    }
}

Rat inner(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw consistency_error("inner: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec reflect(const Vec& v, const Vec& root) {
    Rat nn = inner(root, root);
    if (nn == 0) throw consistency_error("reflect: zero root");
    Rat c = 2 * inner(v, root) / nn;
    Vec out = v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * root[i];
    return out;
}

int RootSystem::height(int positive_index) const {
    const auto& c = positive_coords.at(positive_index);
    Int h = 0;
    for (const Int& x : c) h += x;
    return static_cast<int>(h);
}

std::string RootSystem::label() const {
    return std::string(1, family_letter(family)) + std::to_string(rank);
}

namespace {

Vec basis_vec(int dim, int i, Rat scale = 1) {
    Vec v(dim, Rat(0));
    v[i] = scale;
    return v;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec v = a;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    Vec v = a;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
}

Vec negate(const Vec& a) {
    Vec v = a;
    for (auto& x : v) x = -x;
    return v;
}

// Exact Gaussian solve of G c = b with G the Gram matrix of the simple roots.
std::vector<Rat> solve_gram(std::vector<std::vector<Rat>> g, std::vector<Rat> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (g[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw consistency_error("solve_gram: singular Gram matrix");
        std::swap(g[piv], g[col]);
        std::swap(b[piv], b[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || g[r][col] == 0) continue;
            Rat f = g[r][col] / g[col][col];
            for (int cc = col; cc < n; ++cc) g[r][cc] -= f * g[col][cc];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rat> c(n);
    for (int i = 0; i < n; ++i) c[i] = b[i] / g[i][i];
    return c;
}

// All-pairs checks on an integer model of the roots (every classical-family
// coordinate is integral, keeping this path exact).
void verify_pairs_integer(const RootSystem& rs) {
    const int dim = rs.ambient_dim;
    std::vector<std::vector<long long>> roots;
    for (const Vec& r : rs.all_roots) {
        std::vector<long long> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = static_cast<long long>(numerator(r[i]));
        roots.push_back(std::move(v));
    }
    std::set<std::vector<long long>> all(roots.begin(), roots.end());
    if (all.size() != roots.size()) throw consistency_error(rs.label() + ": duplicate roots");

    auto dot = [dim](const std::vector<long long>& a, const std::vector<long long>& b) {
        long long s = 0;
        for (int i = 0; i < dim; ++i) s += a[i] * b[i];
        return s;
    };
    const std::size_t npos = rs.positive_roots.size();
    for (std::size_t i = 0; i < npos; ++i)
        for (std::size_t j = i + 1; j < npos; ++j) {
            long long ab = dot(roots[i], roots[j]);
            if (ab * ab == dot(roots[i], roots[i]) * dot(roots[j], roots[j]))
                throw consistency_error(rs.label() + ": non-reduced pair of roots");
        }

    std::vector<long long> image(dim);
    for (const auto& b : roots) {
        long long bb = dot(b, b);
        for (const auto& a : roots) {
            long long twice = 2 * dot(a, b);
            if (twice % bb != 0)
                throw consistency_error(rs.label() + ": non-integral Cartan pairing");
            long long c = twice / bb;
            for (int i = 0; i < dim; ++i) image[i] = a[i] - c * b[i];
            if (!all.count(image))
                throw consistency_error(rs.label() + ": root set not reflection-closed");
        }
    }
}

void verify_pairs_rational(const RootSystem& rs) {
    std::set<Vec> all(rs.all_roots.begin(), rs.all_roots.end());
    if (all.size() != rs.all_roots.size())
        throw consistency_error(rs.label() + ": duplicate roots");

    for (const Vec& a : rs.positive_roots)
        for (const Vec& b : rs.positive_roots) {
            if (&a == &b) continue;
            Rat ab = inner(a, b), aa = inner(a, a), bb = inner(b, b);
            if (ab * ab == aa * bb)
                throw consistency_error(rs.label() + ": non-reduced pair of roots");
        }

    for (const Vec& b : rs.all_roots) {
        Rat bb = inner(b, b);
        for (const Vec& a : rs.all_roots) {
            if (!is_integer(2 * inner(a, b) / bb))
                throw consistency_error(rs.label() + ": non-integral Cartan pairing");
            if (!all.count(reflect(a, b)))
                throw consistency_error(rs.label() + ": root set not reflection-closed");
        }
    }
}

void verify_invariants(const RootSystem& rs) {
    const long long n = rs.rank;
    long long expected = 0;
    switch (rs.family) {
        case Family::A: expected = n * (n + 1) / 2; break;
        case Family::B:
        case Family::C: expected = n * n; break;
        case Family::D: expected = n * (n - 1); break;
    }
    if (static_cast<long long>(rs.positive_roots.size()) != expected)
        throw consistency_error(rs.label() + ": |R_+| = " +
                                std::to_string(rs.positive_roots.size()) + ", expected " +
                                std::to_string(expected));

    bool integral = true;
    for (const Vec& r : rs.all_roots)
        for (const Rat& x : r) integral = integral && is_integer(x);
    if (integral)
        verify_pairs_integer(rs);
    else
        verify_pairs_rational(rs);
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
    auto bad_rank = [&](int min_rank) {
        std::ostringstream os;
        os << "rank: " << family_letter(family) << rank << " invalid; "
           << family_letter(family) << " requires rank >= " << min_rank
           << " (supported: A n>=1, B n>=2, C n>=2, D n>=3)";
        throw validation_error(os.str());
    };

    RootSystem rs;
    rs.family = family;
    rs.rank = rank;
    switch (family) {
        case Family::A: {
            if (rank < 1) bad_rank(1);
            rs.ambient_dim = rank + 1;
            for (int i = 0; i < rank; ++i)
                rs.simple_roots.push_back(
                    sub(basis_vec(rs.ambient_dim, i), basis_vec(rs.ambient_dim, i + 1)));
            for (int i = 0; i < rs.ambient_dim; ++i)
                for (int j = i + 1; j < rs.ambient_dim; ++j)
                    rs.positive_roots.push_back(
                        sub(basis_vec(rs.ambient_dim, i), basis_vec(rs.ambient_dim, j)));
            break;
        }
        case Family::B: {
            if (rank < 2) bad_rank(2);
            rs.ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i)
                rs.simple_roots.push_back(sub(basis_vec(rank, i), basis_vec(rank, i + 1)));
            rs.simple_roots.push_back(basis_vec(rank, rank - 1));
            for (int i = 0; i < rank; ++i) rs.positive_roots.push_back(basis_vec(rank, i));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    rs.positive_roots.push_back(sub(basis_vec(rank, i), basis_vec(rank, j)));
                    rs.positive_roots.push_back(add(basis_vec(rank, i), basis_vec(rank, j)));
                }
            break;
        }
        case Family::C: {
            if (rank < 2) bad_rank(2);
            rs.ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i)
                rs.simple_roots.push_back(sub(basis_vec(rank, i), basis_vec(rank, i + 1)));
            rs.simple_roots.push_back(basis_vec(rank, rank - 1, 2));
            for (int i = 0; i < rank; ++i) rs.positive_roots.push_back(basis_vec(rank, i, 2));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    rs.positive_roots.push_back(sub(basis_vec(rank, i), basis_vec(rank, j)));
                    rs.positive_roots.push_back(add(basis_vec(rank, i), basis_vec(rank, j)));
                }
            break;
        }
        case Family::D: {
            if (rank < 3) bad_rank(3);
            rs.ambient_dim = rank;
            for (int i = 0; i + 1 < rank; ++i)
                rs.simple_roots.push_back(sub(basis_vec(rank, i), basis_vec(rank, i + 1)));
            rs.simple_roots.push_back(add(basis_vec(rank, rank - 2), basis_vec(rank, rank - 1)));
            for (int i = 0; i < rank; ++i)
                for (int j = i + 1; j < rank; ++j) {
                    rs.positive_roots.push_back(sub(basis_vec(rank, i), basis_vec(rank, j)));
                    rs.positive_roots.push_back(add(basis_vec(rank, i), basis_vec(rank, j)));
                }
            break;
        }
    }

    // Expand every positive root in the simple basis via the Gram system,
    // and require non-negative integer coefficients.
    std::vector<std::vector<Rat>> gram(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) gram[i][j] = inner(rs.simple_roots[i], rs.simple_roots[j]);

    struct Expanded {
        Vec root;
        std::vector<Int> coords;
        int height;
    };
    std::vector<Expanded> expanded;
    for (const Vec& r : rs.positive_roots) {
        std::vector<Rat> b(rank);
        for (int i = 0; i < rank; ++i) b[i] = inner(rs.simple_roots[i], r);
        std::vector<Rat> c = solve_gram(gram, b);
        std::vector<Int> ci(rank);
        Int h = 0;
        for (int i = 0; i < rank; ++i) {
            if (!is_integer(c[i]) || c[i] < 0)
                throw consistency_error(rs.label() +
                                        ": positive root not a non-negative integer "
                                        "combination of the simple roots");
            ci[i] = numerator(c[i]);
            h += ci[i];
        }
        expanded.push_back({r, std::move(ci), static_cast<int>(h)});
    }
    std::sort(expanded.begin(), expanded.end(), [](const Expanded& a, const Expanded& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coords < b.coords;
    });
    rs.positive_roots.clear();
    for (auto& e : expanded) {
        rs.positive_roots.push_back(std::move(e.root));
        rs.positive_coords.push_back(std::move(e.coords));
    }

    rs.all_roots = rs.positive_roots;
    for (const Vec& r : rs.positive_roots) rs.all_roots.push_back(negate(r));

    verify_invariants(rs);
    return rs;
}

std::vector<std::vector<Int>> cartan_matrix(const RootSystem& rs) {
    std::vector<std::vector<Int>> c(rs.rank, std::vector<Int>(rs.rank));
    for (int i = 0; i < rs.rank; ++i)
        for (int j = 0; j < rs.rank; ++j) {
            Rat v = 2 * inner(rs.simple_roots[i], rs.simple_roots[j]) /
                    inner(rs.simple_roots[j], rs.simple_roots[j]);
            if (!is_integer(v)) throw consistency_error(rs.label() + ": non-integral Cartan entry");
            c[i][j] = numerator(v);
        }
    return c;
}

Int cartan_determinant(const RootSystem& rs) {
    // Bareiss fraction-free elimination.
    auto m = cartan_matrix(rs);
    const int n = rs.rank;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

long long dim_group(const RootSystem& rs) {
    return static_cast<long long>(rs.all_roots.size()) + rs.rank;
}

namespace {

constexpr int kMaxAmbient = 12;
using OrbitKey = unsigned __int128;  // up to 12 coordinates, one byte each

Int weyl_group_order_by_orbit(const RootSystem& rs) {
    const int dim = rs.ambient_dim;
    if (dim > kMaxAmbient) throw consistency_error("weyl_group_order: ambient dimension too large");

    // Integer model of the simple reflections: s_i(v) = v - c * alpha_i with
    // c = 2(v, alpha_i) / (alpha_i, alpha_i). For the standard classical
    // coordinates both alpha_i and c are integral.
    struct SimpleRefl {
        std::array<long long, kMaxAmbient> alpha{};
        long long norm2 = 0;
    };
    std::vector<SimpleRefl> refl;
    for (const Vec& a : rs.simple_roots) {
        SimpleRefl s;
        for (int i = 0; i < dim; ++i) {
            if (!is_integer(a[i])) throw consistency_error("weyl_group_order: non-integral root");
            s.alpha[i] = static_cast<long long>(numerator(a[i]));
        }
        Rat nn = inner(a, a);
        if (!is_integer(nn)) throw consistency_error("weyl_group_order: non-integral norm");
        s.norm2 = static_cast<long long>(numerator(nn));
        refl.push_back(s);
    }

    std::array<long long, kMaxAmbient> start{};  // 2*rho = sum of positive roots
    for (const Vec& r : rs.positive_roots)
        for (int i = 0; i < dim; ++i) start[i] += static_cast<long long>(numerator(r[i]));

    // Regularity of the starting vector: nonzero pairing with every root.
    for (const Vec& r : rs.positive_roots) {
        long long dot = 0;
        for (int i = 0; i < dim; ++i) dot += start[i] * static_cast<long long>(numerator(r[i]));
        if (dot == 0) throw consistency_error("weyl_group_order: starting vector not regular");
    }

    // Breadth-first enumeration of the orbit, which is the Cayley graph of W
    // based at the regular vector: s_i moves v up one length level exactly
    // when (alpha_i, v) > 0 (the pairing is never zero on a regular orbit).
    // Generating only upward moves reaches every element once per reduced
    // word, so levels just need sort+unique.
    auto bfs = [&](auto encode, auto decode) {
        using Key = decltype(encode(static_cast<const long long*>(nullptr)));
        std::vector<Key> frontier{encode(start.data())};
        Int total = 1;
        long long v[kMaxAmbient];
        long long w[kMaxAmbient];
        while (!frontier.empty()) {
            std::vector<Key> next;
            next.reserve(frontier.size() * refl.size() / 2 + 16);
            for (Key k : frontier) {
                decode(k, v);
                for (const auto& s : refl) {
                    long long dot = 0;
                    for (int i = 0; i < dim; ++i) dot += v[i] * s.alpha[i];
                    if (dot <= 0) continue;
                    long long twice = 2 * dot;
                    if (twice % s.norm2 != 0)
                        throw consistency_error("weyl_group_order: non-integral reflection");
                    long long c = twice / s.norm2;
                    for (int i = 0; i < dim; ++i) w[i] = v[i] - c * s.alpha[i];
                    next.push_back(encode(w));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            total += next.size();
            frontier = std::move(next);
        }
        return total;
    };

    auto check_range = [](long long x) {
        if (x < -127 || x > 127)
            throw consistency_error("weyl_group_order: orbit coordinate out of range");
    };
    if (dim <= 8) {
        auto encode = [dim, check_range](const long long* v) {
            std::uint64_t k = 0;
            for (int i = dim - 1; i >= 0; --i) {
                check_range(v[i]);
                k = (k << 8) | static_cast<unsigned char>(v[i] + 128);
            }
            return k;
        };
        auto decode = [dim](std::uint64_t k, long long* v) {
            for (int i = 0; i < dim; ++i) {
                v[i] = static_cast<long long>(k & 0xff) - 128;
                k >>= 8;
            }
        };
        return bfs(encode, decode);
    }
    auto encode = [dim, check_range](const long long* v) {
        OrbitKey k = 0;
        for (int i = dim - 1; i >= 0; --i) {
            check_range(v[i]);
            k = (k << 8) | static_cast<unsigned char>(v[i] + 128);
        }
        return k;
    };
    auto decode = [dim](OrbitKey k, long long* v) {
        for (int i = 0; i < dim; ++i) {
            v[i] = static_cast<long long>(static_cast<unsigned char>(k & 0xff)) - 128;
            k >>= 8;
        }
    };
    return bfs(encode, decode);
}

}  // namespace

Int weyl_group_order(const RootSystem& rs) {
    // The enumeration is deterministic per (family, rank); memoized so that
    // repeated consistency checks do not redo the largest orbits.
    static std::mutex mu;
    static std::map<std::pair<Family, int>, Int> cache;
    const std::pair<Family, int> key{rs.family, rs.rank};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Int order = weyl_group_order_by_orbit(rs);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(order)).first->second;
}

InvariantDegrees fundamental_degrees(const RootSystem& rs) {
    // Height partition of the positive roots.
    std::map<int, int> count_at_height;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        ++count_at_height[rs.height(static_cast<int>(i))];
    int max_height = count_at_height.rbegin()->first;
    std::vector<int> counts(max_height + 1, 0);
    for (auto [h, c] : count_at_height) counts[h] = c;

    // Conjugate partition: exponent m_j = #{heights h with counts[h] >= j}.
    InvariantDegrees out;
    for (int j = 1; j <= counts[1]; ++j) {
        int m = 0;
        for (int h = 1; h <= max_height; ++h)
            if (counts[h] >= j) ++m;
        out.degrees.push_back(m + 1);
    }
    std::sort(out.degrees.begin(), out.degrees.end());
    if (static_cast<int>(out.degrees.size()) != rs.rank)
        throw consistency_error(rs.label() + ": degree count " +
                                std::to_string(out.degrees.size()) + " != rank " +
                                std::to_string(rs.rank));
    for (int n : out.degrees) ++out.graded_span_dims[2 * n];

    Int prod = 1;
    long long dim_sum = 0;
    for (int n : out.degrees) {
        prod *= n;
        dim_sum += 2 * n - 1;
    }
    Int w = weyl_group_order(rs);
    if (prod != w)
        throw consistency_error(rs.label() + ": product of degrees " + prod.str() +
                                " != Weyl group order " + w.str());
    long long dg = dim_group(rs);
    if (dim_sum != dg)
        throw consistency_error(rs.label() + ": sum of (2n_i - 1) " + std::to_string(dim_sum) +
                                " != dim G " + std::to_string(dg));
    return out;
}

IsogenyDatum fundamental_group_order(const RootSystem& rs, IsogenyKind kind,
                                     const Int& custom_order) {
    Int det = cartan_determinant(rs);
    switch (kind) {
        case IsogenyKind::simply_connected: return {kind, 1};
        case IsogenyKind::adjoint: return {kind, det};
        case IsogenyKind::custom:
            if (custom_order < 1 || det % custom_order != 0)
                throw validation_error("isogeny: custom order " + custom_order.str() +
                                       " does not divide det(Cartan) = " + det.str());
            return {kind, custom_order};
    }
    throw consistency_error("fundamental_group_order: unreachable");
}

std::pair<Family, int> parse_group_spec(const std::string& text) {
    if (text.size() < 2)
        throw validation_error("group: expected FAMILYrank such as A4, got '" + text + "'");
    Family f = family_from_letter(text[0]);
    for (std::size_t i = 1; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw validation_error("group: rank in '" + text + "' is not a positive integer");
    long long rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000) throw validation_error("group: rank in '" + text + "' is too large");
    }
    if (rank < 1) throw validation_error("group: rank must be >= 1 in '" + text + "'");
    return {f, static_cast<int>(rank)};
}

std::string isogeny_name(IsogenyKind kind) {
    switch (kind) {
        case IsogenyKind::simply_connected: return "simply_connected";
        case IsogenyKind::adjoint: return "adjoint";
        case IsogenyKind::custom: return "custom";
    }
    throw consistency_error("isogeny_name: unreachable");
}

}  // namespace bunmot
