#include <bunmot/weightcx.hpp>

#include <algorithm>
#include <sstream>

namespace bunmot {

long long matrix_rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols) throw validation_error("matrix: ragged rows");
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

int betti_at(const Stratum& s, int m) {
    if (m < 0 || m >= static_cast<int>(s.betti.size())) return 0;
    return s.betti[m];
}

int level_dim(const std::vector<Stratum>& level, int m) {
    int d = 0;
    for (const Stratum& s : level) d += betti_at(s, m);
    return d;
}

int stratum_offset(const std::vector<Stratum>& level, int index, int m) {
    int off = 0;
    for (int s = 0; s < index; ++s) off += betti_at(level[s], m);
    return off;
}

RatMatrix zero_matrix(int rows, int cols) {
    return RatMatrix(rows, std::vector<Rat>(cols, Rat(0)));
}

bool is_zero_matrix(const RatMatrix& m) {
    for (const auto& r : m)
        for (const auto& v : r)
            if (v != 0) return false;
    return true;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    // a: p x q, b: q x r
    std::size_t p = a.size(), q = a.empty() ? 0 : a[0].size(), r = b.empty() ? 0 : b[0].size();
    if (q != b.size()) throw consistency_error("matrix product: inner dimension mismatch");
    RatMatrix out = zero_matrix(static_cast<int>(p), static_cast<int>(r));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < q; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < r; ++j)
                if (b[k][j] != 0) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

void validate_pair(const LogPairDatum& datum, const std::string& where) {
    if (datum.levels.empty() || datum.levels[0].empty())
        throw validation_error(where + ".levels: level 0 must contain the ambient strata");
    for (const auto& level : datum.levels)
        for (const Stratum& s : level)
            for (int b : s.betti)
                if (b < 0) throw validation_error(where + ".betti: negative dimension");
    for (const Incidence& inc : datum.incidences) {
        if (inc.from_level < 1 || inc.from_level >= static_cast<int>(datum.levels.size()))
            throw validation_error(where + ".incidences.from_level: " +
                                   std::to_string(inc.from_level) + " outside 1.." +
                                   std::to_string(datum.levels.size() - 1));
        const auto& src_level = datum.levels[inc.from_level];
        const auto& dst_level = datum.levels[inc.from_level - 1];
        if (inc.from_index < 0 || inc.from_index >= static_cast<int>(src_level.size()))
            throw validation_error(where + ".incidences.from: stratum index out of range");
        if (inc.to_index < 0 || inc.to_index >= static_cast<int>(dst_level.size()))
            throw validation_error(where + ".incidences.to: stratum index out of range");
        if (inc.k < 1 || inc.k > inc.from_level)
            throw validation_error(where + ".incidences.k: " + std::to_string(inc.k) +
                                   " outside 1.." + std::to_string(inc.from_level));
        const Stratum& src = src_level[inc.from_index];
        const Stratum& dst = dst_level[inc.to_index];
        for (const auto& [m, mat] : inc.gysin) {
            int want_cols = betti_at(src, m);
            int want_rows = betti_at(dst, m + 2);
            int rows = static_cast<int>(mat.size());
            int cols = rows == 0 ? 0 : static_cast<int>(mat[0].size());
            for (const auto& r : mat)
                if (static_cast<int>(r.size()) != cols)
                    throw validation_error(where + ".incidences.gysin: ragged matrix");
            if (want_rows == 0 && rows == 0) continue;  // no target space
            if (rows != want_rows || cols != want_cols) {
                std::ostringstream os;
                os << where << ".incidences.gysin: matrix in degree " << m << " is " << rows
                   << "x" << cols << ", Betti tables require " << want_rows << "x" << want_cols;
                throw validation_error(os.str());
            }
        }
    }
}

struct NodeKey {
    int p, l, m;
    auto operator<=>(const NodeKey&) const = default;
};

// Assembled node dimensions plus edge matrices of the total complex.
struct Assembly {
    std::map<NodeKey, int> node_dim;
    std::map<std::pair<NodeKey, NodeKey>, RatMatrix> edges;
};

void add_edge(Assembly& a, const NodeKey& from, const NodeKey& to, const RatMatrix& mat, int sign) {
    if (a.node_dim[from] == 0 || a.node_dim[to] == 0) return;
    auto key = std::make_pair(from, to);
    auto it = a.edges.find(key);
    if (it == a.edges.end()) it = a.edges.emplace(key, zero_matrix(a.node_dim[to], a.node_dim[from])).first;
    RatMatrix& acc = it->second;
    for (std::size_t r = 0; r < mat.size(); ++r)
        for (std::size_t c = 0; c < mat[r].size(); ++c)
            acc[r][c] += sign * mat[r][c];
}

void assemble_pair(Assembly& a, const LogPairDatum& datum, int p) {
    int max_m = 0;
    for (const auto& level : datum.levels)
        for (const Stratum& s : level) max_m = std::max(max_m, static_cast<int>(s.betti.size()));
    for (int l = 0; l < static_cast<int>(datum.levels.size()); ++l)
        for (int m = 0; m < max_m; ++m) {
            int d = level_dim(datum.levels[l], m);
            if (d > 0) a.node_dim[{p, l, m}] = d;
        }
    for (const Incidence& inc : datum.incidences) {
        const auto& src_level = datum.levels[inc.from_level];
        const auto& dst_level = datum.levels[inc.from_level - 1];
        const Stratum& src = src_level[inc.from_index];
        const Stratum& dst = dst_level[inc.to_index];
        int sign = (inc.k % 2 == 0) ? 1 : -1;  // (-1)^k
        for (const auto& [m, mat] : inc.gysin) {
            if (betti_at(src, m) == 0 || betti_at(dst, m + 2) == 0) continue;
            NodeKey from{p, inc.from_level, m};
            NodeKey to{p, inc.from_level - 1, m + 2};
            // Embed the stratum-level matrix into the whole-level block.
            RatMatrix block = zero_matrix(level_dim(dst_level, m + 2), level_dim(src_level, m));
            int roff = stratum_offset(dst_level, inc.to_index, m + 2);
            int coff = stratum_offset(src_level, inc.from_index, m);
            for (std::size_t r = 0; r < mat.size(); ++r)
                for (std::size_t c = 0; c < mat[r].size(); ++c)
                    block[roff + r][coff + c] = mat[r][c];
            add_edge(a, from, to, block, sign);
        }
    }
}

TwistedComplex finish(Assembly& a, bool single_pair, int max_level) {
    TwistedComplex cx;
    cx.single_pair = single_pair;
    cx.max_level = max_level;

    // Blocks by (weight, position); within a block, nodes in NodeKey order.
    std::map<std::pair<int, int>, std::vector<NodeKey>> block_nodes;
    for (const auto& [node, dim] : a.node_dim) {
        if (dim == 0) continue;
        int weight = node.m + 2 * node.l;
        int position = node.p - node.l;
        block_nodes[{weight, position}].push_back(node);
        cx.block_dims[{weight, position}] += dim;
        cx.euler_input += ((weight + position) % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
    }

    auto node_offset = [&](const std::vector<NodeKey>& nodes, const NodeKey& n) {
        int off = 0;
        for (const NodeKey& k : nodes) {
            if (k == n) return off;
            off += a.node_dim[k];
        }
        throw consistency_error("weight complex: node missing from its block");
    };

    for (const auto& [edge, mat] : a.edges) {
        const auto& [from, to] = edge;
        int jf = from.m + 2 * from.l, qf = from.p - from.l;
        int jt = to.m + 2 * to.l, qt = to.p - to.l;
        if (jf != jt || qt != qf + 1)
            throw consistency_error("weight complex: edge does not preserve weight or raise "
                                    "position by one");
        auto& big = cx.differentials[{jf, qf}];
        if (big.empty()) big = zero_matrix(cx.block_dims[{jt, qt}], cx.block_dims[{jf, qf}]);
        int roff = node_offset(block_nodes[{jt, qt}], to);
        int coff = node_offset(block_nodes[{jf, qf}], from);
        for (std::size_t r = 0; r < mat.size(); ++r)
            for (std::size_t c = 0; c < mat[r].size(); ++c)
                big[roff + r][coff + c] = mat[r][c];
    }

    // d . d = 0, blockwise.
    for (const auto& [key, d1] : cx.differentials) {
        auto [j, q] = key;
        auto it = cx.differentials.find({j, q + 1});
        if (it == cx.differentials.end()) continue;
        if (!is_zero_matrix(multiply(it->second, d1))) {
            std::ostringstream os;
            os << "complex: d*d != 0 for the differentials leaving positions " << q << " and "
               << q + 1 << " in weight " << j;
            throw validation_error(os.str());
        }
    }
    return cx;
}

}  // namespace

TwistedComplex build_pair_complex(const LogPairDatum& datum) {
    validate_pair(datum, "datum");
    Assembly a;
    assemble_pair(a, datum, 0);
    return finish(a, true, static_cast<int>(datum.levels.size()) - 1);
}

TwistedComplex build_total_complex(const SimplicialLogDatum& datum) {
    if (datum.pairs.empty()) throw validation_error("pairs: at least one simplicial level");
    if (datum.faces.size() != datum.pairs.size())
        throw validation_error("faces: need one face list per simplicial level (empty at level 0)");
    if (!datum.faces[0].empty()) throw validation_error("faces: level 0 has no incoming faces");

    Assembly a;
    int max_level = 0;
    for (int p = 0; p < static_cast<int>(datum.pairs.size()); ++p) {
        validate_pair(datum.pairs[p], "pairs[" + std::to_string(p) + "]");
        max_level =
            std::max(max_level, static_cast<int>(datum.pairs[p].levels.size()) - 1);
        assemble_pair(a, datum.pairs[p], p);
    }

    for (int p = 1; p < static_cast<int>(datum.pairs.size()); ++p) {
        if (static_cast<int>(datum.faces[p].size()) != p + 1)
            throw validation_error("faces[" + std::to_string(p) + "]: expected " +
                                   std::to_string(p + 1) + " face maps");
        for (int f = 0; f <= p; ++f) {
            const FaceMap& face = datum.faces[p][f];
            int face_sign = (f % 2 == 0) ? 1 : -1;  // (-1)^f
            for (const auto& [lm, mat] : face.blocks) {
                auto [l, m] = lm;
                NodeKey from{p - 1, l, m};
                NodeKey to{p, l, m};
                int want_cols = a.node_dim.count(from) ? a.node_dim[from] : 0;
                int want_rows = a.node_dim.count(to) ? a.node_dim[to] : 0;
                int rows = static_cast<int>(mat.size());
                int cols = rows == 0 ? 0 : static_cast<int>(mat[0].size());
                if (rows != want_rows || cols != want_cols)
                    throw validation_error("faces: block at level " + std::to_string(l) +
                                           ", degree " + std::to_string(m) + " is " +
                                           std::to_string(rows) + "x" + std::to_string(cols) +
                                           ", spaces require " + std::to_string(want_rows) + "x" +
                                           std::to_string(want_cols));
                if (want_rows == 0 || want_cols == 0) continue;
                // The face differential picks up (-1)^l against the Gysin one.
                int sign = face_sign * ((l % 2 == 0) ? 1 : -1);
                add_edge(a, from, to, mat, sign);
            }
        }
    }
    return finish(a, false, max_level);
}

namespace {

std::map<std::pair<int, int>, int> block_cohomology(const TwistedComplex& cx) {
    std::map<std::pair<int, int>, long long> rank_out;
    for (const auto& [key, mat] : cx.differentials) rank_out[key] = matrix_rank(mat);
    std::map<std::pair<int, int>, int> result;
    for (const auto& [key, dim] : cx.block_dims) {
        auto [j, q] = key;
        long long out = rank_out.count({j, q}) ? rank_out[{j, q}] : 0;
        long long in = rank_out.count({j, q - 1}) ? rank_out[{j, q - 1}] : 0;
        long long h = dim - out - in;
        if (h < 0)
            throw consistency_error("complex: negative cohomology dimension at weight " +
                                    std::to_string(j) + ", position " + std::to_string(q));
        result[{j, q}] = static_cast<int>(h);
    }
    return result;
}

}  // namespace

std::vector<CohomologyEntry> cohomology(const TwistedComplex& cx) {
    if (!cx.single_pair)
        throw validation_error("complex: the (position, degree, twist) table exists only for a "
                               "single pair; use the weight-graded table");
    auto blocks = block_cohomology(cx);
    std::vector<CohomologyEntry> out;
    for (const auto& [key, h] : blocks) {
        auto [j, q] = key;
        CohomologyEntry e;
        e.position = q;
        e.degree = j + 2 * q;  // m = j - 2l with l = -q
        e.twist = q;
        e.dim = h;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end(), [](const CohomologyEntry& a, const CohomologyEntry& b) {
        if (a.position != b.position) return a.position < b.position;
        return a.degree < b.degree;
    });
    return out;
}

int GrWTable::dim(int degree, int weight) const {
    for (const GrWEntry& e : entries)
        if (e.degree == degree && e.weight == weight) return e.dim;
    return 0;
}

namespace {

GrWTable grw_from_complex(const TwistedComplex& cx) {
    GrWTable table;
    std::map<std::pair<int, int>, int> agg;  // (degree k, weight j)
    for (const auto& [key, h] : block_cohomology(cx)) {
        auto [j, q] = key;
        if (h != 0) agg[{q + j, j}] += h;
    }
    for (const auto& [kj, dim] : agg) {
        table.entries.push_back({kj.first, kj.second, dim});
        table.euler_output += (kj.first % 2 == 0 ? 1 : -1) * static_cast<long long>(dim);
    }
    table.euler_input = cx.euler_input;
    if (table.euler_input != table.euler_output)
        throw consistency_error("gr_w: Euler characteristic not conserved: input " +
                                std::to_string(table.euler_input) + ", output " +
                                std::to_string(table.euler_output));
    return table;
}

}  // namespace

GrWTable gr_w_cohomology(const LogPairDatum& datum) {
    return grw_from_complex(build_pair_complex(datum));
}

GrWTable gr_w_cohomology(const SimplicialLogDatum& datum) {
    return grw_from_complex(build_total_complex(datum));
}

LogPairDatum curve_minus_points(int genus, int points) {
    if (genus < 0) throw validation_error("genus: must be >= 0 for a curve datum");
    if (points < 0) throw validation_error("points: must be >= 0");
    LogPairDatum d;
    d.levels.emplace_back();
    d.levels[0].push_back({"C", {1, 2 * genus, 1}});
    if (points > 0) {
        d.levels.emplace_back();
        for (int i = 0; i < points; ++i) {
            d.levels[1].push_back({"p" + std::to_string(i + 1), {1}});
            Incidence inc;
            inc.from_level = 1;
            inc.from_index = i;
            inc.to_index = 0;
            inc.k = 1;
            inc.gysin[0] = RatMatrix{{Rat(1)}};
            d.incidences.push_back(std::move(inc));
        }
    }
    return d;
}

SimplicialLogDatum constant_simplicial(const LogPairDatum& datum, int top_level) {
    if (top_level < 0) throw validation_error("top_level: must be >= 0");
    validate_pair(datum, "datum");
    SimplicialLogDatum s;
    s.pairs.assign(top_level + 1, datum);
    s.faces.resize(top_level + 1);

    int max_m = 0;
    for (const auto& level : datum.levels)
        for (const Stratum& st : level) max_m = std::max(max_m, static_cast<int>(st.betti.size()));
    FaceMap identity;
    for (int l = 0; l < static_cast<int>(datum.levels.size()); ++l)
        for (int m = 0; m < max_m; ++m) {
            int d = level_dim(datum.levels[l], m);
            if (d == 0) continue;
            RatMatrix id = zero_matrix(d, d);
            for (int i = 0; i < d; ++i) id[i][i] = 1;
            identity.blocks[{l, m}] = std::move(id);
        }
    for (int p = 1; p <= top_level; ++p) s.faces[p].assign(p + 1, identity);
    return s;
}

}  // namespace bunmot
