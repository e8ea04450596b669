#include <doctest.h>

#include <bunmot/weightcx.hpp>

#include <random>

using namespace bunmot;

namespace {

RatMatrix ones(int rows, int cols) {
    return RatMatrix(rows, std::vector<Rat>(cols, Rat(1)));
}

// P^2 with two lines crossing in a point.
LogPairDatum plane_two_lines() {
    LogPairDatum d;
    d.levels.resize(3);
    d.levels[0].push_back({"P2", {1, 0, 1, 0, 1}});
    d.levels[1].push_back({"L1", {1, 0, 1}});
    d.levels[1].push_back({"L2", {1, 0, 1}});
    d.levels[2].push_back({"L12", {1}});
    for (int i = 0; i < 2; ++i) {
        Incidence inc;
        inc.from_level = 1;
        inc.from_index = i;
        inc.to_index = 0;
        inc.k = 1;
        inc.gysin[0] = ones(1, 1);
        inc.gysin[2] = ones(1, 1);
        d.incidences.push_back(inc);
    }
    Incidence into_l1;  // remove the second index of {1,2}
    into_l1.from_level = 2;
    into_l1.from_index = 0;
    into_l1.to_index = 0;
    into_l1.k = 2;
    into_l1.gysin[0] = ones(1, 1);
    d.incidences.push_back(into_l1);
    Incidence into_l2;  // remove the first index
    into_l2.from_level = 2;
    into_l2.from_index = 0;
    into_l2.to_index = 1;
    into_l2.k = 1;
    into_l2.gysin[0] = ones(1, 1);
    d.incidences.push_back(into_l2);
    return d;
}

int total_h(const GrWTable& t, int degree) {
    int sum = 0;
    for (const GrWEntry& e : t.entries)
        if (e.degree == degree) sum += e.dim;
    return sum;
}

}  // namespace

TEST_CASE("matrix rank") {
    CHECK(matrix_rank({}) == 0);
    CHECK(matrix_rank({{Rat(1), Rat(1)}}) == 1);
    CHECK(matrix_rank({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
    CHECK(matrix_rank({{Rat(1), Rat(0)}, {Rat(0), Rat("1/3")}}) == 2);
    CHECK(matrix_rank(RatMatrix(3, std::vector<Rat>(2, Rat(0)))) == 0);
    CHECK_THROWS_AS(matrix_rank({{Rat(1)}, {Rat(1), Rat(2)}}), validation_error);
}

TEST_CASE("Gm: projective line minus two points") {
    LogPairDatum gm = curve_minus_points(0, 2);
    TwistedComplex cx = build_pair_complex(gm);
    auto table = cohomology(cx);
    REQUIRE(table.size() == 3);
    CHECK(table[0].position == -1);
    CHECK(table[0].degree == 0);
    CHECK(table[0].twist == -1);
    CHECK(table[0].dim == 1);  // kernel of the all-ones row
    CHECK(table[1].position == 0);
    CHECK(table[1].degree == 0);
    CHECK(table[1].dim == 1);
    CHECK(table[2].degree == 2);
    CHECK(table[2].dim == 0);

    GrWTable grw = gr_w_cohomology(gm);
    CHECK(grw.dim(0, 0) == 1);
    CHECK(grw.dim(1, 2) == 1);
    int total = 0;
    for (const GrWEntry& e : grw.entries) total += e.dim;
    CHECK(total == 2);
    CHECK(grw.euler_output == 0);
}

TEST_CASE("smooth projective stratum, empty boundary") {
    LogPairDatum d = curve_minus_points(2, 0);
    TwistedComplex cx = build_pair_complex(d);
    auto table = cohomology(cx);
    for (const CohomologyEntry& e : table) CHECK(e.position == 0);
    GrWTable grw = gr_w_cohomology(d);
    CHECK(grw.dim(0, 0) == 1);
    CHECK(grw.dim(1, 1) == 4);
    CHECK(grw.dim(2, 2) == 1);
    for (const GrWEntry& e : grw.entries) CHECK(e.weight == e.degree);
    CHECK(grw.euler_output == -2);
}

TEST_CASE("punctured curves") {
    GrWTable once = gr_w_cohomology(curve_minus_points(1, 1));
    CHECK(once.dim(0, 0) == 1);
    CHECK(once.dim(1, 1) == 2);
    CHECK(once.dim(1, 2) == 0);
    CHECK(once.dim(2, 2) == 0);

    GrWTable g2k3 = gr_w_cohomology(curve_minus_points(2, 3));
    CHECK(g2k3.dim(1, 1) == 4);
    CHECK(g2k3.dim(1, 2) == 2);

    for (int g = 0; g <= 3; ++g)
        for (int k = 0; k <= 4; ++k) {
            GrWTable t = gr_w_cohomology(curve_minus_points(g, k));
            CHECK(total_h(t, 1) == 2 * g + std::max(k - 1, 0));
            CHECK(t.euler_input == 2 - 2 * g - k);
        }
}

TEST_CASE("full-rank square differential kills both ends") {
    LogPairDatum d;
    d.levels.resize(2);
    d.levels[0].push_back({"X", {0, 0, 1}});
    d.levels[1].push_back({"D", {1}});
    Incidence inc;
    inc.from_level = 1;
    inc.from_index = 0;
    inc.to_index = 0;
    inc.k = 1;
    inc.gysin[0] = ones(1, 1);
    d.incidences.push_back(inc);
    auto table = cohomology(build_pair_complex(d));
    for (const CohomologyEntry& e : table) CHECK(e.dim == 0);
    CHECK(gr_w_cohomology(d).entries.empty());
}

TEST_CASE("two boundary levels with crossing") {
    GrWTable t = gr_w_cohomology(plane_two_lines());
    CHECK(t.dim(0, 0) == 1);
    CHECK(t.dim(1, 2) == 1);
    int total = 0;
    for (const GrWEntry& e : t.entries) total += e.dim;
    CHECK(total == 2);
    CHECK(t.euler_output == 0);
}

TEST_CASE("flipping the sign of odd-level differentials changes nothing") {
    for (LogPairDatum d : {plane_two_lines(), curve_minus_points(2, 3)}) {
        GrWTable before = gr_w_cohomology(d);
        for (Incidence& inc : d.incidences)
            if (inc.from_level % 2 == 1)
                for (auto& [m, mat] : inc.gysin)
                    for (auto& row : mat)
                        for (Rat& v : row) v = -v;
        GrWTable after = gr_w_cohomology(d);
        REQUIRE(before.entries.size() == after.entries.size());
        for (std::size_t i = 0; i < before.entries.size(); ++i) {
            CHECK(before.entries[i].degree == after.entries[i].degree);
            CHECK(before.entries[i].weight == after.entries[i].weight);
            CHECK(before.entries[i].dim == after.entries[i].dim);
        }
    }
}

TEST_CASE("d squared nonzero is rejected with its position") {
    LogPairDatum d = plane_two_lines();
    // Break one of the signs: both level-2 incidences get k = 1.
    d.incidences[2].k = 1;
    CHECK_THROWS_WITH_AS(build_pair_complex(d),
                         doctest::Contains("d*d != 0"), validation_error);
}

TEST_CASE("shape validation") {
    LogPairDatum d = curve_minus_points(1, 1);
    d.incidences[0].gysin[0] = ones(2, 1);  // H^2(C) is 1-dimensional
    CHECK_THROWS_WITH_AS(build_pair_complex(d), doctest::Contains("gysin"), validation_error);

    LogPairDatum empty;
    CHECK_THROWS_AS(build_pair_complex(empty), validation_error);

    LogPairDatum bad_level = curve_minus_points(1, 1);
    bad_level.incidences[0].from_level = 2;
    CHECK_THROWS_AS(build_pair_complex(bad_level), validation_error);

    LogPairDatum bad_k = curve_minus_points(1, 1);
    bad_k.incidences[0].k = 2;
    CHECK_THROWS_AS(build_pair_complex(bad_k), validation_error);
}

TEST_CASE("constant simplicial object reproduces the single pair") {
    // The alternating sum of p+1 identity faces is 0 for p odd and the
    // identity for p even, so the simplicial direction is exact except at the
    // ends: an even truncation reproduces the pair on the nose, an odd one
    // adds a copy of the answer shifted up by the truncation level.
    auto filtered = [](const GrWTable& t, int below) {
        std::vector<GrWEntry> out;
        for (const GrWEntry& e : t.entries)
            if (e.degree < below) out.push_back(e);
        return out;
    };
    for (LogPairDatum d : {curve_minus_points(0, 2), curve_minus_points(1, 2), plane_two_lines()}) {
        GrWTable single = gr_w_cohomology(d);
        for (int top : {0, 2, 4}) {
            GrWTable total = gr_w_cohomology(constant_simplicial(d, top));
            REQUIRE(total.entries.size() == single.entries.size());
            for (std::size_t i = 0; i < single.entries.size(); ++i) {
                CHECK(total.entries[i].degree == single.entries[i].degree);
                CHECK(total.entries[i].weight == single.entries[i].weight);
                CHECK(total.entries[i].dim == single.entries[i].dim);
            }
        }
        for (int top : {1, 3}) {
            GrWTable total = gr_w_cohomology(constant_simplicial(d, top));
            auto lhs = filtered(total, top);
            auto rhs = filtered(single, top);
            REQUIRE(lhs.size() == rhs.size());
            for (std::size_t i = 0; i < lhs.size(); ++i) {
                CHECK(lhs[i].degree == rhs[i].degree);
                CHECK(lhs[i].weight == rhs[i].weight);
                CHECK(lhs[i].dim == rhs[i].dim);
            }
        }
    }
}

TEST_CASE("random one-level data: totals, euler, sign invariance") {
    std::mt19937 rng(443291);
    std::uniform_int_distribution<int> small(0, 3), entry(-3, 3), strata(1, 3);
    for (int it = 0; it < 40; ++it) {
        LogPairDatum d;
        d.levels.resize(2);
        int ambient_b2 = small(rng) + 1;
        d.levels[0].push_back({"X", {1, small(rng), ambient_b2}});
        int n_strata = strata(rng);
        for (int s = 0; s < n_strata; ++s) {
            int b0 = small(rng) + 1;
            d.levels[1].push_back({"D" + std::to_string(s), {b0}});
            Incidence inc;
            inc.from_level = 1;
            inc.from_index = s;
            inc.to_index = 0;
            inc.k = 1;
            RatMatrix g(ambient_b2, std::vector<Rat>(b0));
            for (auto& row : g)
                for (Rat& v : row) v = entry(rng);
            inc.gysin[0] = std::move(g);
            d.incidences.push_back(std::move(inc));
        }
        GrWTable t = gr_w_cohomology(d);  // euler conservation asserted inside
        long long euler = 0;
        for (int m = 0; m < 3; ++m)
            euler += (m % 2 ? -1 : 1) * d.levels[0][0].betti[m];
        for (const auto& s : d.levels[1]) euler -= s.betti[0];
        CHECK(t.euler_output == euler);

        // dims are unchanged when every boundary matrix is negated
        LogPairDatum flipped = d;
        for (Incidence& inc : flipped.incidences)
            for (auto& [m, mat] : inc.gysin)
                for (auto& row : mat)
                    for (Rat& v : row) v = -v;
        GrWTable t2 = gr_w_cohomology(flipped);
        REQUIRE(t.entries.size() == t2.entries.size());
        for (std::size_t i = 0; i < t.entries.size(); ++i) CHECK(t.entries[i].dim == t2.entries[i].dim);
    }
}

TEST_CASE("builder output matches the hand-built datum") {
    LogPairDatum gm = curve_minus_points(0, 2);
    REQUIRE(gm.levels.size() == 2);
    CHECK(gm.levels[0][0].betti == std::vector<int>{1, 0, 1});
    REQUIRE(gm.levels[1].size() == 2);
    CHECK(gm.incidences.size() == 2);
    CHECK(gm.incidences[0].gysin.at(0) == ones(1, 1));
    CHECK_THROWS_AS(curve_minus_points(-1, 0), validation_error);
    CHECK_THROWS_AS(curve_minus_points(0, -1), validation_error);
}
