#include "fitland/errors.hpp"
#include "fitland/io.hpp"
#include "fitland/problems/graph.hpp"
#include "fitland/problems/sum_of_terms.hpp"
#include "fitland/rng.hpp"
#include "fitland/stats.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace fitland;
using fitland::testing::enumerate_counts;
using fitland::testing::hist_of;
using fitland::testing::make_path;

namespace {

Integer binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    Integer out(1);
    for (int i = 0; i < k; ++i) {
        out = out * (n - i) / (i + 1);
    }
    return out;
}

/// Independent oracle for the number of k-tuples in 1..m summing to s
/// (inclusion-exclusion over the upper bounds).
Integer tuples_with_sum(int k, int m, int s) {
    Integer out(0);
    const int t = s - k; // digits in 0..m-1 summing to t
    for (int j = 0; j * m <= t; ++j) {
        const Integer term = binomial(k, j) * binomial(t - j * m + k - 1, k - 1);
        out += (j % 2 == 0) ? term : -term;
    }
    return out;
}

} // namespace

TEST_CASE("grid maps levels to original units and back, both senses") {
    const FitnessGrid max_grid = make_grid(Sense::maximize, 5, 25);
    CHECK(max_grid.original(5) == 5);
    CHECK(max_grid.original(25) == 25);
    CHECK(max_grid.level_of(Rational(17)) == 17);

    // Minimize-sense: increasing level = decreasing original value.
    const FitnessGrid min_grid = make_grid(Sense::minimize, -140, -102);
    CHECK(min_grid.original(-102) == 102);
    CHECK(min_grid.original(-140) == 140);
    CHECK(min_grid.original(-110) == 110);
    CHECK(min_grid.level_of(Rational(102)) == -102);
    for (Level v = min_grid.v_min; v <= min_grid.v_max; ++v) {
        CHECK(min_grid.level_of(min_grid.original(v)) == v);
    }

    const FitnessGrid binned = make_grid(Sense::maximize, 0, 4, Rational(1, 2), Rational(1, 4));
    for (Level v = 0; v <= 4; ++v) {
        CHECK(binned.level_of(binned.original(v)) == v);
    }
    CHECK_THROWS_AS(make_grid(Sense::maximize, 3, 2), InvalidLandscape);
    CHECK_THROWS_AS(make_grid(Sense::maximize, 0, 1, 0, 0), InvalidLandscape);
}

TEST_CASE("histogram invariants are enforced") {
    CHECK_THROWS_AS(FitnessHistogram(make_grid(Sense::maximize, 0, 1),
                                     {Rational(1), Rational(0)}),
                    InvalidLandscape); // grid not tight
    CHECK_THROWS_AS(FitnessHistogram(make_grid(Sense::maximize, 0, 1),
                                     {Rational(1), Rational(-1)}),
                    InvalidLandscape);
    const FitnessHistogram h = hist_of({{1, 6}, {2, 10}, {3, 4}, {4, 2}});
    CHECK(h.total() == 22);
    CHECK(h.count(2) == 10);
    CHECK(h.count_or_zero(7) == 0);
    CHECK_THROWS_AS(h.count(5), OutOfRangeLevel);
}

TEST_CASE("sum-of-terms census: extremes, centre count, derived oracles") {
    const SumOfTermsProblem problem(5, 5);
    const FitnessHistogram hist = build_histogram(problem);
    CHECK(hist.total() == 3125);
    CHECK(hist.v_min() == 5);
    CHECK(hist.v_max() == 25);
    CHECK(hist.count(5) == 1);
    CHECK(hist.count(25) == 1);

    // Enumeration oracle agrees level-by-level.
    const auto oracle = enumerate_counts(problem);
    for (Level v = 5; v <= 25; ++v) {
        CHECK(hist.count(v) == Rational(oracle.at(v)));
    }

    // Independent inclusion-exclusion oracle for the centre count.
    CHECK(tuples_with_sum(5, 5, 15) == 381);
    CHECK(hist.count(15) == 381);
}

TEST_CASE("global proportions: exact shares and edge levels") {
    const FitnessHistogram fig3 = hist_of({{1, 6}, {2, 10}, {3, 4}, {4, 2}});
    const auto at3 = global_proportions(fig3, 3);
    CHECK(at3.p == Rational(4, 22));
    CHECK(at3.p_plus == Rational(2, 22));
    CHECK(global_proportions(fig3, 4).p_plus == 0);
    CHECK_THROWS_AS(global_proportions(fig3, 9), OutOfRangeLevel);

    const FitnessHistogram sums = build_histogram(SumOfTermsProblem(5, 5));
    // Oracle: direct count of 5-tuples with sum > 20.
    Integer above(0);
    for (int s = 21; s <= 25; ++s) {
        above += tuples_with_sum(5, 5, s);
    }
    CHECK(above == 126);
    CHECK(p_plus(sums, 20) == Rational(126, 3125));
}

TEST_CASE("aggregate of the toy landscape matches its frozen statistics") {
    const GraphProblem toy = make_toy_fig3();
    const AggregateLandscape agg = build_aggregate(toy);
    CHECK(agg.nf_size(3) == 15);
    Rational above(0);
    for (Level w = 4; w <= agg.v_max(); ++w) {
        above += agg.nf(3, w);
    }
    CHECK(above == 2);
    CHECK(pn_plus(agg, 3) == Rational(2, 15));
    CHECK(agg.integer_realizable());
}

TEST_CASE("complete neighbourhood union is the whole space minus singletons") {
    SUBCASE("all counts at least two") {
        const GraphProblem complete = make_complete_neighbourhood(
            Sense::maximize,
            [] {
                std::vector<Rational> v;
                for (int i = 0; i < 6; ++i) v.emplace_back(1);
                for (int i = 0; i < 10; ++i) v.emplace_back(2);
                for (int i = 0; i < 4; ++i) v.emplace_back(3);
                for (int i = 0; i < 2; ++i) v.emplace_back(4);
                return v;
            }());
        const AggregateLandscape agg = build_aggregate(complete);
        for (Level v = 1; v <= 4; ++v) {
            for (Level w = 1; w <= 4; ++w) {
                CHECK(agg.nf(v, w) == agg.hist().count(w));
            }
            CHECK(pn_plus(agg, v) == p_plus(agg.hist(), v));
        }
    }
    SUBCASE("a singleton level excludes itself") {
        const GraphProblem complete = make_complete_neighbourhood(
            Sense::maximize, {Rational(1), Rational(2), Rational(2), Rational(3)});
        const AggregateLandscape agg = build_aggregate(complete);
        CHECK(agg.nf(1, 1) == 0); // count(1) == 1: the only member is excluded
        CHECK(agg.nf(1, 2) == 2);
        CHECK(agg.nf(1, 3) == 1);
        CHECK(agg.nf(2, 2) == 2); // two members cover each other
        CHECK(agg.nf(3, 3) == 0);
    }
}

TEST_CASE("three-solution path: aggregate row and delta profile by hand") {
    const GraphProblem path = make_path({Rational(1), Rational(2), Rational(3)});
    const AggregateLandscape agg = build_aggregate(path);
    CHECK(agg.nf(2, 1) == 1);
    CHECK(agg.nf(2, 3) == 1);
    CHECK(agg.nf_size(2) == 2);

    const DeltaProfile profile = delta_profile(agg, 2, 2);
    REQUIRE(profile.delta_cap == 1);
    CHECK(profile.at(profile.ctn, 1) == 2);
    CHECK(profile.at(profile.ctn_plus, 1) == 1);
    CHECK(profile.at(profile.pn, 1) == 1);
    CHECK(profile.at(profile.p, 1) == Rational(2, 3));
    CHECK(*profile.pn_plus[0] == Rational(1, 2));
    CHECK(*profile.p_plus[0] == Rational(1, 2));
}

TEST_CASE("delta profile: undefined shares and concentrated rows") {
    // Level 4 unoccupied in the middle is not allowed at the ends, so use a
    // histogram with an interior gap.
    const FitnessHistogram gappy = hist_of({{0, 3}, {1, 2}, {3, 1}});
    CHECK(gappy.count(2) == 0);
    // nf rows: level 0 mass on level 1, level 1 mass on level 0, level 3 on
    // level 1 (distance 2).
    std::vector<std::vector<Rational>> nf(4, std::vector<Rational>(4, Rational(0)));
    nf[0][1] = 1;
    nf[1][0] = 1;
    nf[3][1] = 1;
    const AggregateLandscape agg(gappy, nf, false);

    const DeltaProfile at3 = delta_profile(agg, 3, 1);
    REQUIRE(at3.delta_cap == 2);
    CHECK(!at3.p_plus[0].has_value()); // no solutions at 4 or 2
    CHECK(at3.p[0] == 0);
    CHECK(*at3.p_plus[1] == 0); // level 5 off-grid, level 1 occupied
    CHECK(!at3.pn_plus[0].has_value());
    CHECK(*at3.pn_plus[1] == 0);

    // A row concentrated at its own level has zero mass at every delta.
    std::vector<std::vector<Rational>> self(4, std::vector<Rational>(4, Rational(0)));
    self[0][0] = 2;
    self[1][1] = 1;
    self[3][3] = 1;
    const AggregateLandscape concentrated(gappy, self, false);
    const DeltaProfile profile = delta_profile(concentrated, 0, 1);
    for (Level d = 1; d <= profile.delta_cap; ++d) {
        CHECK(profile.at(profile.pn, d) == 0);
        CHECK(profile.at(profile.ctn_plus, d) == 0);
    }
    CHECK(pn_plus(concentrated, 0) == 0);

    CHECK_THROWS_AS(delta_profile(agg, 2, 1), EmptyLevel);
    CHECK_THROWS_AS(pn_plus(agg, 2), EmptyLevel);
}

TEST_CASE("decomposition identity: p_plus(v) telescopes over deltas") {
    // Holds for every histogram and level; terms with undefined better-side
    // share carry zero weight.
    Rng rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        std::map<Level, Rational> counts;
        const Level span = 2 + static_cast<Level>(rng.below(8));
        for (Level v = 0; v <= span; ++v) {
            if (v == 0 || v == span || rng.below(4) != 0) {
                counts[v] = Rational(1 + rng.below(30));
            }
        }
        const FitnessHistogram hist = FitnessHistogram::from_level_counts(Sense::maximize, counts);
        for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
            const Level max_delta = std::max(v - hist.v_min(), hist.v_max() - v);
            Rational sum(0);
            for (Level d = 1; d <= max_delta; ++d) {
                const auto share = p_plus_delta(hist, v, d);
                if (share) {
                    sum += p_delta(hist, v, d) * *share;
                }
            }
            CHECK(sum == p_plus(hist, v));
        }
    }
}

TEST_CASE("set semantics: nf entries never exceed level counts") {
    const auto check_bounded = [](const AggregateLandscape& agg) {
        for (Level v = agg.v_min(); v <= agg.v_max(); ++v) {
            for (Level w = agg.v_min(); w <= agg.v_max(); ++w) {
                CHECK(agg.nf(v, w) <= agg.hist().count(w));
            }
        }
    };
    check_bounded(build_aggregate(make_toy_fig3()));
    check_bounded(build_aggregate(SumOfTermsProblem(3, 3)));
}

TEST_CASE("enumeration is worker-count independent") {
    const SumOfTermsProblem sums(5, 5);
    EnumerationOptions serial;
    serial.workers = 1;
    EnumerationOptions parallel;
    parallel.workers = 4;
    CHECK(build_histogram(sums, {}, serial) == build_histogram(sums, {}, parallel));

    const GraphProblem toy = make_toy_fig3();
    const auto a = aggregate_to_json(build_aggregate(toy, serial)).dump();
    const auto b = aggregate_to_json(build_aggregate(toy, parallel)).dump();
    CHECK(a == b);
}

TEST_CASE("budget and binning guards") {
    const GraphProblem toy = make_toy_fig3();
    EnumerationOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(build_histogram(toy, {}, tiny), BudgetExceeded);
    CHECK_THROWS_AS(build_aggregate(toy, tiny), BudgetExceeded);

    // Non-integral fitness requires a binning spec.
    const GraphProblem halves = make_path({Rational(1, 2), Rational(3, 2), Rational(5, 2)});
    CHECK_THROWS_AS(build_histogram(halves), Unbinnable);
    const FitnessHistogram binned =
        build_histogram(halves, BinningSpec{Rational(1), Rational(0)});
    CHECK(binned.total() == 3);
    CHECK(binned.v_min() == 0);
    CHECK(binned.v_max() == 2);
    CHECK(binned.grid().original(0) == 0); // bin lower edge
    CHECK(binned.count(1) == 1);

    // Minimize-sense binning reflects onto the canonical axis.
    const GraphProblem costs =
        make_path({Rational(5, 2), Rational(3, 2), Rational(1, 2)}, Sense::minimize);
    const FitnessHistogram min_binned =
        build_histogram(costs, BinningSpec{Rational(1), Rational(0)});
    CHECK(min_binned.v_max() == 0);  // best bin: values in [0,1)
    CHECK(min_binned.v_min() == -2); // worst bin: values in [2,3)
    CHECK(min_binned.grid().original(-2) == 2);
}

TEST_CASE("minimize-sense histogram uses reflected levels, original units preserved") {
    const GraphProblem costs = make_path({Rational(7), Rational(5), Rational(9)}, Sense::minimize);
    const FitnessHistogram hist = build_histogram(costs);
    CHECK(hist.v_max() == -5);
    CHECK(hist.v_min() == -9);
    CHECK(hist.grid().original(hist.v_max()) == 5);
    CHECK(hist.count(-7) == 1);
    CHECK(hist.count(-6) == 0);
    CHECK(p_plus(hist, -7) == Rational(1, 3)); // strictly better = cheaper
}
