#include "fitland/errors.hpp"
#include "fitland/io.hpp"
#include "fitland/properties.hpp"
#include "fitland/synth.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace fitland;
using fitland::testing::hist_of;

TEST_CASE("generated histograms are strictly cardinality-monotonic and occupied") {
    for (int i = 0; i < 200; ++i) {
        SynthSpec spec;
        spec.levels = 3 + (i % 8);
        spec.mode_pos = (i % 4 == 1 && spec.levels >= 5) ? 1 + (i % 2) : 0;
        spec.seed = static_cast<std::uint64_t>(i) * 977 + 13;
        const FitnessHistogram hist = generate_cm_histogram(spec);
        CHECK(hist.grid().size() == spec.levels);
        CHECK(modal_fitness(hist) == spec.mode_pos);
        CHECK(check_cardinality_monotonic(hist, true).verdict == Verdict::holds);
        for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
            CHECK(hist.count(v) > 0);
        }
    }
}

TEST_CASE("positive controls satisfy all premises and the conclusion") {
    int accepted = 0;
    for (int i = 0; accepted < 100 && i < 1000; ++i) {
        SynthSpec spec;
        spec.levels = 4 + (i % 7);
        spec.profile =
            (i % 2 == 0) ? GapProfileKind::geometric_crossover : GapProfileKind::strictly_positive;
        spec.seed = static_cast<std::uint64_t>(i) * 31 + 1;
        const FitnessHistogram hist = generate_cm_histogram(spec);
        AggregateLandscape agg = [&]() -> AggregateLandscape {
            try {
                return generate_nsf_unskewed(hist, spec);
            } catch (const InfeasibleProfile&) {
                return uniform_neighbourhood(hist); // sentinel, skipped below
            }
        }();
        if (check_nsf(agg).verdict != Verdict::holds) {
            continue; // infeasible draw
        }
        ++accepted;
        CHECK(check_unskewed(agg, Rational(0)).verdict == Verdict::holds);
        const PropertyReport report = verify_theorem1(agg);
        CHECK(report.verdict == Verdict::holds);
        CHECK(report.details.at("decomposition_exact") == "holds");

        // Row bookkeeping: masses land only on occupied levels and sum to
        // the recorded union size.
        for (Level v = agg.v_min(); v <= agg.v_max(); ++v) {
            Rational sum(0);
            for (Level w = agg.v_min(); w <= agg.v_max(); ++w) {
                sum += agg.nf(v, w);
            }
            CHECK(sum == agg.nf_size(v));
        }
    }
    CHECK(accepted == 100);
}

TEST_CASE("generator preconditions are enforced") {
    SynthSpec spec;
    const FitnessHistogram non_cm = hist_of({{0, 5}, {1, 1}, {2, 3}});
    CHECK_THROWS_AS(generate_nsf_unskewed(non_cm, spec), InvalidLandscape);
    const FitnessHistogram gappy = hist_of({{0, 5}, {2, 3}});
    CHECK_THROWS_AS(generate_nsf_unskewed(gappy, spec), InvalidLandscape);
}

TEST_CASE("break-nsf controls fail exactly the NSF premise") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SynthSpec spec;
        spec.levels = 5;
        spec.seed = seed;
        spec.violation = Violation::break_nsf;
        const AggregateLandscape agg = generate_landscape(spec);
        const PropertyReport nsf = check_nsf(agg);
        CHECK(nsf.verdict == Verdict::fails);
        REQUIRE(nsf.witness.has_value());
        CHECK(nsf.witness->clause.starts_with("b:"));
        CHECK(check_unskewed(agg, Rational(0)).verdict == Verdict::holds);
        CHECK(check_cardinality_monotonic(agg.hist(), true).verdict == Verdict::holds);
        CHECK(verify_theorem1(agg).verdict == Verdict::not_applicable);
    }
}

TEST_CASE("break-unskewed controls fail exactly the unskewed premise") {
    int produced = 0;
    for (std::uint64_t seed = 1; produced < 10 && seed <= 200; ++seed) {
        SynthSpec spec;
        spec.levels = 6;
        spec.seed = seed;
        spec.violation = Violation::break_unskewed;
        try {
            const AggregateLandscape agg = generate_landscape(spec);
            ++produced;
            CHECK(check_unskewed(agg, Rational(0)).verdict == Verdict::fails);
            CHECK(check_cardinality_monotonic(agg.hist(), true).verdict == Verdict::holds);
            CHECK(verify_theorem1(agg).verdict == Verdict::not_applicable);
        } catch (const InfeasibleProfile&) {
            continue;
        }
    }
    CHECK(produced == 10);
}

TEST_CASE("pinned break-cm landscape: premises minus CM, conclusion fails") {
    // Dip just below the optimum with a large rebound; the gap profile is a
    // valid NSF profile (positive head, negative tail, nonnegative total).
    const FitnessHistogram hist =
        hist_of({{0, 100}, {1, 80}, {2, 20}, {3, 1}, {4, 90}});
    REQUIRE(modal_fitness(hist) == 0);
    REQUIRE(good_enough(hist) == 2);
    const std::vector<Rational> gap = {Rational(1, 10), Rational(-99, 1000)};
    const AggregateLandscape agg = aggregate_from_gap_profile(hist, gap);

    CHECK(check_cardinality_monotonic(hist, true).verdict == Verdict::fails);
    CHECK(check_nsf(agg).verdict == Verdict::holds);
    CHECK(check_unskewed(agg, Rational(0)).verdict == Verdict::holds);

    const PropertyReport report = verify_theorem1(agg);
    CHECK(report.verdict == Verdict::not_applicable);
    CHECK(report.details.at("conclusion_from_v_ge") == "fails");

    // The failure sits at v = 2: most neighbour mass lies at distance 2,
    // where the dip makes the better side thin.
    CHECK(check_effective_at(agg, 2).verdict == Verdict::fails);
    CHECK(check_effective_at(agg, 3).verdict == Verdict::holds);
}

TEST_CASE("break-cm suite produces conclusion failures") {
    const TheoremSuite suite = run_theorem_suite(30, 90210, Violation::break_cm);
    CHECK(suite.accepted == 30);
    CHECK(suite.premise_failures == 30);
    CHECK(suite.conclusion_failures >= 1);
    CHECK(suite.counterexamples == 0); // premises fail, so never a counterexample
}

TEST_CASE("uniform neighbourhood: equality everywhere, NSF and theorem not applicable") {
    const FitnessHistogram fig3 = hist_of({{1, 6}, {2, 10}, {3, 4}, {4, 2}});
    const AggregateLandscape agg = uniform_neighbourhood(fig3);
    for (Level v = 1; v <= 4; ++v) {
        CHECK(pn_plus(agg, v) == p_plus(fig3, v));
        CHECK(check_effective_at(agg, v).verdict == Verdict::fails);
    }
    const PropertyReport nsf = check_nsf(agg);
    CHECK(nsf.verdict == Verdict::fails);
    REQUIRE(nsf.witness.has_value());
    CHECK(nsf.witness->clause.starts_with("b:"));
    const PropertyReport theorem = verify_theorem1(agg);
    CHECK(theorem.verdict == Verdict::not_applicable);
    CHECK(theorem.details.at("conclusion_from_v_ge") == "fails");
}

TEST_CASE("synthesis is bit-for-bit deterministic under spec and seed") {
    SynthSpec spec;
    spec.levels = 7;
    spec.seed = 424242;
    const std::string a = aggregate_to_json(generate_landscape(spec)).dump();
    const std::string b = aggregate_to_json(generate_landscape(spec)).dump();
    CHECK(a == b);
    SynthSpec other = spec;
    other.seed = 424243;
    CHECK(aggregate_to_json(generate_landscape(other)).dump() != a);
}

TEST_CASE("suite runner: positive controls are counterexample-free") {
    const TheoremSuite suite = run_theorem_suite(100, 5150, Violation::none);
    CHECK(suite.requested == 100);
    CHECK(suite.accepted == 100);
    CHECK(suite.premise_failures == 0);
    CHECK(suite.conclusion_failures == 0);
    CHECK(suite.counterexamples == 0);
    for (const auto& item : suite.cases) {
        CHECK(item.report.verdict == Verdict::holds);
    }
}
