#include "fitland/errors.hpp"
#include "fitland/io.hpp"
#include "fitland/problems/graph.hpp"
#include "fitland/problems/sum_of_terms.hpp"
#include "fitland/problems/tsp.hpp"
#include "fitland/properties.hpp"
#include "fitland/synth.hpp"

#include <doctest.h>

#include <sstream>

#include "helpers.hpp"

using namespace fitland;
using fitland::testing::hist_of;

TEST_CASE("histogram JSON round trip preserves grid and counts byte-for-byte") {
    const std::vector<FitnessHistogram> cases = {
        build_histogram(SumOfTermsProblem(3, 4)),
        build_histogram(make_toy_fig3()),
        tsp_census(make_tsp(3, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}})),
    };
    for (const FitnessHistogram& hist : cases) {
        const auto dumped = histogram_to_json(hist).dump();
        const LoadedLandscape loaded = landscape_from_json(nlohmann::json::parse(dumped));
        CHECK(loaded.hist == hist);
        CHECK(!loaded.agg.has_value());
        CHECK(histogram_to_json(loaded.hist).dump() == dumped);
    }
}

TEST_CASE("aggregate JSON round trip covers rational-valued landscapes") {
    SynthSpec spec;
    spec.levels = 6;
    spec.seed = 17;
    const AggregateLandscape synth = generate_landscape(spec);
    const auto dumped = aggregate_to_json(synth).dump();
    const LoadedLandscape loaded = landscape_from_json(nlohmann::json::parse(dumped));
    REQUIRE(loaded.agg.has_value());
    CHECK(aggregate_to_json(*loaded.agg).dump() == dumped);
    CHECK(verify_theorem1(*loaded.agg).verdict == Verdict::holds);

    const AggregateLandscape toy = build_aggregate(make_toy_fig3());
    const auto toy_dump = aggregate_to_json(toy).dump();
    const LoadedLandscape toy_loaded = landscape_from_json(nlohmann::json::parse(toy_dump));
    REQUIRE(toy_loaded.agg.has_value());
    CHECK(toy_loaded.agg->integer_realizable());
    CHECK(pn_plus(*toy_loaded.agg, 3) == Rational(2, 15));
}

TEST_CASE("malformed landscape JSON is rejected") {
    CHECK_THROWS_AS(landscape_from_json(nlohmann::json::parse(R"({"sense":"max"})")), ParseError);
    CHECK_THROWS_AS(landscape_from_json(nlohmann::json::parse(
                        R"({"sense":"max","levels":[1,2],"counts":[1]})")),
                    ParseError);
    CHECK_THROWS_AS(landscape_from_json(nlohmann::json::parse(
                        R"({"sense":"max","levels":[1,3],"counts":[1,"1/0"]})")),
                    ParseError);
    CHECK_THROWS_AS(landscape_from_json(nlohmann::json::parse(
                        R"({"sense":"max","levels":[1,2,4],"counts":[1,1,1]})")),
                    ParseError);
    CHECK_THROWS_AS(landscape_from_json(nlohmann::json::parse(
                        R"({"sense":"max","levels":[1,2],"counts":[1,0]})")),
                    InvalidLandscape); // empty end level: grid not tight
    CHECK_THROWS_AS(landscape_from_json(nlohmann::json::parse(
                        R"({"sense":"min","levels":[1,2],"counts":[1,1]})")),
                    ParseError); // min-sense levels must descend
}

TEST_CASE("histogram CSV is ordered best-first with exact counts") {
    const FitnessHistogram fig3 = hist_of({{1, 6}, {2, 10}, {3, 4}, {4, 2}});
    const std::string csv = histogram_csv(fig3);
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "fitness,count,proportion,cum_better");
    REQUIRE(std::getline(lines, line));
    CHECK(line.substr(0, 4) == "4,2,");
    CHECK(line.substr(line.rfind(',') + 1) == "0"); // nothing above the optimum
    REQUIRE(std::getline(lines, line));
    CHECK(line.substr(0, 4) == "3,4,");
    REQUIRE(std::getline(lines, line));
    CHECK(line.substr(0, 5) == "2,10,");
    REQUIRE(std::getline(lines, line));
    CHECK(line.substr(0, 4) == "1,6,");
    CHECK(!std::getline(lines, line));

    // Deterministic output.
    CHECK(histogram_csv(fig3) == csv);
}

TEST_CASE("minimize-sense CSV reports original units, best first") {
    const FitnessHistogram census = tsp_census(make_tsp(3, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}));
    const std::string csv = histogram_csv(census);
    std::istringstream lines(csv);
    std::string header, first;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, first));
    CHECK(first.substr(0, 2) == "5,"); // the single route length is 1+2+2
}

TEST_CASE("census summary carries min, max, mode, v_ge and the good-enough share") {
    const nlohmann::ordered_json summary =
        census_summary(build_histogram(SumOfTermsProblem(5, 5)), "sumterms:k=5,m=5");
    CHECK(summary.at("size") == "3125");
    CHECK(summary.at("min") == "5");
    CHECK(summary.at("max") == "25");
    CHECK(summary.at("mode") == "15");
    CHECK(summary.at("v_ge") == "20");
    CHECK(summary.at("proportion_good_enough") == "247/3125");

    const nlohmann::ordered_json tsp_summary =
        census_summary(tsp_census(make_tsp(3, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}})), "tsp");
    CHECK(tsp_summary.at("min") == "5");
    CHECK(tsp_summary.at("max") == "5");
    CHECK(tsp_summary.at("sense") == "min");
}

TEST_CASE("property reports serialize with verdicts, witnesses and original units") {
    const AggregateLandscape toy = build_aggregate(make_toy_fig3());
    const nlohmann::ordered_json ok = report_to_json(verify_theorem1(toy), toy.grid());
    CHECK(ok.at("property") == "theorem1");
    CHECK(ok.at("verdict") == "holds");
    CHECK(ok.at("witness").is_null());
    CHECK(ok.at("v_ge") == "3/1");
    CHECK(ok.at("details").at("decomposition_exact") == "holds");

    const FitnessHistogram bad = hist_of({{1, 3}, {2, 9}, {3, 2}, {4, 5}});
    const nlohmann::ordered_json failing =
        report_to_json(check_cardinality_monotonic(bad, false), bad.grid());
    CHECK(failing.at("verdict") == "fails");
    CHECK(failing.at("witness").at("v_level") == 3);
    CHECK(failing.at("witness").at("lhs") == "2/1");
    CHECK(failing.at("witness").at("rhs") == "5/1");

    const std::string table =
        report_table({verify_theorem1(toy), check_cardinality_monotonic(bad, false)},
                     toy.grid());
    CHECK(table.find("theorem1") != std::string::npos);
    CHECK(table.find("holds") != std::string::npos);
    CHECK(table.find("fails") != std::string::npos);
}
