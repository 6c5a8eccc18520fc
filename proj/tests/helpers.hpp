#pragma once

#include "fitland/problems/graph.hpp"
#include "fitland/problems/sum_of_terms.hpp"
#include "fitland/stats.hpp"

#include <doctest.h>

#include <map>
#include <vector>

namespace fitland::testing {

/// Brute-force census oracle: walks every solution and tallies original
/// fitness values directly, independently of build_histogram's grid logic.
inline std::map<long long, long long> enumerate_counts(const ExplicitProblem& problem) {
    std::map<long long, long long> counts;
    const auto size = problem.size().convert_to<std::uint64_t>();
    for (SolutionId s = 0; s < size; ++s) {
        const Rational f = problem.fitness(s);
        REQUIRE(is_integral(f));
        ++counts[numerator(f).convert_to<long long>()];
    }
    return counts;
}

/// Path graph with the given fitness values: i <-> i+1.
inline GraphProblem make_path(std::vector<Rational> values, Sense sense = Sense::maximize) {
    std::vector<std::pair<SolutionId, SolutionId>> edges;
    for (SolutionId i = 0; i + 1 < values.size(); ++i) {
        edges.emplace_back(i, i + 1);
    }
    return GraphProblem::from_edges(sense, std::move(values), edges);
}

/// Histogram straight from per-value counts (values are canonical levels).
inline FitnessHistogram hist_of(const std::map<Level, long long>& counts) {
    std::map<Level, Rational> rationals;
    for (const auto& [level, count] : counts) {
        rationals[level] = Rational(count);
    }
    return FitnessHistogram::from_level_counts(Sense::maximize, rationals);
}

} // namespace fitland::testing
