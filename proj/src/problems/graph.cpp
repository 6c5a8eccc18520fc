#include "fitland/problems/graph.hpp"

#include "fitland/errors.hpp"

#include <algorithm>

namespace fitland {

GraphProblem::GraphProblem(Sense sense, std::vector<Rational> fitness_values,
                           std::vector<std::vector<SolutionId>> adjacency)
    : sense_(sense), values_(std::move(fitness_values)), adjacency_(std::move(adjacency)) {
    if (values_.empty() || adjacency_.size() != values_.size()) {
        throw InvalidLandscape("graph problem needs one neighbour list per solution");
    }
    for (SolutionId s = 0; s < adjacency_.size(); ++s) {
        auto& list = adjacency_[s];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (const SolutionId n : list) {
            if (n >= values_.size()) {
                throw InvalidLandscape("neighbour id out of range");
            }
            if (n == s) {
                throw InvalidLandscape("solution listed as its own neighbour");
            }
        }
    }
}

GraphProblem GraphProblem::from_edges(
    Sense sense, std::vector<Rational> fitness_values,
    const std::vector<std::pair<SolutionId, SolutionId>>& edges) {
    std::vector<std::vector<SolutionId>> adjacency(fitness_values.size());
    for (const auto& [a, b] : edges) {
        if (a >= fitness_values.size() || b >= fitness_values.size()) {
            throw InvalidLandscape("edge endpoint out of range");
        }
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    return GraphProblem(sense, std::move(fitness_values), std::move(adjacency));
}

GraphProblem make_complete_neighbourhood(Sense sense, std::vector<Rational> fitness_values) {
    const SolutionId n = fitness_values.size();
    std::vector<std::vector<SolutionId>> adjacency(n);
    for (SolutionId s = 0; s < n; ++s) {
        adjacency[s].reserve(n - 1);
        for (SolutionId t = 0; t < n; ++t) {
            if (t != s) {
                adjacency[s].push_back(t);
            }
        }
    }
    return GraphProblem(sense, std::move(fitness_values), std::move(adjacency));
}

GraphProblem make_toy_fig3() {
    // Solutions 0-5 have fitness 1, 6-15 fitness 2, 16-19 fitness 3,
    // 20-21 fitness 4.
    std::vector<Rational> values;
    values.reserve(22);
    for (int i = 0; i < 6; ++i) {
        values.emplace_back(1);
    }
    for (int i = 0; i < 10; ++i) {
        values.emplace_back(2);
    }
    for (int i = 0; i < 4; ++i) {
        values.emplace_back(3);
    }
    for (int i = 0; i < 2; ++i) {
        values.emplace_back(4);
    }
    const std::vector<std::pair<SolutionId, SolutionId>> edges = {
        // fitness 1 <-> fitness 2
        {0, 6},
        {1, 7},
        {2, 8},
        {3, 9},
        {4, 10},
        {5, 11},
        // fitness 2 <-> fitness 3
        {6, 16},
        {7, 16},
        {8, 16},
        {9, 17},
        {10, 17},
        {11, 17},
        {12, 18},
        {13, 18},
        {14, 18},
        {15, 19},
        // fitness 3 <-> fitness 3
        {16, 17},
        {17, 18},
        // fitness 3 <-> fitness 4
        {16, 20},
        {17, 21},
    };
    return GraphProblem::from_edges(Sense::maximize, std::move(values), edges);
}

} // namespace fitland
