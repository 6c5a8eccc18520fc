#pragma once

#include "fitland/problem.hpp"

#include <utility>
#include <vector>

namespace fitland {

/// A problem given extensionally: one fitness value and one neighbour list
/// per solution. The workhorse for small hand-built landscapes.
class GraphProblem : public ExplicitProblem {
public:
    GraphProblem(Sense sense, std::vector<Rational> fitness_values,
                 std::vector<std::vector<SolutionId>> adjacency);

    /// Undirected construction: each edge is inserted in both directions.
    static GraphProblem from_edges(Sense sense, std::vector<Rational> fitness_values,
                                   const std::vector<std::pair<SolutionId, SolutionId>>& edges);

    Sense sense() const override { return sense_; }
    Integer size() const override { return Integer(values_.size()); }
    Rational fitness(SolutionId s) const override { return values_[s]; }
    std::vector<SolutionId> neighbours(SolutionId s) const override { return adjacency_[s]; }

private:
    Sense sense_;
    std::vector<Rational> values_;
    std::vector<std::vector<SolutionId>> adjacency_;
};

/// Every solution neighbours every other solution.
GraphProblem make_complete_neighbourhood(Sense sense, std::vector<Rational> fitness_values);

/// Fixed 22-solution landscape with fitness counts {1:6, 2:10, 3:4, 4:2}.
/// The edge set is frozen; it was chosen so that every edge spans at most
/// one fitness level, the level-3 neighbour union has 15 distinct members
/// (exactly two of fitness 4), and at every level the better-side share
/// among one-step neighbours equals the better-side share among one-step
/// solutions in the whole space.
GraphProblem make_toy_fig3();

} // namespace fitland
