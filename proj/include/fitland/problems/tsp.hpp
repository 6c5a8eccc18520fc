#pragma once

#include "fitland/histogram.hpp"
#include "fitland/problem.hpp"
#include "fitland/stats.hpp"

#include <iosfwd>
#include <vector>

namespace fitland {

/// Symmetric TSP distance matrix: zero diagonal, positive integers elsewhere.
struct TspInstance {
    int n = 0;
    std::vector<std::vector<int>> dist;

    int distance(int a, int b) const { return dist[static_cast<std::size_t>(a)]
                                                  [static_cast<std::size_t>(b)]; }
};

TspInstance make_tsp(int n, std::vector<std::vector<int>> dist);

/// Deterministic symmetric instance: the n(n-1)/2 city pairs in the order
/// <1,2>,<1,3>,...,<1,n>,<2,3>,...,<n-1,n> receive the non-decreasing value
/// sequence in which the 6 lowest of the d distance values occur four times
/// each and the remaining d-6 occur three times each. Accepted only when
/// n(n-1)/2 = 3d + 6 exactly (so (12,20) works); otherwise throws
/// InvalidLandscape (inconsistent multiplicity).
TspInstance make_footnote_tsp(int n = 12, int d = 20);

/// Plain-text matrix: n, then n rows of n integers.
TspInstance load_tsp_matrix(std::istream& in);

/// The multiset of off-diagonal distances (each unordered pair once).
std::vector<int> pair_distances(const TspInstance& instance);

/// Exact route-length census over all (n-1)! cyclic successor assignments
/// (city 0's successor chain fixed as the enumeration frame). Partitioned
/// across workers by the first visited city; the merge is a per-length sum,
/// so serial and parallel runs are identical.
FitnessHistogram tsp_census(const TspInstance& instance, const EnumerationOptions& options = {},
                            int city_ceiling = 13);

/// Enumerable view of the instance. Ids are Lehmer ranks of the visit order
/// of cities 1..n-1 after city 0; moves are segment reversals (2-opt).
class TspProblem : public ExplicitProblem {
public:
    explicit TspProblem(TspInstance instance);

    Sense sense() const override { return Sense::minimize; }
    Integer size() const override { return size_; }
    Rational fitness(SolutionId s) const override;
    std::vector<SolutionId> neighbours(SolutionId s) const override;

    const TspInstance& instance() const { return instance_; }
    /// Visit order of cities 1..n-1 for a rank.
    std::vector<int> tour(SolutionId s) const;
    SolutionId rank_of(const std::vector<int>& tour) const;
    long long route_length(const std::vector<int>& tour) const;

private:
    TspInstance instance_;
    Integer size_;
    std::vector<SolutionId> factorial_; ///< 0! .. (n-2)!
};

} // namespace fitland
