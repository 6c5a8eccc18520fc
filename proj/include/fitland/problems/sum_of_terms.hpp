#pragma once

#include "fitland/histogram.hpp"
#include "fitland/problem.hpp"

#include <vector>

namespace fitland {

/// Sum of k terms, each taking integer values 1..m. Solutions enumerate in
/// lexicographic order of the value tuple; a move changes one term by +-1
/// (clamped at the value range, so boundary terms have one direction only).
class SumOfTermsProblem : public ExplicitProblem {
public:
    SumOfTermsProblem(int terms, int max_value);

    Sense sense() const override { return Sense::maximize; }
    Integer size() const override { return size_; }
    Rational fitness(SolutionId s) const override;
    std::vector<SolutionId> neighbours(SolutionId s) const override;

    int terms() const { return terms_; }
    int max_value() const { return max_value_; }

    /// Term values (1..m) of a solution, first term most significant.
    std::vector<int> values(SolutionId s) const;

private:
    int terms_;
    int max_value_;
    Integer size_;
};

SumOfTermsProblem make_sum_of_terms(int terms, int max_value);

/// Exact per-sum counts via iterated polynomial convolution; an independent
/// computation path from enumeration.
FitnessHistogram convolution_census(int terms, int max_value);

} // namespace fitland
