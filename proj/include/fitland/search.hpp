#pragma once

#include "fitland/histogram.hpp"
#include "fitland/problem.hpp"
#include "fitland/stats.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fitland {

/// Ids grouped by canonical grid level; the sampling backbone for the
/// estimators. Construction enumerates the problem once (budgeted).
class LevelIndex {
public:
    explicit LevelIndex(const ExplicitProblem& problem, const EnumerationOptions& options = {});

    const FitnessHistogram& hist() const { return hist_; }
    Level level_of(SolutionId s) const { return levels_[s]; }
    const std::vector<SolutionId>& members(Level v) const;
    std::uint64_t size() const { return levels_.size(); }

private:
    FitnessHistogram hist_;
    std::vector<Level> levels_;
    std::vector<std::vector<SolutionId>> members_;
};

enum class SampleMode { neighbour, random };

struct Estimate {
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    double value = 0.0;
    double std_error = 0.0; ///< sqrt(p(1-p)/trials)
};

/// Monte Carlo improvement probability at a level. Neighbour mode draws a
/// uniform level-v solution then a uniform member of its neighbourhood
/// (so solutions are weighted by neighbourhood membership, which is not the
/// same measure as the aggregate's pn_plus when neighbourhood sizes vary);
/// random mode draws uniformly from the whole space and targets p_plus(v).
Estimate estimate_improvement(const LevelIndex& index, const ExplicitProblem& problem, Level v,
                              SampleMode mode, std::uint64_t trials, std::uint64_t seed);

/// Convenience: builds the level index internally (one enumeration).
Estimate estimate_improvement(const ExplicitProblem& problem, Level v, SampleMode mode,
                              std::uint64_t trials, std::uint64_t seed,
                              const EnumerationOptions& options = {});

/// Exact expectation the neighbour-mode estimator converges to: the mean
/// over level-v solutions of their individual improving-neighbour share.
Rational exact_neighbour_improvement(const LevelIndex& index, const ExplicitProblem& problem,
                                     Level v);

enum class Pivot { first_improvement, best_improvement, random_neighbour };

std::string to_string(Pivot pivot);
Pivot pivot_from_string(const std::string& text);

struct SearchConfig {
    Pivot pivot = Pivot::best_improvement;
    std::uint64_t budget = 1000; ///< max fitness evaluations, >= 1
    std::uint64_t seed = 1;
    std::optional<SolutionId> start; ///< uniform random start when absent
};

struct ClimbTrace {
    enum class Status { local_optimum, budget_exhausted };

    std::vector<Rational> fitness; ///< original units, one entry per accepted state
    std::uint64_t evaluations = 0;
    Status status = Status::budget_exhausted;
    SolutionId final_solution = 0;
};

/// Single climb: moves to strictly improving neighbours under the pivot
/// rule until a local optimum (full-scan pivots only) or the evaluation
/// budget. Every fitness evaluation, including the start, counts.
ClimbTrace hill_climb(const ExplicitProblem& problem, const SearchConfig& config);

struct LevelComparison {
    Level level = 0;
    Estimate neighbour_estimate;
    Estimate random_estimate;
    Rational analytic_pn_plus;        ///< share of Nf(v) that improves
    Rational analytic_p_plus;         ///< share of S that improves
    Rational exact_neighbour_mean;    ///< target of the neighbour estimator
};

struct RunStats {
    std::vector<Rational> best_fitness; ///< original units, one per run
    double mean_best = 0.0;
};

struct ComparisonReport {
    std::uint64_t runs = 0;
    std::uint64_t budget = 0;
    Pivot pivot = Pivot::best_improvement;
    std::uint64_t seed = 0;
    std::vector<LevelComparison> levels;
    RunStats hill_climb;
    RunStats random_search;
    /// One (step, fitness, evaluations) row per accepted state per run,
    /// restarts included; filled only when traces are requested.
    std::vector<std::vector<std::pair<std::uint64_t, Rational>>> traces;
};

/// Matched-budget comparison: restarting hill climb vs uniform random
/// sampling, plus per-level improvement estimates against the analytic
/// values. trials_per_level = 0 skips the per-level section.
ComparisonReport head_to_head(const ExplicitProblem& problem, const SearchConfig& config,
                              std::uint64_t runs, std::uint64_t trials_per_level,
                              bool with_traces = false, const EnumerationOptions& options = {});

} // namespace fitland
