#include "fitland/search.hpp"

#include "fitland/errors.hpp"
#include "fitland/rng.hpp"

#include <cmath>

namespace fitland {

namespace {

std::uint64_t enumerable_size(const ExplicitProblem& problem, const Integer& budget) {
    const Integer size = problem.size();
    if (size > budget) {
        throw BudgetExceeded("search space of size " + size.str() + " exceeds budget " +
                             budget.str());
    }
    return size.convert_to<std::uint64_t>();
}

/// Climbs from (s, f) until local optimum or evaluation budget; every
/// fitness call increments evals. Calls on_accept after each move.
template <typename OnAccept>
ClimbTrace::Status climb_loop(const ExplicitProblem& problem, Pivot pivot, std::uint64_t budget,
                              std::uint64_t& evals, Rng& rng, SolutionId& s, Rational& f,
                              OnAccept&& on_accept) {
    const Sense sense = problem.sense();
    while (true) {
        if (evals >= budget) {
            return ClimbTrace::Status::budget_exhausted;
        }
        const std::vector<SolutionId> candidates = problem.neighbours(s);
        if (pivot == Pivot::random_neighbour) {
            if (candidates.empty()) {
                return ClimbTrace::Status::local_optimum;
            }
            const SolutionId n = candidates[rng.below(candidates.size())];
            const Rational fn = problem.fitness(n);
            ++evals;
            if (better(sense, fn, f)) {
                s = n;
                f = fn;
                on_accept(s, f);
            }
            continue;
        }

        bool scanned_all = true;
        std::optional<SolutionId> chosen;
        Rational chosen_f = f;
        for (const SolutionId n : candidates) {
            if (evals >= budget) {
                scanned_all = false;
                break;
            }
            const Rational fn = problem.fitness(n);
            ++evals;
            if (!better(sense, fn, f)) {
                continue;
            }
            if (pivot == Pivot::first_improvement) {
                chosen = n;
                chosen_f = fn;
                break;
            }
            // Best improvement; ties broken toward the smaller id.
            if (!chosen || better(sense, fn, chosen_f) || (fn == chosen_f && n < *chosen)) {
                chosen = n;
                chosen_f = fn;
            }
        }
        if (chosen) {
            s = *chosen;
            f = chosen_f;
            on_accept(s, f);
            continue;
        }
        if (!scanned_all) {
            return ClimbTrace::Status::budget_exhausted;
        }
        return ClimbTrace::Status::local_optimum;
    }
}

} // namespace

LevelIndex::LevelIndex(const ExplicitProblem& problem, const EnumerationOptions& options)
    : hist_(build_histogram(problem, std::nullopt, options)) {
    const std::uint64_t size = enumerable_size(problem, options.budget);
    levels_.resize(size);
    members_.resize(static_cast<std::size_t>(hist_.grid().size()));
    for (SolutionId s = 0; s < size; ++s) {
        const Rational f = problem.fitness(s);
        const Level v = hist_.grid().level_of(f);
        levels_[s] = v;
        members_[static_cast<std::size_t>(v - hist_.v_min())].push_back(s);
    }
}

const std::vector<SolutionId>& LevelIndex::members(Level v) const {
    if (!hist_.grid().contains(v)) {
        throw OutOfRangeLevel("level " + std::to_string(v) + " outside grid");
    }
    return members_[static_cast<std::size_t>(v - hist_.v_min())];
}

Estimate estimate_improvement(const LevelIndex& index, const ExplicitProblem& problem, Level v,
                              SampleMode mode, std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) {
        throw InvalidLandscape("estimator needs at least one trial");
    }
    const std::vector<SolutionId>& at_level = index.members(v);
    if (at_level.empty()) {
        throw EmptyLevel("no solutions at level " + std::to_string(v));
    }
    Rng rng(seed);
    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (mode == SampleMode::random) {
            const SolutionId s = rng.below(index.size());
            successes += index.level_of(s) > v ? 1 : 0;
            continue;
        }
        const SolutionId s = at_level[rng.below(at_level.size())];
        const std::vector<SolutionId> ns = problem.neighbours(s);
        if (ns.empty()) {
            continue; // nothing to draw; cannot improve
        }
        const SolutionId n = ns[rng.below(ns.size())];
        successes += index.level_of(n) > v ? 1 : 0;
    }
    Estimate estimate;
    estimate.trials = trials;
    estimate.successes = successes;
    estimate.value = static_cast<double>(successes) / static_cast<double>(trials);
    estimate.std_error =
        std::sqrt(estimate.value * (1.0 - estimate.value) / static_cast<double>(trials));
    return estimate;
}

Estimate estimate_improvement(const ExplicitProblem& problem, Level v, SampleMode mode,
                              std::uint64_t trials, std::uint64_t seed,
                              const EnumerationOptions& options) {
    const LevelIndex index(problem, options);
    return estimate_improvement(index, problem, v, mode, trials, seed);
}

Rational exact_neighbour_improvement(const LevelIndex& index, const ExplicitProblem& problem,
                                     Level v) {
    const std::vector<SolutionId>& at_level = index.members(v);
    if (at_level.empty()) {
        throw EmptyLevel("no solutions at level " + std::to_string(v));
    }
    Rational sum(0);
    for (const SolutionId s : at_level) {
        const std::vector<SolutionId> ns = problem.neighbours(s);
        if (ns.empty()) {
            continue;
        }
        std::size_t improving = 0;
        for (const SolutionId n : ns) {
            improving += index.level_of(n) > v ? 1 : 0;
        }
        sum += Rational(improving, ns.size());
    }
    return sum / Rational(at_level.size());
}

std::string to_string(Pivot pivot) {
    switch (pivot) {
    case Pivot::first_improvement:
        return "first-improvement";
    case Pivot::best_improvement:
        return "best-improvement";
    case Pivot::random_neighbour:
        return "random-neighbour";
    }
    return "?";
}

Pivot pivot_from_string(const std::string& text) {
    if (text == "first-improvement" || text == "first") {
        return Pivot::first_improvement;
    }
    if (text == "best-improvement" || text == "best") {
        return Pivot::best_improvement;
    }
    if (text == "random-neighbour" || text == "random") {
        return Pivot::random_neighbour;
    }
    throw ParseError("unknown pivot rule: " + text);
}

ClimbTrace hill_climb(const ExplicitProblem& problem, const SearchConfig& config) {
    if (config.budget < 1) {
        throw InvalidLandscape("search budget must be >= 1");
    }
    Rng rng = substream(config.seed, 0);
    const std::uint64_t size = enumerable_size(problem, Integer(~std::uint64_t{0}));
    SolutionId s = config.start.value_or(0);
    if (config.start) {
        if (s >= size) {
            throw OutOfRangeLevel("start solution out of range");
        }
    } else {
        s = rng.below(size);
    }

    ClimbTrace trace;
    Rational f = problem.fitness(s);
    trace.evaluations = 1;
    trace.fitness.push_back(f);
    trace.status = climb_loop(problem, config.pivot, config.budget, trace.evaluations, rng, s, f,
                              [&](SolutionId, const Rational& accepted) {
                                  trace.fitness.push_back(accepted);
                              });
    trace.final_solution = s;
    return trace;
}

ComparisonReport head_to_head(const ExplicitProblem& problem, const SearchConfig& config,
                              std::uint64_t runs, std::uint64_t trials_per_level,
                              bool with_traces, const EnumerationOptions& options) {
    if (runs < 1) {
        throw InvalidLandscape("head-to-head needs at least one run");
    }
    if (config.budget < 1) {
        throw InvalidLandscape("search budget must be >= 1");
    }
    const Sense sense = problem.sense();
    const std::uint64_t size = enumerable_size(problem, options.budget);

    ComparisonReport report;
    report.runs = runs;
    report.budget = config.budget;
    report.pivot = config.pivot;
    report.seed = config.seed;

    const LevelIndex index(problem, options);
    if (trials_per_level > 0) {
        const AggregateLandscape agg = build_aggregate(problem, options);
        for (Level v = index.hist().v_min(); v <= index.hist().v_max(); ++v) {
            if (index.hist().count(v) == 0) {
                continue;
            }
            const auto stream = static_cast<std::uint64_t>(v - index.hist().v_min());
            LevelComparison cmp;
            cmp.level = v;
            cmp.neighbour_estimate =
                estimate_improvement(index, problem, v, SampleMode::neighbour, trials_per_level,
                                     substream(config.seed, 2 * stream).next());
            cmp.random_estimate =
                estimate_improvement(index, problem, v, SampleMode::random, trials_per_level,
                                     substream(config.seed, 2 * stream + 1).next());
            cmp.analytic_pn_plus = pn_plus(agg, v);
            cmp.analytic_p_plus = p_plus(index.hist(), v);
            cmp.exact_neighbour_mean = exact_neighbour_improvement(index, problem, v);
            report.levels.push_back(std::move(cmp));
        }
    }

    double hill_sum = 0.0;
    double random_sum = 0.0;
    for (std::uint64_t r = 0; r < runs; ++r) {
        // Hill climb with uniform random restarts on local optima, one
        // shared evaluation budget.
        Rng rng = substream(config.seed, 1'000'000 + r);
        std::uint64_t evals = 0;
        std::optional<Rational> best;
        std::vector<std::pair<std::uint64_t, Rational>> trace;
        while (evals < config.budget) {
            SolutionId s = rng.below(size);
            Rational f = problem.fitness(s);
            ++evals;
            if (!best || better(sense, f, *best)) {
                best = f;
            }
            if (with_traces) {
                trace.emplace_back(evals, f);
            }
            const auto status = climb_loop(problem, config.pivot, config.budget, evals, rng, s, f,
                                           [&](SolutionId, const Rational& accepted) {
                                               if (!best || better(sense, accepted, *best)) {
                                                   best = accepted;
                                               }
                                               if (with_traces) {
                                                   trace.emplace_back(evals, accepted);
                                               }
                                           });
            if (status == ClimbTrace::Status::budget_exhausted) {
                break;
            }
        }
        report.hill_climb.best_fitness.push_back(*best);
        hill_sum += to_double(*best);
        if (with_traces) {
            report.traces.push_back(std::move(trace));
        }

        // Pure random sampling with the same budget.
        Rng sampler = substream(config.seed, 2'000'000 + r);
        std::optional<Rational> random_best;
        for (std::uint64_t e = 0; e < config.budget; ++e) {
            const Rational f = problem.fitness(sampler.below(size));
            if (!random_best || better(sense, f, *random_best)) {
                random_best = f;
            }
        }
        report.random_search.best_fitness.push_back(*random_best);
        random_sum += to_double(*random_best);
    }
    report.hill_climb.mean_best = hill_sum / static_cast<double>(runs);
    report.random_search.mean_best = random_sum / static_cast<double>(runs);
    return report;
}

} // namespace fitland
