#include "fitland/stats.hpp"

#include "fitland/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>
#include <utility>

namespace fitland {

namespace {

int resolve_workers(int requested) {
    if (requested > 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::uint64_t checked_enumerable_size(const ExplicitProblem& problem, const Integer& budget) {
    const Integer size = problem.size();
    if (size > budget) {
        throw BudgetExceeded("search space of size " + size.str() + " exceeds budget " +
                             budget.str());
    }
    return size.convert_to<std::uint64_t>();
}

/// Canonical grid level of one fitness value under the chosen binning.
Level level_of_value(const Rational& value, Sense sense, const std::optional<BinningSpec>& binning) {
    Rational index;
    if (binning) {
        index = Rational(floor_to_integer((value - binning->origin) / binning->width));
    } else {
        if (!is_integral(value)) {
            throw Unbinnable("non-integral fitness " + fraction_string(value) +
                             " requires a binning spec");
        }
        index = value;
    }
    const Integer level = sense == Sense::maximize ? numerator(index) : -numerator(index);
    return level.convert_to<Level>();
}

} // namespace

Integer default_enumeration_budget() {
    if (const char* env = std::getenv("FITLAND_BUDGET")) {
        try {
            const Integer parsed{std::string(env)};
            if (parsed > 0) {
                return parsed;
            }
        } catch (const std::exception&) {
            // fall through to the default
        }
    }
    return Integer(100000000); // 10^8
}

FitnessHistogram build_histogram(const ExplicitProblem& problem,
                                 const std::optional<BinningSpec>& binning,
                                 const EnumerationOptions& options) {
    if (binning && binning->width <= 0) {
        throw InvalidLandscape("binning width must be positive");
    }
    const std::uint64_t size = checked_enumerable_size(problem, options.budget);
    const Sense sense = problem.sense();

    const int workers =
        static_cast<int>(std::min<std::uint64_t>(resolve_workers(options.workers), size));
    std::vector<std::map<Level, std::uint64_t>> partial(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    // Deterministic prefix ranges; the merge below is a key-wise sum, so the
    // result does not depend on the worker count.
    auto run_chunk = [&](int w) {
        const std::uint64_t begin = size / workers * w + std::min<std::uint64_t>(w, size % workers);
        const std::uint64_t len = size / workers + (static_cast<std::uint64_t>(w) < size % workers);
        try {
            auto& local = partial[static_cast<std::size_t>(w)];
            for (std::uint64_t s = begin; s < begin + len; ++s) {
                ++local[level_of_value(problem.fitness(s), sense, binning)];
            }
        } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (workers <= 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run_chunk, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    std::map<Level, Rational> merged;
    for (const auto& local : partial) {
        for (const auto& [level, count] : local) {
            merged[level] += Rational(count);
        }
    }
    const Rational step = binning ? binning->width : Rational(1);
    const Rational origin = binning ? binning->origin : Rational(0);
    return FitnessHistogram::from_level_counts(sense, merged, origin, step);
}

GlobalProportions global_proportions(const FitnessHistogram& hist, Level v) {
    Rational above(0);
    for (Level w = v + 1; w <= hist.v_max(); ++w) {
        above += hist.count(w);
    }
    return GlobalProportions{hist.count(v) / hist.total(), above / hist.total()};
}

Rational p_plus(const FitnessHistogram& hist, Level v) {
    return global_proportions(hist, v).p_plus;
}

AggregateLandscape build_aggregate(const ExplicitProblem& problem,
                                   const EnumerationOptions& options) {
    const std::uint64_t size = checked_enumerable_size(problem, options.budget);
    const FitnessHistogram hist = build_histogram(problem, std::nullopt, options);
    const Level v_min = hist.v_min();
    const auto levels = static_cast<std::size_t>(hist.grid().size());

    // Level of every solution, then ids grouped by level.
    std::vector<Level> level_of(size);
    std::vector<std::vector<SolutionId>> members(levels);
    for (std::uint64_t s = 0; s < size; ++s) {
        const Level v = level_of_value(problem.fitness(s), problem.sense(), std::nullopt);
        level_of[s] = v;
        members[static_cast<std::size_t>(v - v_min)].push_back(s);
    }

    std::vector<std::vector<Rational>> nf(levels, std::vector<Rational>(levels, Rational(0)));
    const int workers = std::max(1, std::min<int>(resolve_workers(options.workers),
                                                  static_cast<int>(levels)));
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));

    auto run_rows = [&](int w) {
        try {
            std::vector<SolutionId> unioned;
            for (std::size_t row = static_cast<std::size_t>(w); row < levels;
                 row += static_cast<std::size_t>(workers)) {
                if (members[row].empty()) {
                    continue;
                }
                // Distinct members of the neighbour union (set semantics).
                unioned.clear();
                for (const SolutionId s : members[row]) {
                    for (const SolutionId n : problem.neighbours(s)) {
                        if (n == s) {
                            throw InvalidLandscape("solution is its own neighbour");
                        }
                        unioned.push_back(n);
                    }
                }
                std::sort(unioned.begin(), unioned.end());
                unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
                for (const SolutionId n : unioned) {
                    nf[row][static_cast<std::size_t>(level_of[n] - v_min)] += 1;
                }
            }
        } catch (...) {
            failures[static_cast<std::size_t>(w)] = std::current_exception();
        }
    };

    if (workers <= 1) {
        run_rows(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run_rows, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    return AggregateLandscape(hist, std::move(nf), /*integer_realizable=*/true);
}

Rational pn_plus(const AggregateLandscape& agg, Level v) {
    if (agg.hist().count(v) == 0) {
        throw EmptyLevel("no solutions at level " + std::to_string(v));
    }
    Rational above(0);
    for (Level w = v + 1; w <= agg.v_max(); ++w) {
        above += agg.nf(v, w);
    }
    return above / agg.nf_size(v);
}

Rational p_delta(const FitnessHistogram& hist, Level v, Level delta) {
    return (hist.count_or_zero(v + delta) + hist.count_or_zero(v - delta)) / hist.total();
}

std::optional<Rational> p_plus_delta(const FitnessHistogram& hist, Level v, Level delta) {
    const Rational up = hist.count_or_zero(v + delta);
    const Rational two_sided = up + hist.count_or_zero(v - delta);
    if (two_sided == 0) {
        return std::nullopt;
    }
    return up / two_sided;
}

DeltaProfile delta_profile(const AggregateLandscape& agg, Level v, Level v_ge) {
    const FitnessHistogram& hist = agg.hist();
    if (hist.count(v) == 0) {
        throw EmptyLevel("no solutions at level " + std::to_string(v));
    }
    if (v_ge > agg.v_max()) {
        throw OutOfRangeLevel("v_ge above the grid");
    }

    DeltaProfile profile;
    profile.v = v;
    profile.delta_cap = agg.v_max() - v_ge;
    const Rational& union_size = agg.nf_size(v);
    for (Level delta = 1; delta <= profile.delta_cap; ++delta) {
        const Rational up = agg.nf_or_zero(v, v + delta);
        const Rational two_sided = up + agg.nf_or_zero(v, v - delta);
        profile.ctn.push_back(two_sided);
        profile.ctn_plus.push_back(up);
        profile.pn.push_back(two_sided / union_size);
        profile.pn_plus.push_back(two_sided == 0 ? std::optional<Rational>{}
                                                 : std::optional<Rational>{up / two_sided});
        profile.p.push_back(p_delta(hist, v, delta));
        profile.p_plus.push_back(p_plus_delta(hist, v, delta));
    }
    return profile;
}

} // namespace fitland
