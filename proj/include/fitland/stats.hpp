#pragma once

#include "fitland/aggregate.hpp"
#include "fitland/histogram.hpp"
#include "fitland/problem.hpp"

#include <optional>
#include <vector>

namespace fitland {

/// Maps non-integral fitness values onto the grid: bin index is
/// floor((value - origin) / width). Mandatory for problems whose fitness
/// is not already integral.
struct BinningSpec {
    Rational width;     ///< > 0, original units per bin
    Rational origin = 0;
};

/// Solution-count ceiling from FITLAND_BUDGET, default 10^8.
Integer default_enumeration_budget();

struct EnumerationOptions {
    Integer budget = default_enumeration_budget();
    int workers = 0; ///< 0 = hardware concurrency; results are worker-independent
};

/// Exact per-level census of an enumerable problem.
FitnessHistogram build_histogram(const ExplicitProblem& problem,
                                 const std::optional<BinningSpec>& binning = {},
                                 const EnumerationOptions& options = {});

struct GlobalProportions {
    Rational p;      ///< share of solutions at exactly v
    Rational p_plus; ///< share of solutions strictly better than v
};

GlobalProportions global_proportions(const FitnessHistogram& hist, Level v);

/// Share of solutions strictly better than v.
Rational p_plus(const FitnessHistogram& hist, Level v);

/// Exact neighbour-union census: nf(v, w) counts distinct solutions of
/// fitness w among neighbours of level-v solutions.
AggregateLandscape build_aggregate(const ExplicitProblem& problem,
                                   const EnumerationOptions& options = {});

/// Share of Nf(v) strictly better than v. Throws EmptyLevel when no
/// solution has fitness v.
Rational pn_plus(const AggregateLandscape& agg, Level v);

/// Fitness-difference-resolved statistics at one level. Entries are indexed
/// by delta - 1 over delta = 1 .. delta_cap; out-of-grid levels contribute
/// zero counts. The better-side shares are undefined (not zero) when the
/// corresponding two-sided count vanishes.
struct DeltaProfile {
    Level v = 0;
    Level delta_cap = 0; ///< delta ranges over {1 .. delta_cap}
    std::vector<Rational> ctn;      ///< neighbours at v +- delta
    std::vector<Rational> ctn_plus; ///< neighbours at v + delta
    std::vector<Rational> p;        ///< (count(v+d) + count(v-d)) / total
    std::vector<Rational> pn;       ///< ctn / |Nf(v)|
    std::vector<std::optional<Rational>> p_plus;  ///< count(v+d) / two-sided count
    std::vector<std::optional<Rational>> pn_plus; ///< ctn_plus / ctn

    const Rational& at(const std::vector<Rational>& field, Level delta) const {
        return field[static_cast<std::size_t>(delta - 1)];
    }
};

/// Profile over delta = 1 .. v_max - v_ge. Requires an occupied v and
/// v_ge <= v_max.
DeltaProfile delta_profile(const AggregateLandscape& agg, Level v, Level v_ge);

/// Two-sided solution share at distance delta from v (extends the profile
/// beyond its cap; used by the decomposition identity).
Rational p_delta(const FitnessHistogram& hist, Level v, Level delta);

/// Better-side share among solutions at distance delta from v; nullopt when
/// no solution sits at either side.
std::optional<Rational> p_plus_delta(const FitnessHistogram& hist, Level v, Level delta);

} // namespace fitland
