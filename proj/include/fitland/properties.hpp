#pragma once

#include "fitland/aggregate.hpp"
#include "fitland/stats.hpp"

#include <map>
#include <optional>
#include <string>

namespace fitland {

enum class Verdict { holds, fails, not_applicable };

std::string to_string(Verdict verdict);

/// First violated comparison. `v` is the grid level under test; `delta`
/// holds the fitness difference, or the second level v' for pairwise level
/// checks, or 0 when the clause is not delta-resolved.
struct Witness {
    Level v = 0;
    Level delta = 0;
    Rational lhs;
    Rational rhs;
    std::string clause;
};

enum class PropertyKind {
    cardinality_monotonic,
    unskewed,
    nsf,
    effective_at,
    effective_landscape,
    lemma1,
    theorem1,
    permutation_closure,
};

struct PropertyReport {
    PropertyKind kind;
    std::string name; ///< rendered name including parameters
    Verdict verdict = Verdict::not_applicable;
    std::optional<Witness> witness; ///< present iff verdict == fails
    std::optional<Level> v_mode;
    std::optional<Level> v_ge;
    std::map<std::string, std::string> details; ///< sub-verdicts and diagnostics
};

/// Best level among the levels of maximal count (ties break toward better
/// fitness).
Level modal_fitness(const FitnessHistogram& hist);

/// v_mode + ceil((v_max - v_mode) / 2): midpoint between mode and optimum,
/// rounded toward the optimum.
Level good_enough(const FitnessHistogram& hist);

/// Counts non-increasing (strict: decreasing) from the modal level up to
/// the optimum. Levels below the mode never affect the verdict.
PropertyReport check_cardinality_monotonic(const FitnessHistogram& hist, bool strict);

/// At every occupied v and every delta with neighbour mass, the better-side
/// share among delta-distant neighbours matches the better-side share among
/// delta-distant solutions, within tolerance (0 = exact equality).
PropertyReport check_unskewed(const AggregateLandscape& agg, const Rational& tolerance = 0);

/// Neighbours' similar fitness: over delta in {1 .. v_max - v_ge}, at every
/// occupied v, the gap pn - p (a) is non-increasing in delta, (b) is
/// strictly positive at delta = 1, (c) has nonnegative total.
PropertyReport check_nsf(const AggregateLandscape& agg);

/// pn_plus(v) > p_plus(v), strict exact comparison. Throws EmptyLevel.
PropertyReport check_effective_at(const AggregateLandscape& agg, Level v);

/// Effectiveness at every v in [v_ge, v_max). Also records the smallest
/// level from which effectiveness holds all the way up ("effective_from").
PropertyReport check_effective_landscape(const AggregateLandscape& agg);

/// For every v > v_ge, the better-side share p_plus(v, delta) is
/// non-increasing over consecutive defined deltas and zero past the grid
/// edge (delta > v_max - v).
PropertyReport check_lemma1(const FitnessHistogram& hist);

/// Checks premises (strict cardinality-monotonicity, NSF, unskewed at
/// tolerance 0) and the conclusion pn_plus(v) > p_plus(v) for all
/// v in [v_ge, v_max). Premise failure yields not_applicable; the
/// conclusion verdicts for both the inclusive and the strict-above-v_ge
/// ranges are recorded in details either way. When unskewedness holds the
/// delta decomposition of pn_plus(v) is cross-checked for exact agreement.
PropertyReport verify_theorem1(const AggregateLandscape& agg);

/// Level-by-level count equality of two histograms over the same grid
/// (throws GridMismatch otherwise); records whether the
/// cardinality-monotonicity verdicts agree.
PropertyReport check_permutation_closure(const FitnessHistogram& before,
                                         const FitnessHistogram& after);

} // namespace fitland
