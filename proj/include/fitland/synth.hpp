#pragma once

#include "fitland/aggregate.hpp"
#include "fitland/properties.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fitland {

enum class Violation { none, break_nsf, break_cm, break_unskewed };

std::string to_string(Violation violation);
Violation violation_from_string(const std::string& text);

enum class GapProfileKind {
    geometric_crossover, ///< decaying gaps with a sign change inside the delta range
    strictly_positive,   ///< decaying gaps, no crossover
};

struct SynthSpec {
    Level levels = 6;
    Level mode_pos = 0;
    std::uint64_t seed = 1;
    GapProfileKind profile = GapProfileKind::geometric_crossover;
    Violation violation = Violation::none;
};

/// Fully occupied histogram on levels 0..levels-1, counts strictly
/// decreasing above the mode, positive (and never above the modal count)
/// below it. Deterministic under seed.
FitnessHistogram generate_cm_histogram(const SynthSpec& spec);

/// Negative-control histogram: mode at the bottom, a one-solution dip just
/// under the optimum and a large rebound at the optimum, so strict
/// cardinality-monotonicity fails above the mode.
FitnessHistogram generate_dip_histogram(const SynthSpec& spec);

enum class SplitRule {
    unskewed,  ///< split each delta mass in the whole-space better-share ratio
    all_better ///< push each delta mass to the better side
};

/// Core constructor for abstract aggregates: per occupied level v, the
/// neighbour share at distance delta is p(v,delta) + gap[delta-1] (clamped
/// into [0,1]), the residual sits at delta = 0, and each delta mass is split
/// between v+delta and v-delta by the split rule. Rows sum to 1; the result
/// is not integer-realizable. Throws InfeasibleProfile when the shares
/// cannot form a distribution.
AggregateLandscape aggregate_from_gap_profile(const FitnessHistogram& hist,
                                              const std::vector<Rational>& gap,
                                              SplitRule split = SplitRule::unskewed,
                                              bool scale_to_unit = false);

/// Samples a gap profile (positive at delta 1, non-increasing, nonnegative
/// total) and realizes it with the unskewed split, so that check_nsf and
/// check_unskewed(0) hold on the output by construction. Requires a strictly
/// cardinality-monotonic, fully occupied histogram. Throws InfeasibleProfile
/// when clamping destroys a clause; callers retry with a fresh seed.
AggregateLandscape generate_nsf_unskewed(const FitnessHistogram& hist, const SynthSpec& spec);

/// Fitness-independent neighbourhoods: nf(v, .) proportional to the counts,
/// so pn_plus(v) = p_plus(v) exactly at every occupied level.
AggregateLandscape uniform_neighbourhood(const FitnessHistogram& hist);

/// Dispatcher honoring spec.violation: positive controls satisfy all three
/// premises; each violation mode breaks exactly its named premise.
AggregateLandscape generate_landscape(const SynthSpec& spec);

struct TheoremCase {
    SynthSpec spec;
    FitnessGrid grid;
    PropertyReport report;
    bool premises_hold = false;
    bool conclusion_holds = false;
    std::optional<AggregateLandscape> landscape; ///< kept for counterexamples only
};

struct TheoremSuite {
    int requested = 0;
    int accepted = 0;
    int infeasible_retries = 0;
    int premise_failures = 0;
    int conclusion_failures = 0;
    int counterexamples = 0; ///< premises hold, verdict not "holds"
    std::vector<TheoremCase> cases;
};

/// Runs `count` synthesized landscapes through verify_theorem1, varying
/// level count, mode position and profile kind deterministically from the
/// base seed. Infeasible draws are retried with derived seeds.
TheoremSuite run_theorem_suite(int count, std::uint64_t base_seed, Violation violation);

} // namespace fitland
