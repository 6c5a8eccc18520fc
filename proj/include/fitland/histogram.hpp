#pragma once

#include "fitland/grid.hpp"
#include "fitland/rational.hpp"

#include <map>
#include <vector>

namespace fitland {

/// Per-level solution counts over a tight grid. Counts are rationals so
/// that synthesized (non-integer-realizable) landscapes share the type;
/// census-built histograms always hold integers.
///
/// Invariants, enforced at construction:
///   - every count >= 0 and total > 0
///   - counts at v_min and v_max are positive (the grid is tight)
class FitnessHistogram {
public:
    FitnessHistogram(FitnessGrid grid, std::vector<Rational> counts);

    /// Builds a tight histogram from occupied levels only; interior gaps
    /// become zero-count levels.
    static FitnessHistogram from_level_counts(Sense sense, const std::map<Level, Rational>& counts,
                                              const Rational& origin_offset = 0,
                                              const Rational& step = 1);

    const FitnessGrid& grid() const { return grid_; }
    Level v_min() const { return grid_.v_min; }
    Level v_max() const { return grid_.v_max; }

    const Rational& count(Level v) const;
    const std::vector<Rational>& counts() const { return counts_; }
    const Rational& total() const { return total_; }
    bool occupied(Level v) const { return count(v) > 0; }

    /// Count at v, zero when v lies outside the grid.
    Rational count_or_zero(Level v) const;

    bool operator==(const FitnessHistogram& other) const = default;

private:
    FitnessGrid grid_;
    std::vector<Rational> counts_; ///< indexed by v - v_min
    Rational total_;
};

} // namespace fitland
