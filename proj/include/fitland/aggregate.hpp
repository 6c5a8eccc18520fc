#pragma once

#include "fitland/histogram.hpp"

#include <vector>

namespace fitland {

/// Histogram plus the fitness-transition matrix: nf(v, w) is the number of
/// distinct solutions of fitness w among the neighbours of level-v solutions
/// (set semantics). Rows of unoccupied levels are all-zero and carry no
/// meaning. This matrix is the whole abstraction: two landscapes with equal
/// histogram and nf are indistinguishable to every check in the toolkit.
///
/// Invariants, enforced at construction:
///   - nf(v, w) = 0 wherever count(w) = 0
///   - every occupied level has a nonempty neighbour union
///   - integer-realizable aggregates have integral entries with
///     nf(v, w) <= count(w)
class AggregateLandscape {
public:
    AggregateLandscape(FitnessHistogram hist, std::vector<std::vector<Rational>> nf,
                       bool integer_realizable);

    const FitnessHistogram& hist() const { return hist_; }
    const FitnessGrid& grid() const { return hist_.grid(); }
    Level v_min() const { return hist_.v_min(); }
    Level v_max() const { return hist_.v_max(); }
    bool integer_realizable() const { return integer_realizable_; }

    const Rational& nf(Level v, Level w) const;
    /// nf(v, w), zero when w is off-grid.
    Rational nf_or_zero(Level v, Level w) const;
    /// |Nf(v)|: row sum for level v.
    const Rational& nf_size(Level v) const;

private:
    std::size_t index(Level v) const;

    FitnessHistogram hist_;
    std::vector<std::vector<Rational>> nf_;
    std::vector<Rational> nf_size_;
    bool integer_realizable_;
};

} // namespace fitland
