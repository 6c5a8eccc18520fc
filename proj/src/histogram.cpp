#include "fitland/histogram.hpp"

#include "fitland/errors.hpp"

namespace fitland {

FitnessHistogram::FitnessHistogram(FitnessGrid grid, std::vector<Rational> counts)
    : grid_(std::move(grid)), counts_(std::move(counts)), total_(0) {
    if (static_cast<Level>(counts_.size()) != grid_.size()) {
        throw InvalidLandscape("histogram count vector does not span the grid");
    }
    for (const Rational& c : counts_) {
        if (c < 0) {
            throw InvalidLandscape("negative count in histogram");
        }
        total_ += c;
    }
    if (total_ <= 0) {
        throw InvalidLandscape("histogram total must be positive");
    }
    if (counts_.front() == 0 || counts_.back() == 0) {
        throw InvalidLandscape("histogram grid is not tight: empty end level");
    }
}

FitnessHistogram FitnessHistogram::from_level_counts(Sense sense,
                                                     const std::map<Level, Rational>& counts,
                                                     const Rational& origin_offset,
                                                     const Rational& step) {
    if (counts.empty()) {
        throw InvalidLandscape("histogram with no occupied levels");
    }
    const Level lo = counts.begin()->first;
    const Level hi = counts.rbegin()->first;
    std::vector<Rational> dense(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (const auto& [level, count] : counts) {
        dense[static_cast<std::size_t>(level - lo)] = count;
    }
    return FitnessHistogram(make_grid(sense, lo, hi, origin_offset, step), std::move(dense));
}

const Rational& FitnessHistogram::count(Level v) const {
    if (!grid_.contains(v)) {
        throw OutOfRangeLevel("level " + std::to_string(v) + " outside grid");
    }
    return counts_[static_cast<std::size_t>(v - grid_.v_min)];
}

Rational FitnessHistogram::count_or_zero(Level v) const {
    if (!grid_.contains(v)) {
        return Rational(0);
    }
    return counts_[static_cast<std::size_t>(v - grid_.v_min)];
}

} // namespace fitland
