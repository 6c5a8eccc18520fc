#include "fitland/aggregate.hpp"

#include "fitland/errors.hpp"

namespace fitland {

AggregateLandscape::AggregateLandscape(FitnessHistogram hist,
                                       std::vector<std::vector<Rational>> nf,
                                       bool integer_realizable)
    : hist_(std::move(hist)), nf_(std::move(nf)), integer_realizable_(integer_realizable) {
    const auto levels = static_cast<std::size_t>(hist_.grid().size());
    if (nf_.size() != levels) {
        throw InvalidLandscape("nf matrix row count does not span the grid");
    }
    nf_size_.assign(levels, Rational(0));
    for (std::size_t row = 0; row < levels; ++row) {
        if (nf_[row].size() != levels) {
            throw InvalidLandscape("nf matrix is not square over the grid");
        }
        const Level v = hist_.v_min() + static_cast<Level>(row);
        for (std::size_t col = 0; col < levels; ++col) {
            const Rational& entry = nf_[row][col];
            const Level w = hist_.v_min() + static_cast<Level>(col);
            if (entry < 0) {
                throw InvalidLandscape("negative nf entry");
            }
            if (entry > 0 && hist_.count(w) == 0) {
                throw InvalidLandscape("nf mass at empty level " + std::to_string(w));
            }
            if (integer_realizable_ && entry > 0) {
                if (!is_integral(entry)) {
                    throw InvalidLandscape("non-integral nf entry in integer-realizable aggregate");
                }
                if (entry > hist_.count(w)) {
                    throw InvalidLandscape("nf entry exceeds solution count at level " +
                                           std::to_string(w));
                }
            }
            nf_size_[row] += entry;
        }
        if (hist_.count(v) > 0 && nf_size_[row] == 0) {
            throw InvalidLandscape("occupied level " + std::to_string(v) +
                                   " has an empty neighbour union");
        }
    }
}

std::size_t AggregateLandscape::index(Level v) const {
    if (!grid().contains(v)) {
        throw OutOfRangeLevel("level " + std::to_string(v) + " outside grid");
    }
    return static_cast<std::size_t>(v - hist_.v_min());
}

const Rational& AggregateLandscape::nf(Level v, Level w) const {
    return nf_[index(v)][index(w)];
}

Rational AggregateLandscape::nf_or_zero(Level v, Level w) const {
    if (!grid().contains(w)) {
        return Rational(0);
    }
    return nf_[index(v)][index(w)];
}

const Rational& AggregateLandscape::nf_size(Level v) const {
    return nf_size_[index(v)];
}

} // namespace fitland
