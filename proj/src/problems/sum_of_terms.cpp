#include "fitland/problems/sum_of_terms.hpp"

#include "fitland/errors.hpp"

namespace fitland {

SumOfTermsProblem::SumOfTermsProblem(int terms, int max_value)
    : terms_(terms), max_value_(max_value), size_(1) {
    if (terms < 1 || max_value < 1) {
        throw InvalidLandscape("sum-of-terms needs at least one term and one value");
    }
    for (int i = 0; i < terms; ++i) {
        size_ *= max_value;
    }
}

std::vector<int> SumOfTermsProblem::values(SolutionId s) const {
    std::vector<int> out(static_cast<std::size_t>(terms_));
    const auto base = static_cast<SolutionId>(max_value_);
    for (int i = terms_ - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(s % base) + 1;
        s /= base;
    }
    return out;
}

Rational SumOfTermsProblem::fitness(SolutionId s) const {
    const auto base = static_cast<SolutionId>(max_value_);
    SolutionId digit_sum = 0;
    for (int i = 0; i < terms_; ++i) {
        digit_sum += s % base;
        s /= base;
    }
    return Rational(digit_sum + static_cast<SolutionId>(terms_));
}

std::vector<SolutionId> SumOfTermsProblem::neighbours(SolutionId s) const {
    std::vector<SolutionId> out;
    out.reserve(static_cast<std::size_t>(2 * terms_));
    const auto base = static_cast<SolutionId>(max_value_);
    SolutionId place = 1;
    for (int i = terms_ - 1; i >= 0; --i) {
        const SolutionId digit = (s / place) % base;
        if (digit > 0) {
            out.push_back(s - place);
        }
        if (digit + 1 < base) {
            out.push_back(s + place);
        }
        place *= base;
    }
    return out;
}

SumOfTermsProblem make_sum_of_terms(int terms, int max_value) {
    return SumOfTermsProblem(terms, max_value);
}

FitnessHistogram convolution_census(int terms, int max_value) {
    if (terms < 1 || max_value < 1) {
        throw InvalidLandscape("sum-of-terms needs at least one term and one value");
    }
    constexpr long long kMaxLevels = 10'000'000;
    if (static_cast<long long>(terms) * max_value > kMaxLevels) {
        throw BudgetExceeded("convolution grid would exceed " + std::to_string(kMaxLevels) +
                             " levels");
    }
    // Degree axis tracks the sum of (value - 1) digits: 0 .. terms*(m-1).
    std::vector<Integer> coeff{1};
    for (int t = 0; t < terms; ++t) {
        std::vector<Integer> next(coeff.size() + static_cast<std::size_t>(max_value - 1),
                                  Integer(0));
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) {
                continue;
            }
            for (int v = 0; v < max_value; ++v) {
                next[i + static_cast<std::size_t>(v)] += coeff[i];
            }
        }
        coeff = std::move(next);
    }
    std::vector<Rational> counts(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        counts[i] = Rational(coeff[i]);
    }
    const Level lo = terms;
    const Level hi = static_cast<Level>(terms) * max_value;
    return FitnessHistogram(make_grid(Sense::maximize, lo, hi), std::move(counts));
}

} // namespace fitland
