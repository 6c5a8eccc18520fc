#pragma once

#include "fitland/grid.hpp"
#include "fitland/rational.hpp"

#include <cstdint>
#include <vector>

namespace fitland {

/// Rank of a solution in the problem's deterministic enumeration order.
using SolutionId = std::uint64_t;

/// A finite, enumerable problem. Valid ids are 0 .. size()-1; that rank
/// order *is* the deterministic enumeration stream. size() may exceed what
/// is enumerable (e.g. 2^n assignments); callers guard with a budget before
/// walking ids.
class ExplicitProblem {
public:
    virtual ~ExplicitProblem() = default;

    virtual Sense sense() const = 0;
    virtual Integer size() const = 0;

    /// Fitness in original units (exact).
    virtual Rational fitness(SolutionId s) const = 0;

    /// One-move neighbours of s; never contains s itself.
    virtual std::vector<SolutionId> neighbours(SolutionId s) const = 0;
};

/// True when a is better than b under the problem's sense.
inline bool better(Sense sense, const Rational& a, const Rational& b) {
    return sense == Sense::maximize ? a > b : a < b;
}

/// The same problem with solution identities relabeled by a bijection:
/// fitness'(s) = fitness(perm[s]), neighbourhood relabeled consistently.
/// Level counts are unchanged by construction.
class PermutedProblem : public ExplicitProblem {
public:
    PermutedProblem(const ExplicitProblem& base, std::vector<SolutionId> perm);

    Sense sense() const override { return base_.sense(); }
    Integer size() const override { return base_.size(); }
    Rational fitness(SolutionId s) const override;
    std::vector<SolutionId> neighbours(SolutionId s) const override;

private:
    const ExplicitProblem& base_;
    std::vector<SolutionId> perm_;
    std::vector<SolutionId> inverse_;
};

/// Uniformly random permutation of 0..size-1, deterministic under seed.
std::vector<SolutionId> random_permutation(std::uint64_t size, std::uint64_t seed);

} // namespace fitland
