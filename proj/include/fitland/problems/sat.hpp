#pragma once

#include "fitland/problem.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fitland {

struct Literal {
    int var = 0;
    bool negated = false;
};

/// MAX-3SAT instance: fitness is the number of satisfied clauses, a move
/// flips one variable. Ids are assignment bitmasks, so the enumerable view
/// requires n <= 63 (size() is exact for any n).
class SatInstance : public ExplicitProblem {
public:
    SatInstance(int variables, std::vector<std::array<Literal, 3>> clauses);

    Sense sense() const override { return Sense::maximize; }
    Integer size() const override;
    Rational fitness(SolutionId s) const override;
    std::vector<SolutionId> neighbours(SolutionId s) const override;

    int variables() const { return variables_; }
    int clause_count() const { return static_cast<int>(clauses_.size()); }
    const std::vector<std::array<Literal, 3>>& clauses() const { return clauses_; }

private:
    void require_enumerable() const;

    int variables_;
    std::vector<std::array<Literal, 3>> clauses_;
};

/// m clauses over 3 distinct variables each, uniform without replacement,
/// uniform polarities; deterministic under seed.
SatInstance make_random_3sat(int variables, int clause_count, std::uint64_t seed);

/// Mean over variables of the fraction of clauses containing that variable:
/// the share of fitness terms one flip can touch. Exactly 3/n when every
/// clause holds 3 distinct variables.
Rational flip_overlap_fraction(const SatInstance& instance);

} // namespace fitland
