#include "fitland/problem.hpp"

#include "fitland/errors.hpp"
#include "fitland/rng.hpp"

#include <numeric>

namespace fitland {

PermutedProblem::PermutedProblem(const ExplicitProblem& base, std::vector<SolutionId> perm)
    : base_(base), perm_(std::move(perm)) {
    if (Integer(perm_.size()) != base_.size()) {
        throw InvalidLandscape("permutation length does not match problem size");
    }
    inverse_.assign(perm_.size(), 0);
    std::vector<bool> seen(perm_.size(), false);
    for (SolutionId s = 0; s < perm_.size(); ++s) {
        const SolutionId t = perm_[s];
        if (t >= perm_.size() || seen[t]) {
            throw InvalidLandscape("permutation is not a bijection");
        }
        seen[t] = true;
        inverse_[t] = s;
    }
}

Rational PermutedProblem::fitness(SolutionId s) const {
    return base_.fitness(perm_[s]);
}

std::vector<SolutionId> PermutedProblem::neighbours(SolutionId s) const {
    std::vector<SolutionId> out = base_.neighbours(perm_[s]);
    for (SolutionId& n : out) {
        n = inverse_[n];
    }
    return out;
}

std::vector<SolutionId> random_permutation(std::uint64_t size, std::uint64_t seed) {
    std::vector<SolutionId> perm(size);
    std::iota(perm.begin(), perm.end(), SolutionId{0});
    Rng rng(seed);
    for (std::uint64_t i = size; i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    return perm;
}

} // namespace fitland
