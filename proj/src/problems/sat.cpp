#include "fitland/problems/sat.hpp"

#include "fitland/errors.hpp"
#include "fitland/rng.hpp"

namespace fitland {

SatInstance::SatInstance(int variables, std::vector<std::array<Literal, 3>> clauses)
    : variables_(variables), clauses_(std::move(clauses)) {
    if (variables < 3) {
        throw InvalidLandscape("3-SAT needs at least 3 variables");
    }
    for (const auto& clause : clauses_) {
        for (const Literal& lit : clause) {
            if (lit.var < 0 || lit.var >= variables) {
                throw InvalidLandscape("clause literal out of variable range");
            }
        }
        if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
            clause[1].var == clause[2].var) {
            throw InvalidLandscape("clause must reference 3 distinct variables");
        }
    }
}

Integer SatInstance::size() const {
    Integer out(1);
    out <<= variables_;
    return out;
}

void SatInstance::require_enumerable() const {
    if (variables_ > 63) {
        throw BudgetExceeded("assignments of " + std::to_string(variables_) +
                             " variables do not fit 64-bit solution ids");
    }
}

Rational SatInstance::fitness(SolutionId s) const {
    require_enumerable();
    int satisfied = 0;
    for (const auto& clause : clauses_) {
        for (const Literal& lit : clause) {
            const bool value = (s >> lit.var) & 1U;
            if (value != lit.negated) {
                ++satisfied;
                break;
            }
        }
    }
    return Rational(satisfied);
}

std::vector<SolutionId> SatInstance::neighbours(SolutionId s) const {
    require_enumerable();
    std::vector<SolutionId> out;
    out.reserve(static_cast<std::size_t>(variables_));
    for (int v = 0; v < variables_; ++v) {
        out.push_back(s ^ (SolutionId{1} << v));
    }
    return out;
}

SatInstance make_random_3sat(int variables, int clause_count, std::uint64_t seed) {
    if (variables < 3) {
        throw InvalidLandscape("3-SAT needs at least 3 variables");
    }
    Rng rng(seed);
    std::vector<std::array<Literal, 3>> clauses;
    clauses.reserve(static_cast<std::size_t>(clause_count));
    const auto n = static_cast<std::uint64_t>(variables);
    for (int c = 0; c < clause_count; ++c) {
        std::array<int, 3> vars{};
        vars[0] = static_cast<int>(rng.below(n));
        do {
            vars[1] = static_cast<int>(rng.below(n));
        } while (vars[1] == vars[0]);
        do {
            vars[2] = static_cast<int>(rng.below(n));
        } while (vars[2] == vars[0] || vars[2] == vars[1]);
        std::array<Literal, 3> clause{};
        for (int i = 0; i < 3; ++i) {
            clause[static_cast<std::size_t>(i)] =
                Literal{vars[static_cast<std::size_t>(i)], (rng.next() & 1U) != 0};
        }
        clauses.push_back(clause);
    }
    return SatInstance(variables, std::move(clauses));
}

Rational flip_overlap_fraction(const SatInstance& instance) {
    const int m = instance.clause_count();
    if (m == 0) {
        return Rational(0);
    }
    std::vector<long long> occurrences(static_cast<std::size_t>(instance.variables()), 0);
    for (const auto& clause : instance.clauses()) {
        for (const Literal& lit : clause) {
            ++occurrences[static_cast<std::size_t>(lit.var)];
        }
    }
    Integer total(0);
    for (const long long occ : occurrences) {
        total += occ;
    }
    return Rational(total, Integer(instance.variables()) * m);
}

} // namespace fitland
