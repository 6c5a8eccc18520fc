#include "fitland/problems/tsp.hpp"

#include "fitland/errors.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <thread>

namespace fitland {

TspInstance make_tsp(int n, std::vector<std::vector<int>> dist) {
    if (n < 2) {
        throw InvalidLandscape("TSP needs at least 2 cities");
    }
    if (static_cast<int>(dist.size()) != n) {
        throw InvalidLandscape("distance matrix size does not match city count");
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(dist[static_cast<std::size_t>(a)].size()) != n) {
            throw InvalidLandscape("distance matrix is not square");
        }
        for (int b = 0; b < n; ++b) {
            const int d = dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (a == b ? d != 0 : d <= 0) {
                throw InvalidLandscape("distances must be positive off the zero diagonal");
            }
            if (d != dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) {
                throw InvalidLandscape("distance matrix is not symmetric");
            }
        }
    }
    return TspInstance{n, std::move(dist)};
}

TspInstance make_footnote_tsp(int n, int d) {
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    if (d <= 6 || pairs != 3LL * d + 6) {
        throw InvalidLandscape("inconsistent multiplicity: " + std::to_string(pairs) +
                               " pairs cannot take " + std::to_string(d) +
                               " values with the 6 lowest four times and the rest three times");
    }
    std::vector<int> sequence;
    sequence.reserve(static_cast<std::size_t>(pairs));
    for (int value = 1; value <= d; ++value) {
        const int multiplicity = value <= 6 ? 4 : 3;
        sequence.insert(sequence.end(), static_cast<std::size_t>(multiplicity), value);
    }
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    std::size_t next = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = sequence[next];
            dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = sequence[next];
            ++next;
        }
    }
    return make_tsp(n, std::move(dist));
}

TspInstance load_tsp_matrix(std::istream& in) {
    int n = 0;
    if (!(in >> n) || n < 2) {
        throw ParseError("TSP matrix file must start with the city count");
    }
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (!(in >> dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])) {
                throw ParseError("TSP matrix file ended early");
            }
        }
    }
    return make_tsp(n, std::move(dist));
}

std::vector<int> pair_distances(const TspInstance& instance) {
    std::vector<int> out;
    for (int a = 0; a < instance.n; ++a) {
        for (int b = a + 1; b < instance.n; ++b) {
            out.push_back(instance.distance(a, b));
        }
    }
    return out;
}

namespace {

/// Adds one count per route length for every tour 0 -> first -> (perms of
/// rest) -> 0.
void enumerate_branch(const TspInstance& inst, int first, std::vector<std::int64_t>& counts) {
    const int n = inst.n;
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 2));
    for (int c = 1; c < n; ++c) {
        if (c != first) {
            rest.push_back(c);
        }
    }
    const auto depth_max = rest.size();
    auto recurse = [&](auto&& self, std::size_t depth, int current, long long length) -> void {
        if (depth == depth_max) {
            counts[static_cast<std::size_t>(length + inst.distance(current, 0))] += 1;
            return;
        }
        for (std::size_t i = depth; i < depth_max; ++i) {
            std::swap(rest[depth], rest[i]);
            self(self, depth + 1, rest[depth], length + inst.distance(current, rest[depth]));
            std::swap(rest[depth], rest[i]);
        }
    };
    recurse(recurse, 0, first, inst.distance(0, first));
}

} // namespace

FitnessHistogram tsp_census(const TspInstance& instance, const EnumerationOptions& options,
                            int city_ceiling) {
    const int n = instance.n;
    if (n > city_ceiling) {
        throw BudgetExceeded("census of " + std::to_string(n) + " cities exceeds the ceiling of " +
                             std::to_string(city_ceiling));
    }
    int max_d = 0;
    for (const int d : pair_distances(instance)) {
        max_d = std::max(max_d, d);
    }
    const auto buckets = static_cast<std::size_t>(n) * static_cast<std::size_t>(max_d) + 1;

    const int branches = n - 1;
    int workers = options.workers > 0 ? options.workers
                                      : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, branches);

    std::vector<std::vector<std::int64_t>> partial(
        static_cast<std::size_t>(branches), std::vector<std::int64_t>(buckets, 0));
    auto run_worker = [&](int w) {
        for (int b = w; b < branches; b += workers) {
            enumerate_branch(instance, b + 1, partial[static_cast<std::size_t>(b)]);
        }
    };
    if (workers <= 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back(run_worker, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::map<Level, Rational> merged;
    for (std::size_t length = 0; length < buckets; ++length) {
        std::int64_t count = 0;
        for (const auto& branch : partial) {
            count += branch[length];
        }
        if (count > 0) {
            // Canonical level of a minimized route length is its negation.
            merged[-static_cast<Level>(length)] += Rational(count);
        }
    }
    return FitnessHistogram::from_level_counts(Sense::minimize, merged);
}

TspProblem::TspProblem(TspInstance instance) : instance_(std::move(instance)), size_(1) {
    const int k = instance_.n - 1;
    factorial_.assign(static_cast<std::size_t>(k), 1);
    for (int i = 1; i < k; ++i) {
        factorial_[static_cast<std::size_t>(i)] =
            factorial_[static_cast<std::size_t>(i - 1)] * static_cast<SolutionId>(i);
    }
    for (int i = 2; i <= k; ++i) {
        size_ *= i;
    }
    if (instance_.n > 21) {
        throw InvalidLandscape("enumerable TSP view supports at most 21 cities");
    }
}

std::vector<int> TspProblem::tour(SolutionId s) const {
    const int k = instance_.n - 1;
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(k));
    for (int c = 1; c <= k; ++c) {
        pool.push_back(c);
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        const SolutionId f = factorial_[static_cast<std::size_t>(i)];
        const auto idx = static_cast<std::size_t>(s / f);
        s %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

SolutionId TspProblem::rank_of(const std::vector<int>& tour) const {
    const int k = instance_.n - 1;
    std::vector<int> pool;
    for (int c = 1; c <= k; ++c) {
        pool.push_back(c);
    }
    SolutionId rank = 0;
    for (int i = 0; i < k; ++i) {
        const auto it = std::find(pool.begin(), pool.end(), tour[static_cast<std::size_t>(i)]);
        const auto idx = static_cast<SolutionId>(it - pool.begin());
        rank += idx * factorial_[static_cast<std::size_t>(k - 1 - i)];
        pool.erase(it);
    }
    return rank;
}

long long TspProblem::route_length(const std::vector<int>& tour) const {
    long long length = instance_.distance(0, tour.front());
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
        length += instance_.distance(tour[i], tour[i + 1]);
    }
    return length + instance_.distance(tour.back(), 0);
}

Rational TspProblem::fitness(SolutionId s) const {
    return Rational(route_length(tour(s)));
}

std::vector<SolutionId> TspProblem::neighbours(SolutionId s) const {
    const std::vector<int> base = tour(s);
    const std::size_t k = base.size();
    std::vector<SolutionId> out;
    std::vector<int> candidate(base);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            std::reverse(candidate.begin() + static_cast<std::ptrdiff_t>(i),
                         candidate.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            out.push_back(rank_of(candidate));
            candidate = base;
        }
    }
    return out;
}

} // namespace fitland
