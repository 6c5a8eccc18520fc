#include "fitland/synth.hpp"

#include "fitland/errors.hpp"
#include "fitland/rng.hpp"

#include <algorithm>

namespace fitland {

namespace {

Rational clamp01(const Rational& r) {
    if (r < 0) {
        return Rational(0);
    }
    if (r > 1) {
        return Rational(1);
    }
    return r;
}

void require_levels(const SynthSpec& spec, Level minimum) {
    if (spec.levels < minimum) {
        throw InvalidLandscape("spec needs at least " + std::to_string(minimum) + " levels");
    }
    if (spec.mode_pos < 0 || spec.mode_pos >= spec.levels) {
        throw InvalidLandscape("mode position outside the level range");
    }
}

/// Decaying positive sequence a * rho^(delta-1) over delta = 1..cap.
std::vector<Rational> sample_decay(Rng& rng, Level cap) {
    const Rational a(1 + rng.below(2), 8 + rng.below(9));
    const std::uint64_t num = 1 + rng.below(3);
    const Rational rho(num, num + 1 + rng.below(3));
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(cap));
    Rational g = a;
    for (Level d = 1; d <= cap; ++d) {
        out.push_back(g);
        g *= rho;
    }
    return out;
}

std::vector<Rational> sample_gap_profile(Rng& rng, Level cap, GapProfileKind kind) {
    std::vector<Rational> gap = sample_decay(rng, cap);
    if (kind == GapProfileKind::strictly_positive || cap < 2) {
        return gap;
    }
    // Shift down so the tail crosses zero while the total stays nonnegative.
    const auto x = static_cast<std::size_t>(1 + rng.below(static_cast<std::uint64_t>(cap - 1)));
    Rational total(0);
    for (const Rational& g : gap) {
        total += g;
    }
    Rational shift = (gap[x - 1] + gap[x]) / 2;
    shift = std::min(shift, Rational(total / cap));
    for (Rational& g : gap) {
        g -= shift;
    }
    return gap;
}

bool all_levels_occupied(const FitnessHistogram& hist) {
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        if (hist.count(v) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string to_string(Violation violation) {
    switch (violation) {
    case Violation::none:
        return "none";
    case Violation::break_nsf:
        return "break-nsf";
    case Violation::break_cm:
        return "break-cm";
    case Violation::break_unskewed:
        return "break-unskewed";
    }
    return "?";
}

Violation violation_from_string(const std::string& text) {
    if (text == "none") {
        return Violation::none;
    }
    if (text == "break-nsf") {
        return Violation::break_nsf;
    }
    if (text == "break-cm") {
        return Violation::break_cm;
    }
    if (text == "break-unskewed") {
        return Violation::break_unskewed;
    }
    throw ParseError("unknown violation mode: " + text);
}

FitnessHistogram generate_cm_histogram(const SynthSpec& spec) {
    require_levels(spec, 3);
    Rng rng = substream(spec.seed, 0);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(spec.levels), 0);
    const auto mode = static_cast<std::size_t>(spec.mode_pos);
    const auto top = static_cast<std::size_t>(spec.levels - 1);
    counts[top] = 1 + rng.below(5);
    for (std::size_t v = top; v > mode; --v) {
        counts[v - 1] = counts[v] + 1 + rng.below(10);
    }
    for (std::size_t v = 0; v < mode; ++v) {
        counts[v] = 1 + rng.below(counts[mode]);
    }
    std::vector<Rational> dense(counts.begin(), counts.end());
    return FitnessHistogram(make_grid(Sense::maximize, 0, spec.levels - 1), std::move(dense));
}

FitnessHistogram generate_dip_histogram(const SynthSpec& spec) {
    if (spec.levels < 5) {
        throw InvalidLandscape("dip histogram needs at least 5 levels");
    }
    Rng rng = substream(spec.seed, 2);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(spec.levels), 0);
    const auto top = static_cast<std::size_t>(spec.levels - 1);
    counts[0] = 50 + rng.below(50);
    for (std::size_t v = 1; v + 2 <= top; ++v) {
        counts[v] = std::max<std::uint64_t>(2, std::min(counts[v - 1] - 1, counts[v - 1] / 2));
    }
    counts[top - 1] = 1;
    counts[top] = counts[0] - 1 - rng.below(counts[0] / 4);
    std::vector<Rational> dense(counts.begin(), counts.end());
    return FitnessHistogram(make_grid(Sense::maximize, 0, spec.levels - 1), std::move(dense));
}

AggregateLandscape aggregate_from_gap_profile(const FitnessHistogram& hist,
                                              const std::vector<Rational>& gap, SplitRule split,
                                              bool scale_to_unit) {
    const auto levels = static_cast<std::size_t>(hist.grid().size());
    const auto cap = static_cast<Level>(gap.size());
    std::vector<std::vector<Rational>> nf(levels, std::vector<Rational>(levels, Rational(0)));
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        if (hist.count(v) == 0) {
            continue;
        }
        const auto row = static_cast<std::size_t>(v - hist.v_min());
        std::vector<Rational> pn(static_cast<std::size_t>(cap));
        Rational pn_total(0);
        for (Level d = 1; d <= cap; ++d) {
            pn[static_cast<std::size_t>(d - 1)] =
                clamp01(p_delta(hist, v, d) + gap[static_cast<std::size_t>(d - 1)]);
            pn_total += pn[static_cast<std::size_t>(d - 1)];
        }
        if (pn_total > 1) {
            if (!scale_to_unit) {
                throw InfeasibleProfile("neighbour shares at level " + std::to_string(v) +
                                        " exceed unit mass");
            }
            for (Rational& share : pn) {
                share /= pn_total;
            }
            pn_total = 1;
        }
        nf[row][row] += 1 - pn_total; // residual mass at delta = 0
        for (Level d = 1; d <= cap; ++d) {
            const Rational& mass = pn[static_cast<std::size_t>(d - 1)];
            if (mass == 0) {
                continue;
            }
            const auto better_share = p_plus_delta(hist, v, d);
            if (!better_share) {
                throw InfeasibleProfile("neighbour mass at distance " + std::to_string(d) +
                                        " from level " + std::to_string(v) +
                                        " with no solutions at either side");
            }
            Rational up = split == SplitRule::unskewed
                              ? mass * *better_share
                              : (hist.grid().contains(v + d) ? mass : Rational(0));
            const Rational down = mass - up;
            if (up > 0) {
                nf[row][static_cast<std::size_t>(v + d - hist.v_min())] += up;
            }
            if (down > 0) {
                nf[row][static_cast<std::size_t>(v - d - hist.v_min())] += down;
            }
        }
    }
    return AggregateLandscape(hist, std::move(nf), /*integer_realizable=*/false);
}

AggregateLandscape generate_nsf_unskewed(const FitnessHistogram& hist, const SynthSpec& spec) {
    if (!all_levels_occupied(hist)) {
        throw InvalidLandscape("generator requires every level occupied");
    }
    if (check_cardinality_monotonic(hist, /*strict=*/true).verdict != Verdict::holds) {
        throw InvalidLandscape("generator requires a strictly cardinality-monotonic histogram");
    }
    const Level cap = hist.v_max() - good_enough(hist);
    if (cap < 1) {
        // Empty delta range: all neighbour mass at delta = 0.
        return aggregate_from_gap_profile(hist, {});
    }
    Rng rng = substream(spec.seed, 1);
    const std::vector<Rational> gap = sample_gap_profile(rng, cap, spec.profile);
    AggregateLandscape agg = aggregate_from_gap_profile(hist, gap);
    if (check_nsf(agg).verdict != Verdict::holds) {
        throw InfeasibleProfile("clamping destroyed an NSF clause");
    }
    return agg;
}

AggregateLandscape uniform_neighbourhood(const FitnessHistogram& hist) {
    const auto levels = static_cast<std::size_t>(hist.grid().size());
    std::vector<std::vector<Rational>> nf(levels, std::vector<Rational>(levels, Rational(0)));
    bool integral = true;
    for (Level w = hist.v_min(); w <= hist.v_max(); ++w) {
        integral = integral && is_integral(hist.count(w));
    }
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        if (hist.count(v) == 0) {
            continue;
        }
        const auto row = static_cast<std::size_t>(v - hist.v_min());
        for (Level w = hist.v_min(); w <= hist.v_max(); ++w) {
            nf[row][static_cast<std::size_t>(w - hist.v_min())] = hist.count(w);
        }
    }
    return AggregateLandscape(hist, std::move(nf), integral);
}

AggregateLandscape generate_landscape(const SynthSpec& spec) {
    switch (spec.violation) {
    case Violation::none:
        return generate_nsf_unskewed(generate_cm_histogram(spec), spec);
    case Violation::break_nsf: {
        const FitnessHistogram hist = generate_cm_histogram(spec);
        const Level cap = std::max<Level>(hist.v_max() - good_enough(hist), 1);
        Rng rng = substream(spec.seed, 3);
        // Zero gap at delta 1 (so clause b cannot hold); excess mass at the
        // largest distance when the range allows it.
        std::vector<Rational> gap(static_cast<std::size_t>(cap), Rational(0));
        if (cap >= 2) {
            gap.back() = Rational(1 + rng.below(2), 8 + rng.below(9));
        }
        AggregateLandscape agg =
            aggregate_from_gap_profile(hist, gap, SplitRule::unskewed, /*scale_to_unit=*/true);
        if (check_nsf(agg).verdict != Verdict::fails) {
            throw InfeasibleProfile("break-nsf draw did not violate NSF");
        }
        return agg;
    }
    case Violation::break_cm: {
        const FitnessHistogram hist = generate_dip_histogram(spec);
        const Level cap = hist.v_max() - good_enough(hist);
        if (cap < 2) {
            throw InfeasibleProfile("dip histogram left no room for a crossover");
        }
        Rng rng = substream(spec.seed, 4);
        // Positive head, constant negative tail, nonnegative total.
        const Rational head(1 + rng.below(2), 8 + rng.below(9));
        std::vector<Rational> gap(static_cast<std::size_t>(cap),
                                  -head * 7 / (8 * (cap - 1)));
        gap.front() = head;
        AggregateLandscape agg = aggregate_from_gap_profile(hist, gap);
        if (check_nsf(agg).verdict != Verdict::holds) {
            throw InfeasibleProfile("clamping destroyed an NSF clause");
        }
        return agg;
    }
    case Violation::break_unskewed: {
        const FitnessHistogram hist = generate_cm_histogram(spec);
        const Level cap = std::max<Level>(hist.v_max() - good_enough(hist), 1);
        Rng rng = substream(spec.seed, 5);
        const std::vector<Rational> gap = sample_gap_profile(rng, cap, spec.profile);
        AggregateLandscape agg = aggregate_from_gap_profile(hist, gap, SplitRule::all_better);
        if (check_unskewed(agg, Rational(0)).verdict != Verdict::fails) {
            throw InfeasibleProfile("break-unskewed draw stayed unskewed");
        }
        return agg;
    }
    }
    throw InvalidLandscape("unknown violation mode");
}

TheoremSuite run_theorem_suite(int count, std::uint64_t base_seed, Violation violation) {
    TheoremSuite suite;
    suite.requested = count;
    for (int i = 0; i < count; ++i) {
        SynthSpec spec;
        spec.violation = violation;
        // break-cm keeps the delta range at 2: a longer constant tail gets
        // reordered by clamping near the dip and rarely stays a valid NSF
        // profile.
        spec.levels = violation == Violation::break_cm ? 5 + (i % 2) : 4 + (i % 7);
        spec.mode_pos =
            (violation != Violation::break_cm && i % 5 == 2 && spec.levels >= 5) ? 1 + (i % 2) : 0;
        spec.profile =
            (i % 2 == 0) ? GapProfileKind::geometric_crossover : GapProfileKind::strictly_positive;

        std::optional<AggregateLandscape> agg;
        Rng seeder = substream(base_seed, static_cast<std::uint64_t>(i));
        for (int attempt = 0; attempt < 200 && !agg; ++attempt) {
            spec.seed = seeder.next();
            try {
                agg = generate_landscape(spec);
            } catch (const InfeasibleProfile&) {
                ++suite.infeasible_retries;
            }
        }
        if (!agg) {
            throw InfeasibleProfile("no feasible landscape after 200 attempts for case " +
                                    std::to_string(i));
        }
        ++suite.accepted;

        TheoremCase item;
        item.spec = spec;
        item.grid = agg->grid();
        item.report = verify_theorem1(*agg);
        item.premises_hold = item.report.verdict != Verdict::not_applicable;
        item.conclusion_holds = item.report.details.at("conclusion_from_v_ge") == "holds";
        if (!item.premises_hold) {
            ++suite.premise_failures;
        }
        if (!item.conclusion_holds) {
            ++suite.conclusion_failures;
        }
        if (item.premises_hold && item.report.verdict != Verdict::holds) {
            ++suite.counterexamples;
            item.landscape = std::move(agg);
        }
        suite.cases.push_back(std::move(item));
    }
    return suite;
}

} // namespace fitland
