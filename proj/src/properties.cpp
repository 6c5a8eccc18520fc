#include "fitland/properties.hpp"

#include "fitland/errors.hpp"

#include <sstream>

namespace fitland {

namespace {

Rational abs_rational(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

PropertyReport make_report(PropertyKind kind, std::string name, const FitnessHistogram& hist) {
    PropertyReport report;
    report.kind = kind;
    report.name = std::move(name);
    report.v_mode = modal_fitness(hist);
    report.v_ge = good_enough(hist);
    report.details["v_ge_rule"] = "v_mode + ceil((v_max - v_mode)/2), rounded toward the optimum";
    return report;
}

void fail(PropertyReport& report, Witness witness) {
    report.verdict = Verdict::fails;
    report.witness = std::move(witness);
}

/// Effectiveness at v as a plain predicate; empty levels cannot be certified.
bool effective_at_level(const AggregateLandscape& agg, Level v, Witness* why) {
    if (agg.hist().count(v) == 0) {
        if (why) {
            *why = Witness{v, 0, Rational(0), Rational(0), "empty level: pn_plus undefined"};
        }
        return false;
    }
    const Rational pn = pn_plus(agg, v);
    const Rational p = p_plus(agg.hist(), v);
    if (pn > p) {
        return true;
    }
    if (why) {
        *why = Witness{v, 0, pn, p, "pn_plus(v) > p_plus(v)"};
    }
    return false;
}

} // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
    case Verdict::holds:
        return "holds";
    case Verdict::fails:
        return "fails";
    case Verdict::not_applicable:
        return "not-applicable";
    }
    return "?";
}

Level modal_fitness(const FitnessHistogram& hist) {
    Level best = hist.v_min();
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        if (hist.count(v) >= hist.count(best)) {
            best = v;
        }
    }
    return best;
}

Level good_enough(const FitnessHistogram& hist) {
    const Level mode = modal_fitness(hist);
    const Level gap = hist.v_max() - mode;
    return mode + (gap + 1) / 2;
}

PropertyReport check_cardinality_monotonic(const FitnessHistogram& hist, bool strict) {
    PropertyReport report = make_report(
        PropertyKind::cardinality_monotonic,
        strict ? "cardinality_monotonic(strict)" : "cardinality_monotonic(nonstrict)", hist);
    report.verdict = Verdict::holds;
    for (Level v = *report.v_mode; v < hist.v_max(); ++v) {
        const Rational& cur = hist.count(v);
        const Rational& next = hist.count(v + 1);
        const bool violated = strict ? next >= cur : next > cur;
        if (violated) {
            fail(report, Witness{v, v + 1, cur, next,
                                 strict ? "count(v') < count(v)" : "count(v') <= count(v)"});
            break;
        }
    }
    return report;
}

PropertyReport check_unskewed(const AggregateLandscape& agg, const Rational& tolerance) {
    const FitnessHistogram& hist = agg.hist();
    PropertyReport report = make_report(PropertyKind::unskewed, "unskewed", hist);
    report.details["tolerance"] = compact_string(tolerance);
    report.verdict = Verdict::holds;
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        if (hist.count(v) == 0) {
            continue;
        }
        const Level max_delta = std::max(v - hist.v_min(), hist.v_max() - v);
        for (Level delta = 1; delta <= max_delta; ++delta) {
            const Rational up = agg.nf_or_zero(v, v + delta);
            const Rational two_sided = up + agg.nf_or_zero(v, v - delta);
            if (two_sided == 0) {
                continue;
            }
            const Rational pn_side = up / two_sided;
            const auto p_side = p_plus_delta(hist, v, delta);
            // Neighbour mass implies occupied levels, so p_side is defined.
            if (!p_side || abs_rational(pn_side - *p_side) > tolerance) {
                fail(report, Witness{v, delta, pn_side, p_side.value_or(Rational(0)),
                                     "pn_plus(v,d) == p_plus(v,d)"});
                return report;
            }
        }
    }
    return report;
}

PropertyReport check_nsf(const AggregateLandscape& agg) {
    const FitnessHistogram& hist = agg.hist();
    PropertyReport report = make_report(PropertyKind::nsf, "nsf", hist);
    report.verdict = Verdict::holds;
    const Level cap = hist.v_max() - *report.v_ge;
    if (cap < 1) {
        report.details["note"] = "delta range is empty (v_ge = v_max)";
        return report;
    }
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        if (hist.count(v) == 0) {
            continue;
        }
        const DeltaProfile profile = delta_profile(agg, v, *report.v_ge);
        std::vector<Rational> gap;
        gap.reserve(static_cast<std::size_t>(cap));
        for (Level d = 1; d <= cap; ++d) {
            gap.push_back(profile.at(profile.pn, d) - profile.at(profile.p, d));
        }
        if (!(gap.front() > 0)) {
            fail(report, Witness{v, 1, profile.at(profile.pn, 1), profile.at(profile.p, 1),
                                 "b:pn(v,1) > p(v,1)"});
            return report;
        }
        for (Level d = 1; d < cap; ++d) {
            const auto i = static_cast<std::size_t>(d - 1);
            if (gap[i + 1] > gap[i]) {
                fail(report,
                     Witness{v, d + 1, gap[i + 1], gap[i], "a:gap non-increasing over delta"});
                return report;
            }
        }
        Rational total(0);
        for (const Rational& g : gap) {
            total += g;
        }
        if (total < 0) {
            fail(report, Witness{v, 0, total, Rational(0), "c:total gap nonnegative"});
            return report;
        }
    }
    return report;
}

PropertyReport check_effective_at(const AggregateLandscape& agg, Level v) {
    const FitnessHistogram& hist = agg.hist();
    if (hist.count(v) == 0) {
        throw EmptyLevel("no solutions at level " + std::to_string(v));
    }
    PropertyReport report =
        make_report(PropertyKind::effective_at, "effective_at(" + std::to_string(v) + ")", hist);
    Witness why;
    if (effective_at_level(agg, v, &why)) {
        report.verdict = Verdict::holds;
    } else {
        fail(report, std::move(why));
    }
    return report;
}

PropertyReport check_effective_landscape(const AggregateLandscape& agg) {
    const FitnessHistogram& hist = agg.hist();
    PropertyReport report =
        make_report(PropertyKind::effective_landscape, "effective_landscape", hist);
    report.verdict = Verdict::holds;
    for (Level v = *report.v_ge; v < hist.v_max(); ++v) {
        Witness why;
        if (!effective_at_level(agg, v, &why)) {
            fail(report, std::move(why));
            break;
        }
    }
    // Smallest level from which effectiveness holds on [v, v_max).
    Level from = hist.v_max();
    while (from > hist.v_min() && effective_at_level(agg, from - 1, nullptr)) {
        --from;
    }
    report.details["effective_from"] = std::to_string(from);
    return report;
}

PropertyReport check_lemma1(const FitnessHistogram& hist) {
    PropertyReport report = make_report(PropertyKind::lemma1, "lemma1", hist);
    report.verdict = Verdict::holds;
    const Level v_ge = *report.v_ge;
    const Level cap = hist.v_max() - v_ge;
    for (Level v = v_ge + 1; v <= hist.v_max(); ++v) {
        std::optional<Rational> previous;
        for (Level delta = 1; delta <= cap; ++delta) {
            const auto current = p_plus_delta(hist, v, delta);
            if (current && delta > hist.v_max() - v && *current != 0) {
                fail(report,
                     Witness{v, delta, *current, Rational(0), "p_plus(v,d) = 0 past the optimum"});
                return report;
            }
            if (previous && current && *current > *previous) {
                fail(report, Witness{v, delta, *current, *previous,
                                     "p_plus(v,d+1) <= p_plus(v,d)"});
                return report;
            }
            previous = current;
        }
    }
    return report;
}

PropertyReport verify_theorem1(const AggregateLandscape& agg) {
    const FitnessHistogram& hist = agg.hist();
    PropertyReport report = make_report(PropertyKind::theorem1, "theorem1", hist);
    const Level v_ge = *report.v_ge;

    const PropertyReport cm = check_cardinality_monotonic(hist, /*strict=*/true);
    const PropertyReport nsf = check_nsf(agg);
    const PropertyReport unskewed = check_unskewed(agg, Rational(0));
    report.details["premise_cardinality_monotonic_strict"] = to_string(cm.verdict);
    report.details["premise_nsf"] = to_string(nsf.verdict);
    report.details["premise_unskewed"] = to_string(unskewed.verdict);
    const bool premises = cm.verdict == Verdict::holds && nsf.verdict == Verdict::holds &&
                          unskewed.verdict == Verdict::holds;

    // Conclusion over the inclusive range [v_ge, v_max); the strict-above
    // variant is recorded alongside.
    std::optional<Witness> conclusion_witness;
    bool inclusive = true;
    bool exclusive = true;
    for (Level v = v_ge; v < hist.v_max(); ++v) {
        Witness why;
        if (!effective_at_level(agg, v, &why)) {
            if (v > v_ge) {
                exclusive = false;
            }
            inclusive = false;
            if (!conclusion_witness) {
                why.clause = "conclusion: " + why.clause;
                conclusion_witness = std::move(why);
            }
        }
    }
    report.details["conclusion_from_v_ge"] = inclusive ? "holds" : "fails";
    report.details["conclusion_above_v_ge"] = exclusive ? "holds" : "fails";

    // With an unskewed neighbourhood, pn_plus(v) must equal its
    // delta-resolved decomposition exactly.
    bool decomposition_ok = true;
    std::optional<Witness> decomposition_witness;
    if (unskewed.verdict == Verdict::holds) {
        for (Level v = v_ge; v < hist.v_max(); ++v) {
            if (hist.count(v) == 0) {
                continue;
            }
            const DeltaProfile profile = delta_profile(agg, v, v_ge);
            Rational sum(0);
            for (Level d = 1; d <= profile.delta_cap; ++d) {
                const auto& share = profile.p_plus[static_cast<std::size_t>(d - 1)];
                if (share) {
                    sum += profile.at(profile.pn, d) * *share;
                }
            }
            const Rational direct = pn_plus(agg, v);
            if (sum != direct) {
                decomposition_ok = false;
                decomposition_witness =
                    Witness{v, 0, direct, sum, "decomposition: pn_plus(v) = sum pn(v,d)*p_plus(v,d)"};
                break;
            }
        }
        report.details["decomposition_exact"] = decomposition_ok ? "holds" : "fails";
    }

    // Diagnostic: last delta with a strictly positive gap prefix, per level.
    if (nsf.verdict == Verdict::holds && hist.v_max() - v_ge >= 1) {
        std::ostringstream crossover;
        for (Level v = v_ge; v < hist.v_max(); ++v) {
            if (hist.count(v) == 0) {
                continue;
            }
            const DeltaProfile profile = delta_profile(agg, v, v_ge);
            Level x = 0;
            for (Level d = 1; d <= profile.delta_cap; ++d) {
                if (profile.at(profile.pn, d) - profile.at(profile.p, d) > 0) {
                    x = d;
                } else {
                    break;
                }
            }
            if (crossover.tellp() > 0) {
                crossover << ",";
            }
            crossover << v << ":" << x;
        }
        report.details["gap_crossover"] = crossover.str();
    }

    if (!premises) {
        report.verdict = Verdict::not_applicable;
    } else if (!inclusive) {
        fail(report, std::move(*conclusion_witness));
    } else if (!decomposition_ok) {
        fail(report, std::move(*decomposition_witness));
    } else {
        report.verdict = Verdict::holds;
    }
    return report;
}

PropertyReport check_permutation_closure(const FitnessHistogram& before,
                                         const FitnessHistogram& after) {
    if (before.grid() != after.grid()) {
        throw GridMismatch("histograms to compare live on different grids");
    }
    PropertyReport report =
        make_report(PropertyKind::permutation_closure, "permutation_closure", before);
    report.verdict = Verdict::holds;
    for (Level v = before.v_min(); v <= before.v_max(); ++v) {
        if (before.count(v) != after.count(v)) {
            fail(report,
                 Witness{v, 0, before.count(v), after.count(v), "count unchanged at every level"});
            break;
        }
    }
    for (const bool strict : {false, true}) {
        const Verdict b = check_cardinality_monotonic(before, strict).verdict;
        const Verdict a = check_cardinality_monotonic(after, strict).verdict;
        const std::string key =
            strict ? "cardinality_monotonic_strict" : "cardinality_monotonic_nonstrict";
        report.details[key + "_agrees"] = (a == b) ? "yes" : "no";
    }
    return report;
}

} // namespace fitland
