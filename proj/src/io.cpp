#include "fitland/io.hpp"

#include "fitland/errors.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace fitland {

namespace {

std::string decimal(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_number_unsigned()) {
        return Rational(j.get<std::uint64_t>());
    }
    throw ParseError("expected a rational (string or integer), got: " + j.dump());
}

nlohmann::ordered_json base_landscape_json(const FitnessHistogram& hist) {
    nlohmann::ordered_json j;
    j["sense"] = to_string(hist.grid().sense);
    auto levels = nlohmann::ordered_json::array();
    auto counts = nlohmann::ordered_json::array();
    for (Level v = hist.v_min(); v <= hist.v_max(); ++v) {
        levels.push_back(fraction_string(hist.grid().original(v)));
        counts.push_back(fraction_string(hist.count(v)));
    }
    j["levels"] = std::move(levels);
    j["counts"] = std::move(counts);
    return j;
}

FitnessGrid grid_from_levels(Sense sense, const std::vector<Rational>& originals) {
    Rational step(1);
    if (originals.size() > 1) {
        const Rational diff = originals[1] - originals[0];
        const bool ascending = sense == Sense::maximize;
        if ((ascending && diff <= 0) || (!ascending && diff >= 0)) {
            throw ParseError("levels must run from worst to best original value");
        }
        step = ascending ? diff : -diff;
        for (std::size_t i = 1; i < originals.size(); ++i) {
            if (originals[i] - originals[i - 1] != (ascending ? step : -step)) {
                throw ParseError("levels are not an arithmetic progression");
            }
        }
    }
    // Recover absolute level numbers when the originals sit on the
    // zero-anchored lattice (they do for every grid this toolkit emits);
    // otherwise re-base at v_min = 0.
    const Rational q = sense == Sense::maximize ? Rational(originals[0] / step)
                                                : Rational(-originals[0] / step);
    Level v_min = 0;
    Rational offset = originals[0];
    if (is_integral(q)) {
        v_min = numerator(q).convert_to<Level>();
        offset = 0;
    }
    return make_grid(sense, v_min, v_min + static_cast<Level>(originals.size()) - 1, offset, step);
}

std::string witness_summary(const Witness& w) {
    std::ostringstream out;
    out << w.clause << " violated at v=" << w.v;
    if (w.delta != 0) {
        out << ", d=" << w.delta;
    }
    out << " (" << compact_string(w.lhs) << " vs " << compact_string(w.rhs) << ")";
    return out.str();
}

nlohmann::ordered_json estimate_to_json(const Estimate& e) {
    nlohmann::ordered_json j;
    j["trials"] = e.trials;
    j["successes"] = e.successes;
    j["value"] = e.value;
    j["std_error"] = e.std_error;
    return j;
}

} // namespace

nlohmann::ordered_json histogram_to_json(const FitnessHistogram& hist) {
    nlohmann::ordered_json j = base_landscape_json(hist);
    bool integral = true;
    for (const Rational& c : hist.counts()) {
        integral = integral && is_integral(c);
    }
    j["integer_realizable"] = integral;
    return j;
}

nlohmann::ordered_json aggregate_to_json(const AggregateLandscape& agg) {
    nlohmann::ordered_json j = base_landscape_json(agg.hist());
    auto nf = nlohmann::ordered_json::array();
    for (Level v = agg.v_min(); v <= agg.v_max(); ++v) {
        auto row = nlohmann::ordered_json::array();
        for (Level w = agg.v_min(); w <= agg.v_max(); ++w) {
            row.push_back(fraction_string(agg.nf(v, w)));
        }
        nf.push_back(std::move(row));
    }
    j["nf"] = std::move(nf);
    j["integer_realizable"] = agg.integer_realizable();
    return j;
}

LoadedLandscape landscape_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("sense") || !j.contains("levels") ||
            !j.contains("counts")) {
            throw ParseError("landscape JSON needs sense, levels and counts");
        }
        const Sense sense = sense_from_string(j.at("sense").get<std::string>());
        std::vector<Rational> originals;
        for (const auto& item : j.at("levels")) {
            originals.push_back(rational_from_json(item));
        }
        if (originals.empty()) {
            throw ParseError("landscape has no levels");
        }
        std::vector<Rational> counts;
        for (const auto& item : j.at("counts")) {
            counts.push_back(rational_from_json(item));
        }
        if (counts.size() != originals.size()) {
            throw ParseError("counts and levels disagree in length");
        }
        FitnessHistogram hist(grid_from_levels(sense, originals), std::move(counts));

        std::optional<AggregateLandscape> agg;
        if (j.contains("nf") && !j.at("nf").is_null()) {
            std::vector<std::vector<Rational>> nf;
            for (const auto& row : j.at("nf")) {
                std::vector<Rational> parsed_row;
                for (const auto& item : row) {
                    parsed_row.push_back(rational_from_json(item));
                }
                nf.push_back(std::move(parsed_row));
            }
            const bool realizable = j.value("integer_realizable", false);
            agg.emplace(hist, std::move(nf), realizable);
        }
        return LoadedLandscape{std::move(hist), std::move(agg)};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed landscape JSON: ") + e.what());
    }
}

std::string histogram_csv(const FitnessHistogram& hist) {
    std::ostringstream out;
    out << "fitness,count,proportion,cum_better\n";
    for (Level v = hist.v_max(); v >= hist.v_min(); --v) {
        const GlobalProportions gp = global_proportions(hist, v);
        out << compact_string(hist.grid().original(v)) << "," << compact_string(hist.count(v))
            << "," << decimal(to_double(gp.p)) << "," << decimal(to_double(gp.p_plus)) << "\n";
    }
    return out.str();
}

nlohmann::ordered_json report_to_json(const PropertyReport& report, const FitnessGrid& grid) {
    nlohmann::ordered_json j;
    j["property"] = report.name;
    j["verdict"] = to_string(report.verdict);
    if (report.v_mode) {
        j["v_mode_level"] = *report.v_mode;
        j["v_mode"] = fraction_string(grid.original(*report.v_mode));
    }
    if (report.v_ge) {
        j["v_ge_level"] = *report.v_ge;
        j["v_ge"] = fraction_string(grid.original(*report.v_ge));
    }
    if (report.witness) {
        nlohmann::ordered_json w;
        w["v_level"] = report.witness->v;
        w["v"] = fraction_string(grid.original(report.witness->v));
        w["delta"] = report.witness->delta;
        w["lhs"] = fraction_string(report.witness->lhs);
        w["rhs"] = fraction_string(report.witness->rhs);
        w["clause"] = report.witness->clause;
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["details"] = report.details;
    return j;
}

std::string report_table(const std::vector<PropertyReport>& reports, const FitnessGrid& grid) {
    std::size_t width = 8;
    for (const auto& r : reports) {
        width = std::max(width, r.name.size());
    }
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.name << std::string(width - r.name.size() + 2, ' ') << to_string(r.verdict);
        if (r.witness) {
            out << "  [" << witness_summary(*r.witness) << "]";
        } else if (r.kind == PropertyKind::effective_landscape) {
            const auto it = r.details.find("effective_from");
            if (it != r.details.end()) {
                out << "  [effective from level " << it->second << " = "
                    << compact_string(grid.original(std::stoll(it->second))) << "]";
            }
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json census_summary(const FitnessHistogram& hist, const std::string& label) {
    const FitnessGrid& grid = hist.grid();
    const Level mode = modal_fitness(hist);
    const Level v_ge = good_enough(hist);
    Rational good(0);
    for (Level v = v_ge; v <= hist.v_max(); ++v) {
        good += hist.count(v);
    }
    const Rational proportion = good / hist.total();
    const Rational strictly_better = p_plus(hist, v_ge);

    nlohmann::ordered_json j;
    j["problem"] = label;
    j["sense"] = to_string(grid.sense);
    j["size"] = compact_string(hist.total());
    const Rational best = grid.original(hist.v_max());
    const Rational worst = grid.original(hist.v_min());
    j["min"] = compact_string(grid.sense == Sense::maximize ? worst : best);
    j["max"] = compact_string(grid.sense == Sense::maximize ? best : worst);
    j["mode"] = compact_string(grid.original(mode));
    j["v_ge"] = compact_string(grid.original(v_ge));
    j["proportion_good_enough"] = fraction_string(proportion);
    j["proportion_good_enough_decimal"] = to_double(proportion);
    j["proportion_better_than_v_ge"] = fraction_string(strictly_better);
    j["proportion_better_than_v_ge_decimal"] = to_double(strictly_better);
    return j;
}

nlohmann::ordered_json comparison_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["runs"] = report.runs;
    j["budget"] = report.budget;
    j["pivot"] = to_string(report.pivot);
    j["seed"] = report.seed;
    auto levels = nlohmann::ordered_json::array();
    for (const auto& cmp : report.levels) {
        nlohmann::ordered_json row;
        row["level"] = cmp.level;
        row["neighbour_estimate"] = estimate_to_json(cmp.neighbour_estimate);
        row["random_estimate"] = estimate_to_json(cmp.random_estimate);
        row["analytic_pn_plus"] = fraction_string(cmp.analytic_pn_plus);
        row["analytic_p_plus"] = fraction_string(cmp.analytic_p_plus);
        row["exact_neighbour_mean"] = fraction_string(cmp.exact_neighbour_mean);
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    auto runs = [&](const RunStats& stats) {
        nlohmann::ordered_json r;
        r["mean_best"] = stats.mean_best;
        auto best = nlohmann::ordered_json::array();
        for (const Rational& b : stats.best_fitness) {
            best.push_back(fraction_string(b));
        }
        r["best_fitness"] = std::move(best);
        return r;
    };
    j["hill_climb"] = runs(report.hill_climb);
    j["random_search"] = runs(report.random_search);
    return j;
}

std::string traces_csv(const ComparisonReport& report) {
    std::ostringstream out;
    out << "run,step,fitness,evals\n";
    for (std::size_t run = 0; run < report.traces.size(); ++run) {
        const auto& trace = report.traces[run];
        for (std::size_t step = 0; step < trace.size(); ++step) {
            out << run << "," << step << "," << compact_string(trace[step].second) << ","
                << trace[step].first << "\n";
        }
    }
    return out.str();
}

} // namespace fitland
