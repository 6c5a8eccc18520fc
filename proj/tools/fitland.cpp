#include "fitland/errors.hpp"
#include "fitland/io.hpp"
#include "fitland/problem_spec.hpp"
#include "fitland/properties.hpp"
#include "fitland/search.hpp"
#include "fitland/stats.hpp"
#include "fitland/synth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace fitland;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void write_text(const std::optional<std::string>& path, const std::string& text) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open output file: " + *path);
    }
    out << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot open output file: " + path);
    }
    out << text;
}

struct CommonOptions {
    std::string format = "table";
    std::optional<std::string> out;
    int workers = 0;
    long long enum_budget = 0; ///< 0 = FITLAND_BUDGET / built-in default

    EnumerationOptions enumeration() const {
        EnumerationOptions opts;
        opts.workers = workers;
        if (enum_budget > 0) {
            opts.budget = Integer(enum_budget);
        }
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("--format", common.format, "Output format: json, table or csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    cmd->add_option_function<std::string>(
        "--out", [&common](const std::string& path) { common.out = path; },
        "Write the primary report to PATH instead of stdout");
    cmd->add_option("--workers", common.workers, "Worker threads (0 = hardware)");
    cmd->add_option("--enum-budget", common.enum_budget,
                    "Solution-count ceiling for enumeration (default: FITLAND_BUDGET or 1e8)");
}

std::string summary_table(const nlohmann::ordered_json& summary) {
    std::ostringstream out;
    for (const auto& [key, value] : summary.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
    }
    return out.str();
}

int cmd_census(const std::string& spec, const CommonOptions& common,
               const std::optional<std::string>& csv_out,
               const std::optional<std::string>& json_out,
               const std::optional<std::string>& landscape_out) {
    const ParsedProblem parsed = parse_problem_spec(spec);
    const FitnessHistogram hist = parsed.tsp
                                      ? tsp_census(*parsed.tsp, common.enumeration())
                                      : build_histogram(*parsed.problem, {}, common.enumeration());
    const nlohmann::ordered_json summary = census_summary(hist, parsed.label);
    if (csv_out) {
        write_file(*csv_out, histogram_csv(hist));
    }
    if (json_out) {
        write_file(*json_out, summary.dump(2) + "\n");
    }
    if (landscape_out) {
        write_file(*landscape_out, histogram_to_json(hist).dump(2) + "\n");
    }
    if (common.format == "csv") {
        write_text(common.out, histogram_csv(hist));
    } else if (common.format == "json") {
        write_text(common.out, summary.dump(2) + "\n");
    } else {
        write_text(common.out, summary_table(summary));
    }
    return kExitOk;
}

int cmd_analyze(const std::string& input, const std::string& tolerance,
                const CommonOptions& common) {
    const Rational tol = parse_rational(tolerance);
    if (tol < 0) {
        throw ParseError("tolerance must be nonnegative");
    }

    std::optional<FitnessHistogram> hist;
    std::optional<AggregateLandscape> agg;
    if (looks_like_problem_spec(input)) {
        const ParsedProblem parsed = parse_problem_spec(input);
        agg = build_aggregate(*parsed.problem, common.enumeration());
        hist = agg->hist();
    } else {
        std::ifstream in(input);
        if (!in) {
            throw ParseError("cannot open landscape file: " + input);
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        LoadedLandscape loaded = landscape_from_json(j);
        hist = std::move(loaded.hist);
        agg = std::move(loaded.agg);
    }

    std::vector<PropertyReport> reports;
    reports.push_back(check_cardinality_monotonic(*hist, false));
    reports.push_back(check_cardinality_monotonic(*hist, true));
    reports.push_back(check_lemma1(*hist));
    const Level v_ge = good_enough(*hist);
    if (agg) {
        reports.push_back(check_unskewed(*agg, tol));
        reports.push_back(check_nsf(*agg));
        if (hist->count(v_ge) > 0) {
            reports.push_back(check_effective_at(*agg, v_ge));
        }
        reports.push_back(check_effective_landscape(*agg));
        reports.push_back(verify_theorem1(*agg));
    } else {
        for (const char* name : {"unskewed", "nsf", "effective_landscape", "theorem1"}) {
            PropertyReport skipped;
            skipped.kind = PropertyKind::unskewed;
            skipped.name = name;
            skipped.verdict = Verdict::not_applicable;
            skipped.v_mode = modal_fitness(*hist);
            skipped.v_ge = v_ge;
            skipped.details["note"] = "input carries no nf matrix";
            reports.push_back(std::move(skipped));
        }
    }

    if (common.format == "json") {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            arr.push_back(report_to_json(r, hist->grid()));
        }
        write_text(common.out, arr.dump(2) + "\n");
    } else if (common.format == "csv") {
        std::ostringstream out;
        out << "property,verdict,clause\n";
        for (const auto& r : reports) {
            out << r.name << "," << to_string(r.verdict) << ","
                << (r.witness ? r.witness->clause : "") << "\n";
        }
        write_text(common.out, out.str());
    } else {
        write_text(common.out, report_table(reports, hist->grid()));
    }
    return kExitOk;
}

int cmd_verify_theorem(int seeds, std::uint64_t base_seed, const std::string& violation_text,
                       const std::string& dump_dir,
                       const std::optional<std::string>& reports_out,
                       const CommonOptions& common) {
    const Violation violation = violation_from_string(violation_text);
    const TheoremSuite suite = run_theorem_suite(seeds, base_seed, violation);

    if (reports_out) {
        auto reports = nlohmann::ordered_json::array();
        for (const auto& item : suite.cases) {
            reports.push_back(report_to_json(item.report, item.grid));
        }
        write_file(*reports_out, reports.dump(2) + "\n");
    }

    nlohmann::ordered_json summary;
    summary["violation"] = to_string(violation);
    summary["requested"] = suite.requested;
    summary["accepted"] = suite.accepted;
    summary["infeasible_retries"] = suite.infeasible_retries;
    summary["premise_failures"] = suite.premise_failures;
    summary["conclusion_failures"] = suite.conclusion_failures;
    summary["counterexamples"] = suite.counterexamples;

    int dumped = 0;
    for (const auto& item : suite.cases) {
        if (item.landscape) {
            const std::filesystem::path path =
                std::filesystem::path(dump_dir) /
                ("counterexample_" + std::to_string(dumped++) + ".json");
            write_file(path.string(), aggregate_to_json(*item.landscape).dump(2) + "\n");
        }
    }
    if (dumped > 0) {
        summary["counterexample_files"] = dumped;
    }

    if (common.format == "json") {
        write_text(common.out, summary.dump(2) + "\n");
    } else {
        write_text(common.out, summary_table(summary));
    }
    return (violation == Violation::none && suite.counterexamples > 0) ? kExitCounterexample
                                                                       : kExitOk;
}

int cmd_compare(const std::string& spec, const SearchConfig& config, std::uint64_t runs,
                std::uint64_t trials, std::optional<Level> level,
                const std::optional<std::string>& trace_out, const CommonOptions& common) {
    const ParsedProblem parsed = parse_problem_spec(spec);
    ComparisonReport report = head_to_head(*parsed.problem, config, runs, trials,
                                           trace_out.has_value(), common.enumeration());
    if (level) {
        std::erase_if(report.levels,
                      [&](const LevelComparison& cmp) { return cmp.level != *level; });
    }
    if (trace_out) {
        write_file(*trace_out, traces_csv(report));
    }
    if (common.format == "json") {
        write_text(common.out, comparison_to_json(report).dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "problem: " << parsed.label << "\n";
        out << "runs: " << report.runs << ", budget: " << report.budget
            << ", pivot: " << to_string(report.pivot) << "\n";
        out << "hill climb mean best fitness:    " << report.hill_climb.mean_best << "\n";
        out << "random search mean best fitness: " << report.random_search.mean_best << "\n";
        for (const auto& cmp : report.levels) {
            out << "level " << cmp.level << ": neighbour " << cmp.neighbour_estimate.value
                << " (se " << cmp.neighbour_estimate.std_error << ", exact mean "
                << fraction_string(cmp.exact_neighbour_mean) << "), random "
                << cmp.random_estimate.value << " (se " << cmp.random_estimate.std_error
                << ", p_plus " << fraction_string(cmp.analytic_p_plus) << "), pn_plus "
                << fraction_string(cmp.analytic_pn_plus) << "\n";
        }
        write_text(common.out, out.str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fitness landscape statistics, property checks and search comparisons"};
    app.require_subcommand(1);

    CommonOptions census_common, analyze_common, verify_common, compare_common;

    auto* census = app.add_subcommand("census", "Exact per-fitness census of a problem");
    std::string census_spec;
    std::optional<std::string> census_csv, census_json, census_landscape;
    census->add_option("spec", census_spec, "Problem spec, e.g. sumterms:k=5,m=5")->required();
    census->add_option_function<std::string>(
        "--csv-out", [&](const std::string& p) { census_csv = p; }, "Histogram CSV path");
    census->add_option_function<std::string>(
        "--json-out", [&](const std::string& p) { census_json = p; }, "Summary JSON path");
    census->add_option_function<std::string>(
        "--landscape-out", [&](const std::string& p) { census_landscape = p; },
        "Landscape interchange JSON path");
    add_common(census, census_common);

    auto* analyze = app.add_subcommand("analyze", "Property reports for a problem or landscape");
    std::string analyze_input;
    std::string analyze_tolerance = "0";
    analyze->add_option("input", analyze_input, "Problem spec or landscape JSON file")->required();
    analyze->add_option("--tolerance", analyze_tolerance,
                        "Unskewedness tolerance as a rational, e.g. 1/100");
    add_common(analyze, analyze_common);

    auto* verify = app.add_subcommand("verify-theorem",
                                      "Synthesized positive/negative landscape suites");
    int verify_seeds = 1000;
    std::uint64_t verify_seed = 1;
    std::string verify_violation = "none";
    std::string verify_dump_dir = ".";
    std::optional<std::string> verify_reports;
    verify->add_option("--seeds", verify_seeds, "Number of synthesized landscapes")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "Base seed");
    verify->add_option("--violation", verify_violation,
                       "none, break-nsf, break-cm or break-unskewed")
        ->check(CLI::IsMember({"none", "break-nsf", "break-cm", "break-unskewed"}));
    verify->add_option("--dump-dir", verify_dump_dir, "Directory for counterexample landscapes");
    verify->add_option_function<std::string>(
        "--reports-out", [&](const std::string& p) { verify_reports = p; },
        "Write per-case property reports as a JSON array");
    add_common(verify, verify_common);

    auto* compare = app.add_subcommand("compare", "Hill climb vs random sampling");
    std::string compare_spec;
    SearchConfig compare_config;
    std::uint64_t compare_runs = 100;
    std::uint64_t compare_trials = 10000;
    std::optional<Level> compare_level;
    std::optional<std::string> compare_trace;
    std::string compare_pivot = "best-improvement";
    compare->add_option("spec", compare_spec, "Problem spec")->required();
    compare->add_option("--budget", compare_config.budget, "Evaluations per run")
        ->check(CLI::PositiveNumber);
    compare->add_option("--runs", compare_runs, "Matched runs per method")
        ->check(CLI::PositiveNumber);
    compare->add_option("--trials", compare_trials,
                        "Monte Carlo trials per level (0 skips the per-level section)");
    compare->add_option("--seed", compare_config.seed, "Base seed");
    compare->add_option_function<Level>(
        "--level", [&](Level v) { compare_level = v; }, "Restrict the per-level section");
    compare->add_option("--pivot", compare_pivot,
                        "first-improvement, best-improvement or random-neighbour");
    compare->add_option_function<std::string>(
        "--trace-out", [&](const std::string& p) { compare_trace = p; },
        "Hill-climb trace CSV path");
    add_common(compare, compare_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (census->parsed()) {
            return cmd_census(census_spec, census_common, census_csv, census_json,
                              census_landscape);
        }
        if (analyze->parsed()) {
            return cmd_analyze(analyze_input, analyze_tolerance, analyze_common);
        }
        if (verify->parsed()) {
            return cmd_verify_theorem(verify_seeds, verify_seed, verify_violation,
                                      verify_dump_dir, verify_reports, verify_common);
        }
        if (compare->parsed()) {
            compare_config.pivot = pivot_from_string(compare_pivot);
            return cmd_compare(compare_spec, compare_config, compare_runs, compare_trials,
                               compare_level, compare_trace, compare_common);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidLandscape& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
