#pragma once

#include "fitland/aggregate.hpp"
#include "fitland/properties.hpp"
#include "fitland/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fitland {

/// Landscape interchange format:
///   {"sense": "max"|"min", "levels": [...], "counts": [...],
///    "nf": [[...]] (optional), "integer_realizable": bool}
/// Levels are original units ordered worst to best; all rationals are
/// "num/den" strings (plain integers accepted on input).
nlohmann::ordered_json histogram_to_json(const FitnessHistogram& hist);
nlohmann::ordered_json aggregate_to_json(const AggregateLandscape& agg);

struct LoadedLandscape {
    FitnessHistogram hist;
    std::optional<AggregateLandscape> agg;
};

LoadedLandscape landscape_from_json(const nlohmann::json& j);

/// "fitness,count,proportion,cum_better", one row per level, best first.
/// Counts are exact; proportions are 12-significant-digit decimals.
std::string histogram_csv(const FitnessHistogram& hist);

nlohmann::ordered_json report_to_json(const PropertyReport& report, const FitnessGrid& grid);

/// Fixed-order human-readable table of reports.
std::string report_table(const std::vector<PropertyReport>& reports, const FitnessGrid& grid);

/// min, max, mode, v_ge in original units, |S|, and the share of solutions
/// at least as good as v_ge.
nlohmann::ordered_json census_summary(const FitnessHistogram& hist, const std::string& label);

nlohmann::ordered_json comparison_to_json(const ComparisonReport& report);

/// "run,step,fitness,evals" rows for the collected hill-climb traces.
std::string traces_csv(const ComparisonReport& report);

} // namespace fitland
