#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aqsspm/catalog.hpp"
#include "aqsspm/comparison.hpp"
#include "aqsspm/ga.hpp"

namespace aqsspm {

inline constexpr int kReportFormatVersion = 1;

/// "53.17%" style; with `signed_change`, "+46.51%" / "-6.00%".
std::string format_percent(double fraction, bool signed_change = false);

/// `generation,best_efficacy,mean_efficacy,best_probability,best_norm_cost`,
/// one row per generation starting at 0 (the initial population).
std::string trace_csv(const GaRunResult& result);

/// Initial/ending probability and normalized cost with their changes, the
/// best chromosome, and the effective configuration that produced the run.
nlohmann::json run_report_json(const GaRunResult& result, std::string_view model,
                               const nlohmann::json& config);
std::string run_report_text(const GaRunResult& result, std::string_view model);
std::string run_report_csv(const GaRunResult& result, std::string_view model);

// The part of a run report that a comparison needs.
struct RunSummary {
  std::string model;
  CauseCatalog catalog;
  std::vector<int> best_genes;
};

/// Reads a JSON run report. Only `model`, `catalog` and `best.genes` are
/// required, so hand-written fixtures work too.
RunSummary parse_run_summary(std::string_view json_text);

nlohmann::json comparison_json(const ComparisonReport& report);
std::string comparison_text(const ComparisonReport& report);
std::string comparison_csv(const ComparisonReport& report);

}  // namespace aqsspm
