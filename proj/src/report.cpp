#include "aqsspm/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "aqsspm/error.hpp"
#include "json_util.hpp"

namespace aqsspm {

using nlohmann::json;

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string display_name(std::string_view model) {
  if (model == "nbc") return "Naive-bayes";
  if (model == "lr") return "Logistic-regression";
  return std::string(model);
}

json evaluated_json(const EvaluatedChromosome& e) {
  return {{"genes", e.chromosome.genes},
          {"success_probability", e.success_probability},
          {"success_probability_pct", format_percent(e.success_probability)},
          {"raw_cost", e.raw_cost},
          {"normalized_cost", e.normalized_cost},
          {"normalized_cost_text", fixed(e.normalized_cost, 3)},
          {"efficacy", e.efficacy}};
}

// Pads every column of a row-major string table to its widest cell.
std::string align(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> width;
  for (const auto& row : table) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

constexpr std::string_view kCostNote =
    "Note: costs are normalized fractions in [0,1]; the change in cost is the difference of "
    "those fractions shown in percentage points.\n";

}  // namespace

std::string format_percent(double fraction, bool signed_change) {
  char buf[64];
  std::snprintf(buf, sizeof buf, signed_change ? "%+.2f%%" : "%.2f%%", 100.0 * fraction);
  return buf;
}

std::string trace_csv(const GaRunResult& result) {
  std::ostringstream out;
  out << "generation,best_efficacy,mean_efficacy,best_probability,best_norm_cost\n";
  out << std::setprecision(12);
  for (const auto& r : result.trace) {
    out << r.generation << ',' << r.best_efficacy << ',' << r.mean_efficacy << ','
        << r.best_probability << ',' << r.best_normalized_cost << '\n';
  }
  return out.str();
}

json run_report_json(const GaRunResult& result, std::string_view model, const json& config) {
  const double dp = result.best.success_probability - result.initial_best.success_probability;
  const double dc = result.best.normalized_cost - result.initial_best.normalized_cost;
  json initial = evaluated_json(result.initial_best);
  initial["population_mean_probability"] = result.initial_mean_probability;
  initial["population_mean_normalized_cost"] = result.initial_mean_cost;
  return {{"format_version", kReportFormatVersion},
          {"model", std::string(model)},
          {"config", config},
          {"catalog", catalog_to_json(result.catalog)},
          {"generations", result.generations_run},
          {"initial", std::move(initial)},
          {"ending", evaluated_json(result.best)},
          {"change",
           {{"probability", dp},
            {"probability_pct", format_percent(dp, true)},
            {"normalized_cost", dc},
            {"normalized_cost_pct", format_percent(dc, true)}}},
          {"best", evaluated_json(result.best)},
          {"final_generation_best", evaluated_json(result.final_generation_best)}};
}

std::string run_report_text(const GaRunResult& result, std::string_view model) {
  const double dp = result.best.success_probability - result.initial_best.success_probability;
  const double dc = result.best.normalized_cost - result.initial_best.normalized_cost;
  std::ostringstream out;
  out << align({{"Stages", "Generations", "Initial success probability",
                 "Ending success probability", "Change in probability", "Initial Cost",
                 "Ending Cost", "Change in cost"},
                {display_name(model), std::to_string(result.generations_run),
                 format_percent(result.initial_best.success_probability),
                 format_percent(result.best.success_probability), format_percent(dp, true),
                 fixed(result.initial_best.normalized_cost, 3),
                 fixed(result.best.normalized_cost, 3), format_percent(dc, true)}});
  out << '\n' << "Best fitness of causes\n";
  std::vector<std::string> header{"Model"};
  std::vector<std::string> genes{display_name(model)};
  for (std::size_t i = 0; i < result.catalog.size(); ++i) {
    header.push_back(result.catalog[i].id);
    genes.push_back(std::to_string(result.best.chromosome.genes[i]));
  }
  out << align({header, genes});
  out << '\n'
      << "Initial population mean: success probability "
      << format_percent(result.initial_mean_probability) << ", normalized cost "
      << fixed(result.initial_mean_cost, 3) << '\n';
  out << "Best efficacy: " << fixed(result.best.efficacy, 6) << " (raw cost "
      << result.best.raw_cost << ")\n";
  out << kCostNote;
  return out.str();
}

std::string run_report_csv(const GaRunResult& result, std::string_view model) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "model,generations,initial_success_probability,ending_success_probability,"
         "change_in_probability,initial_normalized_cost,ending_normalized_cost,"
         "change_in_normalized_cost,initial_mean_probability,initial_mean_normalized_cost,"
         "best_efficacy,best_raw_cost";
  for (const auto& c : result.catalog.causes()) out << ',' << c.id;
  out << '\n';
  out << model << ',' << result.generations_run << ','
      << result.initial_best.success_probability << ',' << result.best.success_probability
      << ','
      << result.best.success_probability - result.initial_best.success_probability << ','
      << result.initial_best.normalized_cost << ',' << result.best.normalized_cost << ','
      << result.best.normalized_cost - result.initial_best.normalized_cost << ','
      << result.initial_mean_probability << ',' << result.initial_mean_cost << ','
      << result.best.efficacy << ',' << result.best.raw_cost;
  for (int g : result.best.chromosome.genes) out << ',' << g;
  out << '\n';
  return out.str();
}

RunSummary parse_run_summary(std::string_view json_text) {
  try {
    const json doc = json::parse(json_text);
    return {doc.at("model").get<std::string>(), catalog_from_json(doc.at("catalog")),
            doc.at("best").at("genes").get<std::vector<int>>()};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("run report: ") + e.what());
  }
}

json comparison_json(const ComparisonReport& report) {
  const auto ranking = [](const FitnessRanking& r) {
    json j = {{"label", r.label}, {"ranks", r.ranks}};
    if (!r.best_fitness.empty()) j["best_fitness"] = r.best_fitness;
    return j;
  };
  const auto branch = [](const TTestBranch& b) {
    return json{{"t", b.t},
                {"df", b.df},
                {"p_two_tailed", b.p_two_tailed},
                {"std_error_difference", b.std_error_difference},
                {"ci95", {b.ci95_low, b.ci95_high}}};
  };
  return {{"format_version", kReportFormatVersion},
          {"catalog", catalog_to_json(report.catalog)},
          {"rankings", {ranking(report.first), ranking(report.second)}},
          {"spearman",
           {{"rho", report.correlation.rho},
            {"p_two_tailed", report.correlation.p_value},
            {"n", report.correlation.n}}},
          {"levene", {{"f", report.ttest.levene_f}, {"p", report.ttest.levene_p}}},
          {"ttest",
           {{"mean_difference", report.ttest.mean_difference},
            {"equal_variances_assumed", branch(report.ttest.pooled)},
            {"equal_variances_not_assumed", branch(report.ttest.welch)}}}};
}

std::string comparison_text(const ComparisonReport& report) {
  std::ostringstream out;
  out << "Best fitness ranking of causes\n";
  std::vector<std::vector<std::string>> matrix;
  std::vector<std::string> header{"Model", "Particulars"};
  for (const auto& c : report.catalog.causes()) header.push_back(c.id);
  matrix.push_back(header);
  for (const auto* r : {&report.first, &report.second}) {
    if (!r->best_fitness.empty()) {
      std::vector<std::string> row{r->label, "Best Fitness"};
      for (int v : r->best_fitness) row.push_back(std::to_string(v));
      matrix.push_back(row);
    }
    std::vector<std::string> row{r->best_fitness.empty() ? r->label : "", "Ranks"};
    for (int v : r->ranks) row.push_back(std::to_string(v));
    matrix.push_back(row);
  }
  out << align(matrix) << '\n';

  char p_buf[64];
  std::snprintf(p_buf, sizeof p_buf, "%.3g", report.correlation.p_value);
  out << "Spearman's rho\n"
      << align({{"", "Correlation Coefficient", "Sig. (2-tailed)", "N"},
                {report.first.label + " vs " + report.second.label,
                 fixed(report.correlation.rho, 3), p_buf,
                 std::to_string(report.correlation.n)}})
      << '\n';

  const auto& t = report.ttest;
  const auto row = [&](const char* name, const TTestBranch& b, bool with_levene) {
    return std::vector<std::string>{name,
                                    with_levene ? fixed(t.levene_f, 3) : "",
                                    with_levene ? fixed(t.levene_p, 3) : "",
                                    fixed(b.t, 3),
                                    fixed(b.df, 3),
                                    fixed(b.p_two_tailed, 3),
                                    fixed(t.mean_difference, 5),
                                    fixed(b.std_error_difference, 5),
                                    fixed(b.ci95_low, 5),
                                    fixed(b.ci95_high, 5)};
  };
  out << "Independent samples t-test of rankings\n"
      << align({{"", "Levene F", "Sig.", "t", "df", "Sig. (2-tailed)", "Mean Difference",
                 "Std. Error Difference", "95% CI Lower", "95% CI Upper"},
                row("Equal variances assumed", t.pooled, true),
                row("Equal variances not assumed", t.welch, false)});
  return out.str();
}

std::string comparison_csv(const ComparisonReport& report) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << "statistic,value\n"
      << "spearman_rho," << report.correlation.rho << '\n'
      << "spearman_p," << report.correlation.p_value << '\n'
      << "n," << report.correlation.n << '\n'
      << "levene_f," << report.ttest.levene_f << '\n'
      << "levene_p," << report.ttest.levene_p << '\n'
      << "mean_difference," << report.ttest.mean_difference << '\n'
      << "t," << report.ttest.pooled.t << '\n'
      << "df," << report.ttest.pooled.df << '\n'
      << "p_two_tailed," << report.ttest.pooled.p_two_tailed << '\n'
      << "std_error_difference," << report.ttest.pooled.std_error_difference << '\n'
      << "ci95_low," << report.ttest.pooled.ci95_low << '\n'
      << "ci95_high," << report.ttest.pooled.ci95_high << '\n'
      << "welch_t," << report.ttest.welch.t << '\n'
      << "welch_df," << report.ttest.welch.df << '\n'
      << "welch_p_two_tailed," << report.ttest.welch.p_two_tailed << '\n';
  return out.str();
}

}  // namespace aqsspm
