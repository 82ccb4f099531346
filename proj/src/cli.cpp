#include "aqsspm/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqsspm/catalog.hpp"
#include "aqsspm/comparison.hpp"
#include "aqsspm/cost_table.hpp"
#include "aqsspm/dataset.hpp"
#include "aqsspm/error.hpp"
#include "aqsspm/ga.hpp"
#include "aqsspm/model_io.hpp"
#include "aqsspm/report.hpp"
#include "json_util.hpp"

namespace aqsspm {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char* kBuiltin = "builtin";

struct Settings {
  std::string data;
  std::string cost_table = kBuiltin;
  std::string catalog = kBuiltin;
  std::string model = "both";
  std::string model_file;
  bool train_first = false;
  double alpha = 1.0;
  LrHyperparams lr;
  GaParams ga;
  std::size_t rows = 500;
  std::string out;
  std::vector<std::string> formats{"json"};
  std::vector<std::string> inputs;
  std::vector<int> fitness;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write failed for '" + path.string() + "'");
}

bool wants(const Settings& s, std::string_view format) {
  return std::find(s.formats.begin(), s.formats.end(), format) != s.formats.end();
}

std::vector<std::string> selected_models(const Settings& s) {
  if (s.model == "both") return {"nbc", "lr"};
  return {s.model};
}

std::string ga_label(std::string_view model) {
  std::string label = "GA-";
  for (char c : model) label += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return label;
}

void validate_parameters(const Settings& s) {
  s.ga.validate();
  s.lr.validate();
  if (!(s.alpha >= 0.0)) throw Error(ErrorCode::InvalidArgument, "--alpha must be >= 0");
}

CauseCatalog load_catalog(const Settings& s) {
  if (s.catalog == kBuiltin) return CauseCatalog::default_catalog();
  return CauseCatalog::parse(read_file(s.catalog));
}

CostTable load_table(const Settings& s, const CauseCatalog& catalog) {
  if (s.cost_table == kBuiltin) {
    auto table = CostTable::builtin();
    if (!(table.catalog() == catalog)) {
      throw Error(ErrorCode::CatalogMismatch,
                  "built-in cost table covers the default 19 causes; pass --cost-table for "
                  "a custom catalog");
    }
    return table;
  }
  return load_cost_table(read_file(s.cost_table), catalog);
}

SurveyDataset load_data(const Settings& s, const CauseCatalog& catalog) {
  if (s.data.empty()) throw Error(ErrorCode::InvalidArgument, "--data is required");
  return parse_dataset(read_file(s.data), catalog);
}

// Everything that determines a run's numbers. The output directory is left
// out so identical runs written to different places report identically.
json effective_config(const Settings& s, std::string_view command) {
  json c = {{"command", std::string(command)},
            {"data", s.data},
            {"cost_table", s.cost_table},
            {"catalog", s.catalog},
            {"model", s.model},
            {"alpha", s.alpha},
            {"lr_rate", s.lr.learning_rate},
            {"lr_epochs", s.lr.max_epochs},
            {"lr_tol", s.lr.tolerance},
            {"generations", s.ga.max_iterations},
            {"population", s.ga.population_size},
            {"crossover_p", s.ga.crossover_probability},
            {"mutation_p", s.ga.mutation_probability},
            {"smin", s.ga.s_min},
            {"smax", s.ga.s_max},
            {"seed", s.ga.seed}};
  if (!s.model_file.empty()) c["model_file"] = s.model_file;
  if (command == "run" && s.data.empty()) c["rows"] = s.rows;
  return c;
}

TrainedModel train(const std::string& kind, const SurveyDataset& data, const Settings& s) {
  if (kind == "nbc") return train_nbc(data, s.alpha);
  return train_lr(data, s.lr);
}

json training_summary(const TrainedModel& model, const SurveyDataset& data) {
  json j = {{"model", std::string(model_kind(model))},
            {"rows", data.size()},
            {"success", data.count(Outcome::Success)},
            {"failure", data.count(Outcome::Failure)}};
  if (const auto* nbc = std::get_if<TrainedNbc>(&model)) {
    j["alpha"] = nbc->alpha();
  } else {
    const auto& d = std::get<TrainedLr>(model).diagnostics();
    j["epochs"] = d.epochs;
    j["max_abs_gradient"] = d.max_abs_gradient;
    j["converged"] = d.converged;
  }
  return j;
}

std::string summary_line(const json& j) {
  std::ostringstream line;
  line << j["model"].get<std::string>() << ": " << j["rows"] << " rows (" << j["success"]
       << " success, " << j["failure"] << " failure)";
  if (j.contains("alpha")) {
    line << ", alpha " << j["alpha"].get<double>();
  } else {
    line << ", " << j["epochs"] << " epochs, max |gradient| "
         << j["max_abs_gradient"].get<double>()
         << (j["converged"].get<bool>() ? ", converged" : ", NOT converged");
  }
  return line.str();
}

fs::path out_dir(const Settings& s) { return s.out.empty() ? fs::path(".") : fs::path(s.out); }

int cmd_train(const Settings& s, std::ostream& out) {
  validate_parameters(s);
  const auto catalog = load_catalog(s);
  const auto data = load_data(s, catalog);
  json summaries = json::array();
  for (const auto& kind : selected_models(s)) {
    const auto model = train(kind, data, s);
    write_file(out_dir(s) / (kind + ".model.json"), serialize_model(model));
    summaries.push_back(training_summary(model, data));
    out << summary_line(summaries.back()) << '\n';
  }
  write_file(out_dir(s) / "train.summary.json",
             json{{"config", effective_config(s, "train")}, {"models", summaries}}.dump(2) +
                 "\n");
  return 0;
}

struct ModelRun {
  std::string kind;
  GaRunResult result;
};

ModelRun optimize_one(const TrainedModel& model, const CostTable& table, const Settings& s,
                      const json& config, std::ostream& out) {
  const std::string kind(model_kind(model));
  auto result = run_ga(s.ga, as_predictor(model), table);
  const auto dir = out_dir(s);
  write_file(dir / (kind + ".run.json"), run_report_json(result, kind, config).dump(2) + "\n");
  write_file(dir / (kind + ".trace.csv"), trace_csv(result));
  if (wants(s, "csv")) write_file(dir / (kind + ".run.csv"), run_report_csv(result, kind));
  if (wants(s, "text")) write_file(dir / (kind + ".run.txt"), run_report_text(result, kind));
  out << run_report_text(result, kind) << '\n';
  return {kind, std::move(result)};
}

int cmd_optimize(const Settings& s, std::ostream& out) {
  validate_parameters(s);
  std::vector<TrainedModel> models;
  if (!s.model_file.empty()) {
    if (s.train_first) {
      throw Error(ErrorCode::InvalidArgument, "--model-file and --train-first are exclusive");
    }
    models.push_back(parse_model(read_file(s.model_file)));
    const auto& catalog = model_catalog(models.front());
    if (s.catalog != kBuiltin && !(load_catalog(s) == catalog)) {
      throw Error(ErrorCode::CatalogMismatch, "model was trained on a different catalog");
    }
    const auto table = load_table(s, catalog);
    const auto config = effective_config(s, "optimize");
    optimize_one(models.front(), table, s, config, out);
    return 0;
  }
  if (!s.train_first) {
    throw Error(ErrorCode::InvalidArgument, "optimize needs --model-file or --train-first");
  }
  const auto catalog = load_catalog(s);
  const auto table = load_table(s, catalog);
  const auto data = load_data(s, catalog);
  const auto config = effective_config(s, "optimize");
  for (const auto& kind : selected_models(s)) {
    optimize_one(train(kind, data, s), table, s, config, out);
  }
  return 0;
}

void write_comparison(const ComparisonReport& report, const Settings& s, std::ostream& out) {
  const auto dir = out_dir(s);
  if (wants(s, "json")) write_file(dir / "comparison.json", comparison_json(report).dump(2) + "\n");
  if (wants(s, "csv")) write_file(dir / "comparison.csv", comparison_csv(report));
  if (wants(s, "text")) write_file(dir / "comparison.txt", comparison_text(report));
  out << comparison_text(report);
}

int cmd_compare(const Settings& s, std::ostream& out) {
  if (s.inputs.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "compare takes exactly two run reports");
  }
  const auto a = parse_run_summary(read_file(s.inputs[0]));
  const auto b = parse_run_summary(read_file(s.inputs[1]));
  write_comparison(compare_fitness(a.catalog, ga_label(a.model), a.best_genes, b.catalog,
                                   ga_label(b.model), b.best_genes),
                   s, out);
  return 0;
}

int cmd_rank(const Settings& s, std::ostream& out) {
  std::vector<FitnessRanking> rankings;
  std::optional<CauseCatalog> catalog;
  if (!s.fitness.empty()) {
    rankings.push_back(rank_fitness("fitness", s.fitness));
    catalog = CauseCatalog::generic(s.fitness.size());
  }
  for (const auto& path : s.inputs) {
    auto summary = parse_run_summary(read_file(path));
    if (catalog && !(*catalog == summary.catalog) &&
        catalog->size() != summary.catalog.size()) {
      throw Error(ErrorCode::CatalogMismatch, "'" + path + "' uses a different catalog");
    }
    if (!catalog || s.fitness.empty()) catalog = summary.catalog;
    rankings.push_back(rank_fitness(ga_label(summary.model), summary.best_genes));
  }
  if (rankings.empty()) {
    throw Error(ErrorCode::InvalidArgument, "rank needs --fitness or run report files");
  }

  const std::string format = s.formats.front();
  if (format == "json") {
    json j = {{"catalog", catalog_to_json(*catalog)}, {"rankings", json::array()}};
    for (const auto& r : rankings) {
      j["rankings"].push_back({{"label", r.label}, {"best_fitness", r.best_fitness},
                               {"ranks", r.ranks}});
    }
    out << j.dump(2) << '\n';
  } else {
    const char sep = format == "csv" ? ',' : ' ';
    out << "cause";
    for (const auto& r : rankings) out << sep << r.label << "_fitness" << sep << r.label << "_rank";
    out << '\n';
    for (std::size_t i = 0; i < catalog->size(); ++i) {
      out << (*catalog)[i].id;
      for (const auto& r : rankings) out << sep << r.best_fitness[i] << sep << r.ranks[i];
      out << '\n';
    }
  }
  return 0;
}

int cmd_synth(const Settings& s, std::ostream& out) {
  if (s.rows < 2) throw Error(ErrorCode::InvalidArgument, "--rows must be at least 2");
  const auto catalog = load_catalog(s);
  const auto data =
      generate_synthetic(SyntheticDataSpec::planted(catalog, s.rows), s.ga.seed);
  const auto text = serialize_dataset(data);
  if (s.out.empty()) {
    out << text;
  } else {
    write_file(s.out, text);
  }
  return 0;
}

int cmd_run(const Settings& s, std::ostream& out) {
  validate_parameters(s);
  const auto catalog = load_catalog(s);
  const auto table = load_table(s, catalog);
  if (s.data.empty() && s.rows < 2) {
    throw Error(ErrorCode::InvalidArgument, "--rows must be at least 2");
  }
  const auto data = s.data.empty()
                        ? generate_synthetic(SyntheticDataSpec::planted(catalog, s.rows),
                                             s.ga.seed)
                        : load_data(s, catalog);
  const auto dir = out_dir(s);
  if (s.data.empty()) write_file(dir / "survey.csv", serialize_dataset(data));

  const auto config = effective_config(s, "run");
  std::ostringstream text;
  std::ostringstream csv;
  json report = {{"format_version", kReportFormatVersion}, {"config", config}};
  std::vector<ModelRun> runs;
  for (const auto& kind : selected_models(s)) {
    const auto model = train(kind, data, s);
    write_file(dir / (kind + ".model.json"), serialize_model(model));
    std::ostringstream discard;
    runs.push_back(optimize_one(model, table, s, config, discard));
    const auto& r = runs.back();
    report["training"][kind] = training_summary(model, data);
    report["runs"][kind] = run_report_json(r.result, kind, config);
    text << summary_line(report["training"][kind]) << "\n\n"
         << run_report_text(r.result, kind) << '\n';
    const auto rows = run_report_csv(r.result, kind);
    csv << (runs.size() == 1 ? rows : rows.substr(rows.find('\n') + 1));
  }

  if (runs.size() == 2) {
    const auto cmp = compare_models(runs[0].result, runs[1].result);
    report["comparison"] = comparison_json(cmp);
    text << comparison_text(cmp);
    csv << '\n' << comparison_csv(cmp);
  } else {
    const std::string note =
        "comparison omitted: it needs both an NBC-driven and an LR-driven run (--model both)";
    report["comparison_note"] = note;
    text << note << '\n';
  }

  if (wants(s, "json")) write_file(dir / "report.json", report.dump(2) + "\n");
  if (wants(s, "csv")) write_file(dir / "report.csv", csv.str());
  if (wants(s, "text")) write_file(dir / "report.txt", text.str());
  out << text.str();
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Agile-quantum software project success prediction"};
  app.name("aqsspm");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");

  const std::vector<std::string> model_kinds{"nbc", "lr", "both"};
  const std::vector<std::string> format_kinds{"json", "csv", "text"};
  app.add_option("--data", s.data, "Survey CSV (C1..Cn,outcome)");
  app.add_option("--cost-table", s.cost_table, "Cost table CSV or 'builtin'");
  app.add_option("--catalog", s.catalog, "Cause catalog file or 'builtin'");
  app.add_option("--model", s.model, "Classifier")->check(CLI::IsMember(model_kinds));
  app.add_option("--model-file", s.model_file, "Trained model for optimize");
  app.add_flag("--train-first", s.train_first, "Train from --data before optimizing");
  app.add_option("--alpha", s.alpha, "Laplace smoothing for naive Bayes");
  app.add_option("--lr-rate", s.lr.learning_rate, "Logistic regression learning rate");
  app.add_option("--lr-epochs", s.lr.max_epochs, "Logistic regression epoch limit");
  app.add_option("--lr-tol", s.lr.tolerance, "Gradient tolerance for convergence");
  app.add_option("--generations", s.ga.max_iterations, "GA iterations");
  app.add_option("--population", s.ga.population_size, "GA population size");
  app.add_option("--crossover-p", s.ga.crossover_probability, "Crossover probability");
  app.add_option("--mutation-p", s.ga.mutation_probability, "Per-gene mutation probability");
  app.add_option("--smin", s.ga.s_min, "Lowest scale level a gene may take");
  app.add_option("--smax", s.ga.s_max, "Highest scale level a gene may take");
  app.add_option("--seed", s.ga.seed, "Seed for every random choice");
  app.add_option("--rows", s.rows, "Rows to synthesize");
  app.add_option("--out", s.out, "Output directory (synth: output file)");
  app.add_option("--format", s.formats, "Report formats, comma separated")
      ->delimiter(',')
      ->check(CLI::IsMember(format_kinds));

  auto* train_cmd = app.add_subcommand("train", "Train classifiers and save model files");
  auto* optimize_cmd = app.add_subcommand("optimize", "Run the GA against a trained model");
  auto* compare_cmd = app.add_subcommand("compare", "Compare the best solutions of two runs");
  compare_cmd->add_option("runs", s.inputs, "Two JSON run reports");
  auto* rank_cmd = app.add_subcommand("rank", "Dense descending ranks of best fitness");
  rank_cmd->add_option("runs", s.inputs, "JSON run reports");
  rank_cmd->add_option("--fitness", s.fitness, "Comma separated fitness levels")
      ->delimiter(',');
  auto* synth_cmd = app.add_subcommand("synth", "Generate a planted synthetic survey");
  auto* run_cmd = app.add_subcommand("run", "Synthesize or load, train, optimize, compare");
  auto* dump_cmd = app.add_subcommand("dump-cost-table", "Print the cost table in CSV form");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "error: " << code_name(ErrorCode::InvalidArgument) << ": " << message << '\n';
    return 2;
  }

  try {
    if (train_cmd->parsed()) return cmd_train(s, out);
    if (optimize_cmd->parsed()) return cmd_optimize(s, out);
    if (compare_cmd->parsed()) return cmd_compare(s, out);
    if (rank_cmd->parsed()) return cmd_rank(s, out);
    if (synth_cmd->parsed()) return cmd_synth(s, out);
    if (run_cmd->parsed()) return cmd_run(s, out);
    if (dump_cmd->parsed()) {
      const auto text = serialize_cost_table(load_table(s, load_catalog(s)));
      if (s.out.empty()) {
        out << text;
      } else {
        write_file(s.out, text);
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << code_name(ErrorCode::Internal) << ": " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace aqsspm
