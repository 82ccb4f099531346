#include "aqsspm/model_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "aqsspm/error.hpp"
#include "json_util.hpp"

namespace aqsspm {

using nlohmann::json;

const SuccessPredictor& as_predictor(const TrainedModel& model) {
  return std::visit([](const auto& m) -> const SuccessPredictor& { return m; }, model);
}

const CauseCatalog& model_catalog(const TrainedModel& model) {
  return std::visit([](const auto& m) -> const CauseCatalog& { return m.catalog(); }, model);
}

std::string_view model_kind(const TrainedModel& model) {
  return std::holds_alternative<TrainedNbc>(model) ? "nbc" : "lr";
}

namespace {

json nbc_to_json(const TrainedNbc& m) {
  json cpt = json::array();
  for (std::size_t i = 0; i < m.cpt().size(); ++i) {
    cpt.push_back({{"cause", m.catalog()[i].id},
                   {"failure", m.cpt()[i][0]},
                   {"success", m.cpt()[i][1]}});
  }
  return {{"format_version", kModelFormatVersion},
          {"kind", "nbc"},
          {"catalog", catalog_to_json(m.catalog())},
          {"alpha", m.alpha()},
          {"prior", {{"success", m.prior_success()}, {"failure", m.prior_failure()}}},
          {"cpt", std::move(cpt)}};
}

json lr_to_json(const TrainedLr& m) {
  const auto& h = m.hyperparams();
  const auto& d = m.diagnostics();
  return {{"format_version", kModelFormatVersion},
          {"kind", "lr"},
          {"catalog", catalog_to_json(m.catalog())},
          {"beta0", m.beta0()},
          {"beta", m.beta()},
          {"scaling", {{"center", m.scaling().center}, {"scale", m.scaling().scale}}},
          {"diagnostics",
           {{"epochs", d.epochs},
            {"max_abs_gradient", d.max_abs_gradient},
            {"converged", d.converged}}},
          {"hyperparams",
           {{"learning_rate", h.learning_rate},
            {"max_epochs", h.max_epochs},
            {"tolerance", h.tolerance},
            {"l2", h.l2}}}};
}

TrainedNbc nbc_from_json(const json& doc) {
  CauseCatalog catalog = catalog_from_json(doc.at("catalog"));
  std::vector<NbcCauseTable> cpt;
  for (const auto& entry : doc.at("cpt")) {
    NbcCauseTable table{};
    const auto failure = entry.at("failure").get<std::vector<double>>();
    const auto success = entry.at("success").get<std::vector<double>>();
    if (failure.size() != kScaleCount || success.size() != kScaleCount) {
      throw Error(ErrorCode::Parse, "model: cpt entries must have 9 values");
    }
    std::copy(failure.begin(), failure.end(), table[0].begin());
    std::copy(success.begin(), success.end(), table[1].begin());
    cpt.push_back(table);
  }
  return TrainedNbc(std::move(catalog), doc.at("prior").at("success").get<double>(),
                    std::move(cpt), doc.at("alpha").get<double>());
}

TrainedLr lr_from_json(const json& doc) {
  CauseCatalog catalog = catalog_from_json(doc.at("catalog"));
  FeatureScaling scaling{doc.at("scaling").at("center").get<std::vector<double>>(),
                         doc.at("scaling").at("scale").get<std::vector<double>>()};
  const auto& d = doc.at("diagnostics");
  LrDiagnostics diag{d.at("epochs").get<int>(), d.at("max_abs_gradient").get<double>(),
                     d.at("converged").get<bool>()};
  const auto& h = doc.at("hyperparams");
  LrHyperparams hyper{h.at("learning_rate").get<double>(), h.at("max_epochs").get<int>(),
                      h.at("tolerance").get<double>(), h.value("l2", 0.0)};
  return TrainedLr(std::move(catalog), doc.at("beta0").get<double>(),
                   doc.at("beta").get<std::vector<double>>(), std::move(scaling), diag, hyper);
}

}  // namespace

std::string serialize_model(const TrainedModel& model) {
  const json doc = std::holds_alternative<TrainedNbc>(model)
                       ? nbc_to_json(std::get<TrainedNbc>(model))
                       : lr_to_json(std::get<TrainedLr>(model));
  return doc.dump(2) + "\n";
}

TrainedModel parse_model(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const int version = doc.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw Error(ErrorCode::Parse,
                  "model: unsupported format_version " + std::to_string(version));
    }
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "nbc") return nbc_from_json(doc);
    if (kind == "lr") return lr_from_json(doc);
    throw Error(ErrorCode::Parse, "model: unknown kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("model: ") + e.what());
  }
}

}  // namespace aqsspm
