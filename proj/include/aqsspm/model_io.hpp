#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "aqsspm/logistic_regression.hpp"
#include "aqsspm/naive_bayes.hpp"

namespace aqsspm {

inline constexpr int kModelFormatVersion = 1;

using TrainedModel = std::variant<TrainedNbc, TrainedLr>;

const SuccessPredictor& as_predictor(const TrainedModel& model);
const CauseCatalog& model_catalog(const TrainedModel& model);

/// "nbc" or "lr".
std::string_view model_kind(const TrainedModel& model);

/// JSON document with a `format_version` field. Doubles are written with
/// round-trip precision, so parse_model(serialize_model(m)) predicts
/// identically to m.
std::string serialize_model(const TrainedModel& model);

/// Throws Error(Parse) on malformed documents or an unsupported version.
TrainedModel parse_model(std::string_view text);

}  // namespace aqsspm
