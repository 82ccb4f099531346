#include "aqsspm/naive_bayes.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "aqsspm/error.hpp"

namespace aqsspm {

TrainedNbc::TrainedNbc(CauseCatalog catalog, double prior_success,
                       std::vector<NbcCauseTable> cpt, double alpha)
    : catalog_(std::move(catalog)),
      prior_success_(prior_success),
      cpt_(std::move(cpt)),
      alpha_(alpha) {
  if (cpt_.size() != catalog_.size()) {
    throw Error(ErrorCode::Shape, "NBC table count does not match catalog size");
  }
  if (!(prior_success_ >= 0.0 && prior_success_ <= 1.0)) {
    throw Error(ErrorCode::Range, "NBC prior outside [0,1]");
  }
  if (!(alpha_ >= 0.0)) throw Error(ErrorCode::InvalidArgument, "alpha must be >= 0");
}

double TrainedNbc::conditional(std::size_t cause, Outcome outcome, int level) const {
  if (!is_valid_scale(level)) throw Error(ErrorCode::Range, "scale outside [1,9]");
  return cpt_.at(cause)[static_cast<std::size_t>(outcome)][static_cast<std::size_t>(level - 1)];
}

std::pair<double, double> TrainedNbc::posterior(std::span<const int> scales) const {
  validate_scales(scales, cpt_.size());
  // Log-domain class scores; log(0) = -inf only happens with alpha = 0.
  double log_fail = std::log(prior_failure());
  double log_succ = std::log(prior_success_);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    const auto v = static_cast<std::size_t>(scales[i] - 1);
    log_fail += std::log(cpt_[i][0][v]);
    log_succ += std::log(cpt_[i][1][v]);
  }
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (log_fail == kNegInf && log_succ == kNegInf) {
    // Unseen under both classes with alpha = 0: fall back to the prior.
    return {prior_failure(), prior_success_};
  }
  if (log_fail == kNegInf) return {0.0, 1.0};
  if (log_succ == kNegInf) return {1.0, 0.0};
  const double p_succ = 1.0 / (1.0 + std::exp(log_fail - log_succ));
  const double p_fail = 1.0 / (1.0 + std::exp(log_succ - log_fail));
  return {p_fail, p_succ};
}

double TrainedNbc::predict(std::span<const int> scales) const {
  return posterior(scales).second;
}

TrainedNbc train_nbc(const SurveyDataset& dataset, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be a finite value >= 0");
  }
  dataset.require_both_classes();

  const std::size_t n = dataset.cause_count();
  std::array<double, 2> class_count{};
  std::vector<NbcCauseTable> counts(n, NbcCauseTable{});
  for (const auto& row : dataset.rows()) {
    const auto t = static_cast<std::size_t>(row.outcome);
    class_count[t] += 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      counts[i][t][static_cast<std::size_t>(row.scales[i] - 1)] += 1.0;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < 2; ++t) {
      const double denom = class_count[t] + kScaleCount * alpha;
      for (auto& cell : counts[i][t]) cell = (cell + alpha) / denom;
    }
  }
  const double prior_success = class_count[1] / static_cast<double>(dataset.size());
  return TrainedNbc(dataset.catalog(), prior_success, std::move(counts), alpha);
}

}  // namespace aqsspm
