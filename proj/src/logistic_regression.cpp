#include "aqsspm/logistic_regression.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aqsspm/error.hpp"

namespace aqsspm {

namespace {

// log(1 + e^z) without overflow.
double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

}  // namespace

void LrHyperparams::validate() const {
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw Error(ErrorCode::InvalidArgument, "learning rate must be positive");
  }
  if (max_epochs <= 0) throw Error(ErrorCode::InvalidArgument, "max_epochs must be positive");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!(l2 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "l2 strength must be >= 0");
}

double logistic(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

FeatureScaling fit_scaling(const SurveyDataset& dataset) {
  const std::size_t n = dataset.cause_count();
  const auto rows = static_cast<double>(dataset.size());
  FeatureScaling scaling{std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
  if (dataset.size() == 0) return scaling;
  for (const auto& row : dataset.rows()) {
    for (std::size_t i = 0; i < n; ++i) scaling.center[i] += row.scales[i];
  }
  for (auto& c : scaling.center) c /= rows;
  std::vector<double> sq(n, 0.0);
  for (const auto& row : dataset.rows()) {
    for (std::size_t i = 0; i < n; ++i) {
      const double d = row.scales[i] - scaling.center[i];
      sq[i] += d * d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double sd = std::sqrt(sq[i] / rows);
    scaling.scale[i] = sd > 0.0 ? sd : 1.0;
  }
  return scaling;
}

TrainedLr::TrainedLr(CauseCatalog catalog, double beta0, std::vector<double> beta,
                     FeatureScaling scaling, LrDiagnostics diagnostics, LrHyperparams hyper)
    : catalog_(std::move(catalog)),
      beta0_(beta0),
      beta_(std::move(beta)),
      scaling_(std::move(scaling)),
      diagnostics_(diagnostics),
      hyper_(hyper) {
  const std::size_t n = catalog_.size();
  if (beta_.size() != n || scaling_.center.size() != n || scaling_.scale.size() != n) {
    throw Error(ErrorCode::Shape, "LR coefficient vectors do not match catalog size");
  }
  for (double s : scaling_.scale) {
    if (!(s > 0.0)) throw Error(ErrorCode::Range, "LR feature scale must be positive");
  }
}

double TrainedLr::linear_score(std::span<const int> scales) const {
  validate_scales(scales, beta_.size());
  double z = beta0_;
  for (std::size_t i = 0; i < beta_.size(); ++i) {
    z += beta_[i] * (scales[i] - scaling_.center[i]) / scaling_.scale[i];
  }
  return z;
}

double TrainedLr::predict(std::span<const int> scales) const {
  return logistic(linear_score(scales));
}

LrObjective::LrObjective(const SurveyDataset& dataset, FeatureScaling scaling, double l2)
    : features_(dataset.cause_count()), rows_(dataset.size()), l2_(l2) {
  if (scaling.center.size() != features_ || scaling.scale.size() != features_) {
    throw Error(ErrorCode::Shape, "feature scaling does not match dataset width");
  }
  design_.reserve(rows_ * features_);
  labels_.reserve(rows_);
  for (const auto& row : dataset.rows()) {
    for (std::size_t i = 0; i < features_; ++i) {
      design_.push_back((row.scales[i] - scaling.center[i]) / scaling.scale[i]);
    }
    labels_.push_back(row.outcome == Outcome::Success ? 1.0 : 0.0);
  }
}

std::pair<double, std::vector<double>> LrObjective::evaluate(
    std::span<const double> params) const {
  if (params.size() != parameter_count()) {
    throw Error(ErrorCode::LengthMismatch, "LR parameter vector has wrong length");
  }
  std::vector<double> grad(parameter_count(), 0.0);
  double ll = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* x = design_.data() + r * features_;
    double z = params[0];
    for (std::size_t i = 0; i < features_; ++i) z += params[i + 1] * x[i];
    ll += labels_[r] * z - softplus(z);
    const double residual = labels_[r] - logistic(z);
    grad[0] += residual;
    for (std::size_t i = 0; i < features_; ++i) grad[i + 1] += residual * x[i];
  }
  const double inv_n = rows_ > 0 ? 1.0 / static_cast<double>(rows_) : 0.0;
  ll *= inv_n;
  for (auto& g : grad) g *= inv_n;
  if (l2_ > 0.0) {
    for (std::size_t i = 1; i < params.size(); ++i) {
      ll -= 0.5 * l2_ * params[i] * params[i];
      grad[i] -= l2_ * params[i];
    }
  }
  return {ll, std::move(grad)};
}

double LrObjective::log_likelihood(std::span<const double> params) const {
  return evaluate(params).first;
}

std::vector<double> LrObjective::gradient(std::span<const double> params) const {
  return evaluate(params).second;
}

TrainedLr train_lr(const SurveyDataset& dataset, const LrHyperparams& hyper) {
  hyper.validate();
  dataset.require_both_classes();

  FeatureScaling scaling = fit_scaling(dataset);
  const LrObjective objective(dataset, scaling, hyper.l2);
  std::vector<double> params(objective.parameter_count(), 0.0);

  LrDiagnostics diag;
  for (int epoch = 0;; ++epoch) {
    const auto [ll, grad] = objective.evaluate(params);
    if (!std::isfinite(ll)) {
      throw Error(ErrorCode::NonFinite, "non-finite log-likelihood at epoch " +
                                            std::to_string(epoch) +
                                            " (learning rate too large?)");
    }
    double max_grad = 0.0;
    for (double g : grad) max_grad = std::max(max_grad, std::abs(g));
    diag.epochs = epoch;
    diag.max_abs_gradient = max_grad;
    if (max_grad < hyper.tolerance) {
      diag.converged = true;
      break;
    }
    if (epoch >= hyper.max_epochs) break;
    for (std::size_t k = 0; k < params.size(); ++k) params[k] += hyper.learning_rate * grad[k];
  }

  const double beta0 = params[0];
  std::vector<double> beta(params.begin() + 1, params.end());
  return TrainedLr(dataset.catalog(), beta0, std::move(beta), std::move(scaling), diag, hyper);
}

}  // namespace aqsspm
