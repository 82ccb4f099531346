#pragma once

#include <span>
#include <utility>
#include <vector>

#include "aqsspm/catalog.hpp"
#include "aqsspm/dataset.hpp"
#include "aqsspm/predictor.hpp"

namespace aqsspm {

struct LrHyperparams {
  double learning_rate = 0.05;
  int max_epochs = 50'000;
  double tolerance = 1e-6;
  // Optional ridge penalty on the slope coefficients (not the intercept).
  double l2 = 0.0;

  void validate() const;
};

struct LrDiagnostics {
  int epochs = 0;
  double max_abs_gradient = 0.0;
  bool converged = false;
};

// Per-cause affine transform applied before the linear score.
struct FeatureScaling {
  std::vector<double> center;
  std::vector<double> scale;
};

/// Mean and population standard deviation of each cause; a zero deviation
/// (constant column) is replaced by 1.
FeatureScaling fit_scaling(const SurveyDataset& dataset);

// Logistic regression on standardized Likert features:
// Prob(T=1) = 1 / (1 + exp(-(beta0 + sum beta_i * (f_i - center_i) / scale_i))).
class TrainedLr final : public SuccessPredictor {
 public:
  TrainedLr(CauseCatalog catalog, double beta0, std::vector<double> beta,
            FeatureScaling scaling, LrDiagnostics diagnostics, LrHyperparams hyper);

  double predict(std::span<const int> scales) const override;
  std::size_t cause_count() const override { return beta_.size(); }

  /// The argument of the logistic function for these scales.
  double linear_score(std::span<const int> scales) const;

  double beta0() const noexcept { return beta0_; }
  const std::vector<double>& beta() const noexcept { return beta_; }
  const FeatureScaling& scaling() const noexcept { return scaling_; }
  const LrDiagnostics& diagnostics() const noexcept { return diagnostics_; }
  const LrHyperparams& hyperparams() const noexcept { return hyper_; }
  const CauseCatalog& catalog() const noexcept { return catalog_; }

 private:
  CauseCatalog catalog_;
  double beta0_;
  std::vector<double> beta_;
  FeatureScaling scaling_;
  LrDiagnostics diagnostics_;
  LrHyperparams hyper_;
};

/// Numerically stable logistic function.
double logistic(double x);

// Mean log-likelihood of a dataset under given coefficients, with its
// analytic gradient. Parameters are packed as [beta0, beta_1 .. beta_n].
class LrObjective {
 public:
  LrObjective(const SurveyDataset& dataset, FeatureScaling scaling, double l2 = 0.0);

  /// (1/N) sum [y z - log(1 + e^z)] - (l2 / 2) |beta|^2.
  double log_likelihood(std::span<const double> params) const;

  std::vector<double> gradient(std::span<const double> params) const;

  /// Both in one pass over the data.
  std::pair<double, std::vector<double>> evaluate(std::span<const double> params) const;

  std::size_t parameter_count() const noexcept { return features_ + 1; }

 private:
  std::size_t features_;
  std::size_t rows_;
  std::vector<double> design_;  // row-major standardized features
  std::vector<double> labels_;
  double l2_;
};

/// Full-batch gradient ascent from zero; stops once the largest gradient
/// component falls below `tolerance`, otherwise after max_epochs with
/// diagnostics().converged = false. Throws Error(NonFinite) if the
/// log-likelihood stops being finite.
TrainedLr train_lr(const SurveyDataset& dataset, const LrHyperparams& hyper = {});

}  // namespace aqsspm
