#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "aqsspm/catalog.hpp"
#include "aqsspm/dataset.hpp"
#include "aqsspm/likert.hpp"
#include "aqsspm/predictor.hpp"

namespace aqsspm {

// Conditional table for one cause: probability of each scale level given the
// class, indexed [class][level - 1] with class 0 = failure, 1 = success.
using NbcCauseTable = std::array<std::array<double, kScaleCount>, 2>;

// Categorical Naive Bayes over the 9 Likert levels with additive smoothing.
class TrainedNbc final : public SuccessPredictor {
 public:
  TrainedNbc(CauseCatalog catalog, double prior_success, std::vector<NbcCauseTable> cpt,
             double alpha);

  double predict(std::span<const int> scales) const override;
  std::size_t cause_count() const override { return cpt_.size(); }

  /// {Prob(T=0|F), Prob(T=1|F)}, each computed from the log-domain difference
  /// of the two class scores so that they sum to 1 to rounding.
  std::pair<double, double> posterior(std::span<const int> scales) const;

  double prior_success() const noexcept { return prior_success_; }
  double prior_failure() const noexcept { return 1.0 - prior_success_; }
  double alpha() const noexcept { return alpha_; }
  const std::vector<NbcCauseTable>& cpt() const noexcept { return cpt_; }
  const CauseCatalog& catalog() const noexcept { return catalog_; }

  /// Prob(f_cause = level | T = outcome).
  double conditional(std::size_t cause, Outcome outcome, int level) const;

 private:
  CauseCatalog catalog_;
  double prior_success_;
  std::vector<NbcCauseTable> cpt_;
  double alpha_;
};

/// prior = class frequency;
/// cpt[i][T][v] = (count(f_i = v and T) + alpha) / (count(T) + 9 * alpha).
/// Requires both outcome classes and alpha >= 0.
TrainedNbc train_nbc(const SurveyDataset& dataset, double alpha = 1.0);

}  // namespace aqsspm
