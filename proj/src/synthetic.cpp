#include <cmath>
#include <numeric>
#include <random>

#include "aqsspm/dataset.hpp"
#include "aqsspm/error.hpp"
#include "aqsspm/likert.hpp"

namespace aqsspm {

SyntheticDataSpec SyntheticDataSpec::planted(CauseCatalog catalog, std::size_t row_count) {
  // Equal-magnitude effects on every cause keep the best of a small random
  // population far below the optimum. Every seventh cause (C1, C8, C15, ...)
  // helps; the others hurt, so the optimum mostly sits on cheap low levels.
  constexpr double kScoreSd = 1.5;     // sd of the score over uniform profiles
  constexpr double kThresholdSd = 2.8; // logistic midpoint, in score sds above the mean
  const std::size_t n = catalog.size();
  const double level_variance = (kScaleCount * kScaleCount - 1) / 12.0;
  const double magnitude = kScoreSd / std::sqrt(static_cast<double>(n) * level_variance);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = (i % 7 == 0) ? magnitude : -magnitude;
  const double mean_score = 5.0 * std::accumulate(weights.begin(), weights.end(), 0.0);
  return SyntheticDataSpec{std::move(catalog), row_count, std::move(weights),
                           -mean_score - kThresholdSd * kScoreSd, 0.0};
}

SurveyDataset generate_synthetic(const SyntheticDataSpec& spec, std::uint64_t seed) {
  if (spec.row_count < 2) {
    throw Error(ErrorCode::InvalidArgument, "synthetic dataset needs at least 2 rows");
  }
  const std::size_t n = spec.catalog.size();
  if (spec.effect_weights.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "effect_weights length " +
                                               std::to_string(spec.effect_weights.size()) +
                                               " does not match catalog size " +
                                               std::to_string(n));
  }
  if (!(spec.noise >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "noise must be non-negative");
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> scale(kScaleMin, kScaleMax);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<SurveyRow> rows;
  rows.reserve(spec.row_count);
  for (std::size_t r = 0; r < spec.row_count; ++r) {
    SurveyRow row;
    row.scales.resize(n);
    double score = spec.intercept;
    for (std::size_t i = 0; i < n; ++i) {
      row.scales[i] = scale(rng);
      score += spec.effect_weights[i] * row.scales[i];
    }
    if (spec.noise > 0.0) score += spec.noise * gaussian(rng);
    const double p_success = 1.0 / (1.0 + std::exp(-score));
    row.outcome = unit(rng) < p_success ? Outcome::Success : Outcome::Failure;
    rows.push_back(std::move(row));
  }
  return SurveyDataset(spec.catalog, std::move(rows));
}

}  // namespace aqsspm
