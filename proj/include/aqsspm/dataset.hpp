#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aqsspm/catalog.hpp"

namespace aqsspm {

enum class Outcome : int { Failure = 0, Success = 1 };

struct SurveyRow {
  std::vector<int> scales;
  Outcome outcome = Outcome::Failure;

  bool operator==(const SurveyRow&) const = default;
};

// Survey responses: one row per respondent, n Likert scales plus an outcome.
class SurveyDataset {
 public:
  /// Validates every row against the catalog (length n, scales in [1,9]).
  SurveyDataset(CauseCatalog catalog, std::vector<SurveyRow> rows);

  const CauseCatalog& catalog() const noexcept { return catalog_; }
  const std::vector<SurveyRow>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::size_t cause_count() const noexcept { return catalog_.size(); }

  std::size_t count(Outcome outcome) const;

  /// Throws Error(NoRows) when empty, Error(SingleClass) unless both
  /// outcomes occur. Both classifiers call this before training.
  void require_both_classes() const;

  bool operator==(const SurveyDataset&) const = default;

 private:
  CauseCatalog catalog_;
  std::vector<SurveyRow> rows_;
};

/// Parses the `C1,...,Cn,outcome` comma-separated format. Columns are matched
/// to the catalog by header name; errors name the offending row and column.
SurveyDataset parse_dataset(std::string_view text, const CauseCatalog& catalog);

/// Writes the canonical form accepted by parse_dataset (LF line endings).
std::string serialize_dataset(const SurveyDataset& dataset);

// Ground truth for synthetic data: success with probability
// logistic(intercept + sum(weights * scales) + noise * N(0,1)).
struct SyntheticDataSpec {
  CauseCatalog catalog;
  std::size_t row_count = 0;
  std::vector<double> effect_weights;
  double intercept = 0.0;
  double noise = 0.0;

  /// Monotone planted effects used by the CLI `synth` command and the bundled
  /// fixtures: every cause matters equally in magnitude, a few positively and
  /// the rest negatively, and uniform random profiles rarely succeed.
  static SyntheticDataSpec planted(CauseCatalog catalog, std::size_t row_count);
};

SurveyDataset generate_synthetic(const SyntheticDataSpec& spec, std::uint64_t seed);

}  // namespace aqsspm
