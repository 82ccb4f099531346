#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aqsspm {

/// Rank 1 for the largest distinct value; ties share a rank and each
/// successive distinct value gets the next integer. Throws on empty input.
std::vector<int> dense_rank_descending(std::span<const double> values);
std::vector<int> dense_rank_descending(std::span<const int> values);

/// Ascending fractional ranks (1-based); tied values receive the mean of
/// the positions they occupy.
std::vector<double> average_ranks(std::span<const double> values);

struct CorrelationReport {
  double rho = 0.0;
  double p_value = 1.0;  // two-sided
  std::size_t n = 0;
};

/// Spearman's rank correlation as the Pearson correlation of average ranks,
/// which stays valid with ties. Two-sided p from
/// t = rho * sqrt((n - 2) / (1 - rho^2)) on n - 2 degrees of freedom.
/// Throws Error(LengthMismatch), Error(InvalidArgument) for n < 3 and
/// Error(ZeroVariance) when either input is constant.
CorrelationReport spearman(std::span<const double> a, std::span<const double> b);

struct LeveneReport {
  double f = 0.0;
  double p_value = 1.0;
  double df1 = 1.0;
  double df2 = 0.0;
};

/// Mean-centred Levene test for two groups: one-way ANOVA on
/// |x - group mean|. Each group needs at least two values.
LeveneReport levene_test(std::span<const double> a, std::span<const double> b);

struct TTestBranch {
  double t = 0.0;
  double df = 0.0;
  double p_two_tailed = 1.0;
  double std_error_difference = 0.0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
};

struct TTestReport {
  double levene_f = 0.0;
  double levene_p = 1.0;
  double mean_difference = 0.0;  // mean(a) - mean(b)
  TTestBranch pooled;  // equal variances assumed; df = n1 + n2 - 2
  TTestBranch welch;   // reported alongside, Welch-Satterthwaite df

  // Shorthands for the equal-variances row.
  double t() const { return pooled.t; }
  double df() const { return pooled.df; }
  double p_two_tailed() const { return pooled.p_two_tailed; }
  double std_error_difference() const { return pooled.std_error_difference; }
};

/// Independent-samples t-test with Levene's test. Identical constant groups
/// give t = 0; zero pooled variance with different means throws
/// Error(ZeroVariance).
TTestReport independent_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace aqsspm
