#include "aqsspm/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "aqsspm/distributions.hpp"
#include "aqsspm/error.hpp"

namespace aqsspm {

namespace {

// Summation in sorted order, so permuted inputs give bit-identical means.
double sorted_mean(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values, double mean) {
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

void require_group(std::span<const double> group, const char* name) {
  if (group.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(name) + " needs at least two observations");
  }
}

}  // namespace

std::vector<int> dense_rank_descending(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "cannot rank an empty vector");
  std::vector<double> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (double v : values) {
    const auto it = std::lower_bound(distinct.begin(), distinct.end(), v, std::greater<>());
    ranks.push_back(static_cast<int>(it - distinct.begin()) + 1);
  }
  return ranks;
}

std::vector<int> dense_rank_descending(std::span<const int> values) {
  const std::vector<double> as_double(values.begin(), values.end());
  return dense_rank_descending(std::span<const double>(as_double));
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(values.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && values[order[end]] == values[order[start]]) ++end;
    // Positions start..end-1 (0-based) share the mean 1-based rank.
    const double shared = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) ranks[order[k]] = shared;
    start = end;
  }
  return ranks;
}

CorrelationReport spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "spearman: inputs differ in length");
  }
  if (a.size() < 3) throw Error(ErrorCode::InvalidArgument, "spearman: need at least 3 pairs");

  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double mean = 0.5 * static_cast<double>(a.size() + 1);  // same for any ranking
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    sab += (ra[i] - mean) * (rb[i] - mean);
    saa += (ra[i] - mean) * (ra[i] - mean);
    sbb += (rb[i] - mean) * (rb[i] - mean);
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw Error(ErrorCode::ZeroVariance,
                "spearman: zero variance in an input, correlation undefined");
  }

  CorrelationReport report;
  report.n = a.size();
  report.rho = std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
  const double df = static_cast<double>(report.n) - 2.0;
  const double one_minus = 1.0 - report.rho * report.rho;
  if (one_minus <= 0.0) {
    report.p_value = 0.0;
  } else {
    report.p_value = student_t_two_sided_p(report.rho * std::sqrt(df / one_minus), df);
  }
  return report;
}

LeveneReport levene_test(std::span<const double> a, std::span<const double> b) {
  require_group(a, "levene: group a");
  require_group(b, "levene: group b");

  const auto deviations = [](std::span<const double> g) {
    const double m = sorted_mean({g.begin(), g.end()});
    std::vector<double> z;
    z.reserve(g.size());
    for (double v : g) z.push_back(std::abs(v - m));
    return z;
  };
  const auto za = deviations(a);
  const auto zb = deviations(b);
  const double mean_a = sorted_mean(za);
  const double mean_b = sorted_mean(zb);
  const auto na = static_cast<double>(za.size());
  const auto nb = static_cast<double>(zb.size());
  const double grand = (na * mean_a + nb * mean_b) / (na + nb);

  const double between = na * (mean_a - grand) * (mean_a - grand) +
                         nb * (mean_b - grand) * (mean_b - grand);
  double within = 0.0;
  for (double z : za) within += (z - mean_a) * (z - mean_a);
  for (double z : zb) within += (z - mean_b) * (z - mean_b);

  LeveneReport report;
  report.df1 = 1.0;
  report.df2 = na + nb - 2.0;
  if (mean_a == mean_b) {
    if (within == 0.0) {
      throw Error(ErrorCode::Degenerate,
                  "levene: no spread in either group, statistic undefined");
    }
    report.f = 0.0;
    report.p_value = 1.0;
    return report;
  }
  if (within == 0.0) {
    report.f = std::numeric_limits<double>::infinity();
    report.p_value = 0.0;
    return report;
  }
  report.f = (between / report.df1) / (within / report.df2);
  report.p_value = f_distribution_sf(report.f, report.df1, report.df2);
  return report;
}

TTestReport independent_t_test(std::span<const double> a, std::span<const double> b) {
  require_group(a, "t-test: group a");
  require_group(b, "t-test: group b");

  TTestReport report;
  try {
    const auto lev = levene_test(a, b);
    report.levene_f = lev.f;
    report.levene_p = lev.p_value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Degenerate) throw;
    // Both groups constant: the variances are trivially equal.
    report.levene_f = 0.0;
    report.levene_p = 1.0;
  }

  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  const double mean_a = sorted_mean({a.begin(), a.end()});
  const double mean_b = sorted_mean({b.begin(), b.end()});
  const double var_a = sample_variance(a, mean_a);
  const double var_b = sample_variance(b, mean_b);
  report.mean_difference = mean_a - mean_b;

  const auto fill = [&](TTestBranch& branch, double se, double df) {
    branch.df = df;
    branch.std_error_difference = se;
    if (se == 0.0) {
      if (report.mean_difference != 0.0) {
        throw Error(ErrorCode::ZeroVariance,
                    "t-test: zero pooled variance with unequal means, t undefined");
      }
      branch.t = 0.0;
      branch.p_two_tailed = 1.0;
    } else {
      branch.t = report.mean_difference / se;
      branch.p_two_tailed = student_t_two_sided_p(branch.t, df);
    }
    const double margin = student_t_quantile(0.975, df) * se;
    branch.ci95_low = report.mean_difference - margin;
    branch.ci95_high = report.mean_difference + margin;
  };

  const double df_pooled = na + nb - 2.0;
  const double pooled_var = ((na - 1.0) * var_a + (nb - 1.0) * var_b) / df_pooled;
  fill(report.pooled, std::sqrt(pooled_var * (1.0 / na + 1.0 / nb)), df_pooled);

  const double qa = var_a / na;
  const double qb = var_b / nb;
  const double se_welch = std::sqrt(qa + qb);
  const double df_welch = (qa + qb) > 0.0
                              ? (qa + qb) * (qa + qb) /
                                    (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0))
                              : df_pooled;
  fill(report.welch, se_welch, df_welch);
  return report;
}

}  // namespace aqsspm
