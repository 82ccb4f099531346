#pragma once

#include <span>
#include <string>
#include <vector>

#include "aqsspm/catalog.hpp"
#include "aqsspm/ga.hpp"
#include "aqsspm/statistics.hpp"

namespace aqsspm {

// Best-fitness levels of each cause and their dense descending ranks.
struct FitnessRanking {
  std::string label;
  std::vector<int> best_fitness;  // empty when only ranks were supplied
  std::vector<int> ranks;
};

FitnessRanking rank_fitness(std::string label, std::span<const int> best_fitness);

struct ComparisonReport {
  CauseCatalog catalog;
  FitnessRanking first;
  FitnessRanking second;
  CorrelationReport correlation;
  TTestReport ttest;  // first minus second; carries the Levene result
};

/// Spearman, Levene and t-test over two rank vectors of one catalog.
ComparisonReport compare_rankings(const CauseCatalog& catalog, FitnessRanking first,
                                  FitnessRanking second);

/// Ranks each best-fitness vector, then compare_rankings. Throws
/// Error(CatalogMismatch) when the catalogs differ.
ComparisonReport compare_fitness(const CauseCatalog& catalog_a, std::string label_a,
                                 std::span<const int> fitness_a, const CauseCatalog& catalog_b,
                                 std::string label_b, std::span<const int> fitness_b);

/// Comparison of the best chromosomes of an NBC-driven and an LR-driven run.
ComparisonReport compare_models(const GaRunResult& result_nbc, const GaRunResult& result_lr);

}  // namespace aqsspm
