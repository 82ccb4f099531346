#include "aqsspm/comparison.hpp"

#include "aqsspm/error.hpp"

namespace aqsspm {

FitnessRanking rank_fitness(std::string label, std::span<const int> best_fitness) {
  return {std::move(label), {best_fitness.begin(), best_fitness.end()},
          dense_rank_descending(best_fitness)};
}

ComparisonReport compare_rankings(const CauseCatalog& catalog, FitnessRanking first,
                                  FitnessRanking second) {
  if (first.ranks.size() != catalog.size() || second.ranks.size() != catalog.size()) {
    throw Error(ErrorCode::LengthMismatch, "rank vectors must have one entry per cause");
  }
  const std::vector<double> a(first.ranks.begin(), first.ranks.end());
  const std::vector<double> b(second.ranks.begin(), second.ranks.end());
  auto correlation = spearman(a, b);
  auto ttest = independent_t_test(a, b);
  return {catalog, std::move(first), std::move(second), correlation, ttest};
}

ComparisonReport compare_fitness(const CauseCatalog& catalog_a, std::string label_a,
                                 std::span<const int> fitness_a, const CauseCatalog& catalog_b,
                                 std::string label_b, std::span<const int> fitness_b) {
  if (!(catalog_a == catalog_b)) {
    throw Error(ErrorCode::CatalogMismatch, "catalog mismatch: results use different causes");
  }
  return compare_rankings(catalog_a, rank_fitness(std::move(label_a), fitness_a),
                          rank_fitness(std::move(label_b), fitness_b));
}

ComparisonReport compare_models(const GaRunResult& result_nbc, const GaRunResult& result_lr) {
  return compare_fitness(result_nbc.catalog, "GA-NBC", result_nbc.best.chromosome.genes,
                         result_lr.catalog, "GA-LR", result_lr.best.chromosome.genes);
}

}  // namespace aqsspm
