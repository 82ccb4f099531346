#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "aqsspm/catalog.hpp"
#include "aqsspm/cost_table.hpp"
#include "aqsspm/predictor.hpp"

namespace aqsspm {

using Rng = std::mt19937_64;

// One candidate solution: a scale level per cause, in catalog order.
struct Chromosome {
  std::vector<int> genes;

  std::size_t size() const noexcept { return genes.size(); }
  bool operator==(const Chromosome&) const = default;
};

// Defaults are the published GA settings. Selection is always roulette
// wheel, crossover single point, mutation random reset; gene count comes
// from the cause catalog rather than from a parameter.
struct GaParams {
  int max_iterations = 100;
  int population_size = 50;
  int s_min = 1;
  int s_max = 9;
  double crossover_probability = 0.8;
  double mutation_probability = 0.1;
  std::uint64_t seed = 0;

  /// Throws Error(InvalidArgument) on out-of-range settings. Bounds must
  /// satisfy 1 <= s_min <= s_max <= 9 (equal bounds pin every gene).
  void validate() const;
};

struct EvaluatedChromosome {
  Chromosome chromosome;
  double success_probability = 0.0;
  int raw_cost = 0;
  double normalized_cost = 0.0;
  double efficacy = 0.0;  // success_probability - normalized_cost
};

struct GenerationRecord {
  int generation = 0;
  double best_efficacy = 0.0;          // best so far
  double mean_efficacy = 0.0;          // current population
  double best_probability = 0.0;       // of the best so far
  double best_normalized_cost = 0.0;   // of the best so far
  double generation_best_efficacy = 0.0;  // best within this generation only
};

struct GaRunResult {
  CauseCatalog catalog;
  EvaluatedChromosome best;           // best ever evaluated
  EvaluatedChromosome initial_best;   // best member of the random initial population
  EvaluatedChromosome final_generation_best;
  double initial_mean_probability = 0.0;
  double initial_mean_cost = 0.0;     // mean normalized cost of the initial population
  std::vector<GenerationRecord> trace;  // generation 0 = initial population
  int generations_run = 0;
};

/// Success probability, raw and normalized cost, and efficacy
/// E = Prob(S) - norm(C(S)). A gene outside [1,9] is an internal fault.
EvaluatedChromosome evaluate(const Chromosome& chromosome, const SuccessPredictor& predictor,
                             const CostTable& table);

/// population_size chromosomes with i.i.d. uniform genes on [s_min, s_max].
std::vector<Chromosome> initialize_population(const GaParams& params, std::size_t gene_count,
                                              Rng& rng);

/// Roulette-wheel weight. Efficacy lies in [-1, 1], so the shift keeps
/// every weight in [0, 2] while preserving order.
constexpr double selection_weight(double efficacy) { return efficacy + 1.0; }

/// Index of the selected member, with probability proportional to
/// selection_weight. Uniform when every weight is zero.
std::size_t roulette_select(std::span<const EvaluatedChromosome> population, Rng& rng);

/// Children that swap gene suffixes starting at position `cut`.
std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut);

/// With probability crossover_probability, cut uniformly in [1, n-1] and swap
/// suffixes; otherwise return copies of the parents.
std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& a,
                                                         const Chromosome& b,
                                                         const GaParams& params, Rng& rng);

/// Each gene independently redrawn from [s_min, s_max] with probability
/// mutation_probability.
Chromosome random_mutate(Chromosome chromosome, const GaParams& params, Rng& rng);

/// Generational GA: initialize, then max_iterations rounds of
/// select / crossover / mutate / replace. The best chromosome ever evaluated
/// is tracked outside the population; ties keep the first one found.
GaRunResult run_ga(const GaParams& params, const SuccessPredictor& predictor,
                   const CostTable& table);

inline constexpr std::uint64_t kDefaultExhaustiveBudget = 1'000'000;

/// True maximizer of the efficacy over [s_min, s_max]^n by enumeration in
/// lexicographic order (first maximizer wins). Throws Error(BudgetExceeded)
/// when the state count exceeds `budget`.
EvaluatedChromosome exhaustive_search(const SuccessPredictor& predictor, const CostTable& table,
                                      const GaParams& params,
                                      std::uint64_t budget = kDefaultExhaustiveBudget);

}  // namespace aqsspm
