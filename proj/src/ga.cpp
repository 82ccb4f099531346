#include "aqsspm/ga.hpp"

#include <algorithm>
#include <string>

#include "aqsspm/error.hpp"
#include "aqsspm/likert.hpp"

namespace aqsspm {

void GaParams::validate() const {
  if (max_iterations < 0) {
    throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 0");
  }
  if (population_size < 2) {
    throw Error(ErrorCode::InvalidArgument, "population_size must be >= 2");
  }
  if (s_min < kScaleMin || s_max > kScaleMax || s_min > s_max) {
    throw Error(ErrorCode::InvalidArgument, "gene bounds must satisfy 1 <= s_min <= s_max <= 9");
  }
  if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "crossover probability must lie in [0,1]");
  }
  if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "mutation probability must lie in [0,1]");
  }
}

EvaluatedChromosome evaluate(const Chromosome& chromosome, const SuccessPredictor& predictor,
                             const CostTable& table) {
  for (int g : chromosome.genes) {
    if (!is_valid_scale(g)) {
      throw Error(ErrorCode::Internal, "infeasible gene " + std::to_string(g));
    }
  }
  EvaluatedChromosome out;
  out.chromosome = chromosome;
  out.success_probability = predictor.predict(chromosome.genes);
  out.raw_cost = cost_of(chromosome.genes, table);
  out.normalized_cost = static_cast<double>(out.raw_cost - table.min_total()) /
                        static_cast<double>(table.max_total() - table.min_total());
  out.efficacy = out.success_probability - out.normalized_cost;
  return out;
}

std::vector<Chromosome> initialize_population(const GaParams& params, std::size_t gene_count,
                                              Rng& rng) {
  params.validate();
  std::uniform_int_distribution<int> gene(params.s_min, params.s_max);
  std::vector<Chromosome> population(static_cast<std::size_t>(params.population_size));
  for (auto& c : population) {
    c.genes.resize(gene_count);
    for (auto& g : c.genes) g = gene(rng);
  }
  return population;
}

std::size_t roulette_select(std::span<const EvaluatedChromosome> population, Rng& rng) {
  if (population.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cannot select from an empty population");
  }
  std::vector<double> cumulative;
  cumulative.reserve(population.size());
  double total = 0.0;
  for (const auto& member : population) {
    total += std::max(0.0, selection_weight(member.efficacy));
    cumulative.push_back(total);
  }
  if (!(total > 0.0)) {
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    return pick(rng);
  }
  std::uniform_real_distribution<double> spin(0.0, total);
  const double r = spin(rng);
  // First slot whose cumulative weight exceeds r; zero-weight slots never
  // qualify because their cumulative value equals their predecessor's.
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
  if (it == cumulative.end()) {
    // r == total through rounding: take the last member with positive weight.
    it = std::lower_bound(cumulative.begin(), cumulative.end(), total);
  }
  return static_cast<std::size_t>(it - cumulative.begin());
}

std::pair<Chromosome, Chromosome> crossover_at(const Chromosome& a, const Chromosome& b,
                                               std::size_t cut) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "crossover parents differ in length");
  }
  if (cut > a.size()) throw Error(ErrorCode::Range, "crossover cut point out of range");
  Chromosome child_a = a;
  Chromosome child_b = b;
  for (std::size_t i = cut; i < a.size(); ++i) std::swap(child_a.genes[i], child_b.genes[i]);
  return {std::move(child_a), std::move(child_b)};
}

std::pair<Chromosome, Chromosome> single_point_crossover(const Chromosome& a,
                                                         const Chromosome& b,
                                                         const GaParams& params, Rng& rng) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch, "crossover parents differ in length");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (!(unit(rng) < params.crossover_probability) || a.size() < 2) return {a, b};
  std::uniform_int_distribution<std::size_t> cut(1, a.size() - 1);
  return crossover_at(a, b, cut(rng));
}

Chromosome random_mutate(Chromosome chromosome, const GaParams& params, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> gene(params.s_min, params.s_max);
  for (auto& g : chromosome.genes) {
    if (unit(rng) < params.mutation_probability) g = gene(rng);
  }
  return chromosome;
}

namespace {

std::vector<EvaluatedChromosome> evaluate_all(const std::vector<Chromosome>& population,
                                              const SuccessPredictor& predictor,
                                              const CostTable& table) {
  std::vector<EvaluatedChromosome> out;
  out.reserve(population.size());
  for (const auto& c : population) out.push_back(evaluate(c, predictor, table));
  return out;
}

std::size_t argmax_efficacy(const std::vector<EvaluatedChromosome>& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (population[i].efficacy > population[best].efficacy) best = i;
  }
  return best;
}

double mean_of(const std::vector<EvaluatedChromosome>& population,
               double EvaluatedChromosome::*field) {
  double sum = 0.0;
  for (const auto& m : population) sum += m.*field;
  return sum / static_cast<double>(population.size());
}

}  // namespace

GaRunResult run_ga(const GaParams& params, const SuccessPredictor& predictor,
                   const CostTable& table) {
  params.validate();
  const std::size_t n = table.cause_count();
  if (predictor.cause_count() != n) {
    throw Error(ErrorCode::LengthMismatch,
                "predictor expects " + std::to_string(predictor.cause_count()) +
                    " causes, cost table has " + std::to_string(n));
  }

  Rng rng(params.seed);
  auto evaluated = evaluate_all(initialize_population(params, n, rng), predictor, table);

  GaRunResult result{table.catalog(), {}, {}, {}, 0.0, 0.0, {}, 0};
  result.best = evaluated[argmax_efficacy(evaluated)];
  result.initial_best = result.best;
  result.initial_mean_probability = mean_of(evaluated, &EvaluatedChromosome::success_probability);
  result.initial_mean_cost = mean_of(evaluated, &EvaluatedChromosome::normalized_cost);

  const auto record = [&](int generation) {
    GenerationRecord r;
    r.generation = generation;
    r.best_efficacy = result.best.efficacy;
    r.mean_efficacy = mean_of(evaluated, &EvaluatedChromosome::efficacy);
    r.best_probability = result.best.success_probability;
    r.best_normalized_cost = result.best.normalized_cost;
    r.generation_best_efficacy = evaluated[argmax_efficacy(evaluated)].efficacy;
    result.trace.push_back(r);
  };
  record(0);

  const auto pop_size = static_cast<std::size_t>(params.population_size);
  for (int generation = 1; generation <= params.max_iterations; ++generation) {
    std::vector<Chromosome> children;
    children.reserve(pop_size);
    while (children.size() + 1 < pop_size) {
      const auto& parent_a = evaluated[roulette_select(evaluated, rng)].chromosome;
      const auto& parent_b = evaluated[roulette_select(evaluated, rng)].chromosome;
      auto [child_a, child_b] = single_point_crossover(parent_a, parent_b, params, rng);
      children.push_back(random_mutate(std::move(child_a), params, rng));
      children.push_back(random_mutate(std::move(child_b), params, rng));
    }
    if (children.size() < pop_size) {
      const auto& clone = evaluated[roulette_select(evaluated, rng)].chromosome;
      children.push_back(random_mutate(clone, params, rng));
    }

    evaluated = evaluate_all(children, predictor, table);
    const auto& generation_best = evaluated[argmax_efficacy(evaluated)];
    if (generation_best.efficacy > result.best.efficacy) result.best = generation_best;
    record(generation);
  }

  result.final_generation_best = evaluated[argmax_efficacy(evaluated)];
  result.generations_run = params.max_iterations;
  return result;
}

}  // namespace aqsspm
