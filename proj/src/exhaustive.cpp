#include <string>

#include "aqsspm/error.hpp"
#include "aqsspm/ga.hpp"

namespace aqsspm {

EvaluatedChromosome exhaustive_search(const SuccessPredictor& predictor, const CostTable& table,
                                      const GaParams& params, std::uint64_t budget) {
  params.validate();
  const std::size_t n = table.cause_count();
  if (predictor.cause_count() != n) {
    throw Error(ErrorCode::LengthMismatch, "predictor and cost table disagree on cause count");
  }

  const auto levels = static_cast<std::uint64_t>(params.s_max - params.s_min + 1);
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (states > budget / levels) {
      throw Error(ErrorCode::BudgetExceeded,
                  "exhaustive search over " + std::to_string(levels) + "^" + std::to_string(n) +
                      " states exceeds budget " + std::to_string(budget));
    }
    states *= levels;
  }

  // Odometer over [s_min, s_max]^n, last gene fastest.
  Chromosome current{std::vector<int>(n, params.s_min)};
  EvaluatedChromosome best = evaluate(current, predictor, table);
  for (std::uint64_t k = 1; k < states; ++k) {
    for (std::size_t pos = n; pos-- > 0;) {
      if (current.genes[pos] < params.s_max) {
        ++current.genes[pos];
        break;
      }
      current.genes[pos] = params.s_min;
    }
    auto candidate = evaluate(current, predictor, table);
    if (candidate.efficacy > best.efficacy) best = std::move(candidate);
  }
  return best;
}

}  // namespace aqsspm
