#pragma once

#include <cstddef>
#include <span>

namespace aqsspm {

// Maps a factor profile (one Likert level per cause) to Prob(success).
// Implementations are immutable after training and safe to call concurrently.
class SuccessPredictor {
 public:
  virtual ~SuccessPredictor() = default;

  /// Prob(T = 1 | scales), always in [0,1]. Throws Error(Range) on a scale
  /// outside [1,9] and Error(LengthMismatch) on a wrong-length input.
  virtual double predict(std::span<const int> scales) const = 0;

  /// Prob(T = 0 | scales) = 1 - predict(scales).
  double predict_failure(std::span<const int> scales) const { return 1.0 - predict(scales); }

  virtual std::size_t cause_count() const = 0;
};

/// Returns the same probability for every valid input. Used to reduce the
/// optimization objective to pure cost minimization.
class ConstantPredictor final : public SuccessPredictor {
 public:
  ConstantPredictor(double probability, std::size_t cause_count);

  double predict(std::span<const int> scales) const override;
  std::size_t cause_count() const override { return cause_count_; }

 private:
  double probability_;
  std::size_t cause_count_;
};

/// Shared argument check for predictor inputs.
void validate_scales(std::span<const int> scales, std::size_t expected_count);

}  // namespace aqsspm
