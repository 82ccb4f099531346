#include "aqsspm/predictor.hpp"

#include <string>

#include "aqsspm/error.hpp"
#include "aqsspm/likert.hpp"

namespace aqsspm {

ConstantPredictor::ConstantPredictor(double probability, std::size_t cause_count)
    : probability_(probability), cause_count_(cause_count) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "constant probability must lie in [0,1]");
  }
}

double ConstantPredictor::predict(std::span<const int> scales) const {
  validate_scales(scales, cause_count_);
  return probability_;
}

void validate_scales(std::span<const int> scales, std::size_t expected_count) {
  if (scales.size() != expected_count) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(expected_count) +
                                               " scales, got " + std::to_string(scales.size()));
  }
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!is_valid_scale(scales[i])) {
      throw Error(ErrorCode::Range, "scale " + std::to_string(scales[i]) + " at position " +
                                        std::to_string(i + 1) + " outside [1,9]");
    }
  }
}

}  // namespace aqsspm
