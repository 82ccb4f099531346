#include "aqsspm/likert.hpp"

#include <string>

#include "aqsspm/error.hpp"

namespace aqsspm {

std::string_view scale_label(int level) {
  if (!is_valid_scale(level)) {
    throw Error(ErrorCode::Range,
                "scale level " + std::to_string(level) + " outside [1,9]");
  }
  return kScaleLabels[static_cast<std::size_t>(level - kScaleMin)];
}

int scale_level(std::string_view label) {
  if (label == "Neutral") return 5;
  for (std::size_t i = 0; i < kScaleLabels.size(); ++i) {
    if (kScaleLabels[i] == label) return static_cast<int>(i) + kScaleMin;
  }
  throw Error(ErrorCode::Parse, "unknown scale label '" + std::string(label) + "'");
}

}  // namespace aqsspm
