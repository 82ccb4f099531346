#pragma once

#include <array>
#include <string_view>

namespace aqsspm {

// 9-point ordinal scale, Extremely Low (1) .. Extremely High (9).
inline constexpr int kScaleMin = 1;
inline constexpr int kScaleMax = 9;
inline constexpr int kScaleCount = kScaleMax - kScaleMin + 1;

inline constexpr std::array<std::string_view, kScaleCount> kScaleLabels = {
    "EL", "VL", "L", "SL", "N", "SH", "MH", "VH", "EH"};

constexpr bool is_valid_scale(int level) {
  return level >= kScaleMin && level <= kScaleMax;
}

/// Short label for a scale level; throws Error(Range) outside [1,9].
std::string_view scale_label(int level);

/// Inverse of scale_label. Accepts "Neutral" as an alias for "N".
/// Throws Error(Parse) on an unknown label.
int scale_level(std::string_view label);

}  // namespace aqsspm
