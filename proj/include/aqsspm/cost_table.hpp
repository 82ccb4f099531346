#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aqsspm/catalog.hpp"
#include "aqsspm/likert.hpp"

namespace aqsspm {

using CostRow = std::array<int, kScaleCount>;

// Expert-supplied remediation cost of each cause at each scale level.
//
// The normalization bounds are the row-wise minimum and maximum sums. Rows are
// not monotone in the scale (the built-in C14 row is cheapest at L, C16 costs
// more at SL than at N), so every column is scanned.
class CostTable {
 public:
  /// Throws Error(Shape) on a row count mismatch, Error(Range) on a negative
  /// cost, Error(DegenerateTable) when min_total == max_total.
  CostTable(CauseCatalog catalog, std::vector<CostRow> costs);

  /// The built-in 19-cause table.
  static CostTable builtin();

  const CauseCatalog& catalog() const noexcept { return catalog_; }
  std::size_t cause_count() const noexcept { return costs_.size(); }
  const std::vector<CostRow>& rows() const noexcept { return costs_; }

  int cost(std::size_t cause, int scale) const;

  int min_total() const noexcept { return min_total_; }
  int max_total() const noexcept { return max_total_; }

  /// Sub-table over the given cause positions (catalog renumbered C1..Ck).
  CostTable select(std::span<const std::size_t> positions) const;

  bool operator==(const CostTable&) const = default;

 private:
  CauseCatalog catalog_;
  std::vector<CostRow> costs_;
  int min_total_ = 0;
  int max_total_ = 0;
};

/// Total cost of a solution: sum over causes of c[i][solution[i]].
int cost_of(std::span<const int> solution, const CostTable& table);

/// (cost_of - min_total) / (max_total - min_total), always in [0,1].
double normalized_cost(std::span<const int> solution, const CostTable& table);

/// Parses `cause,EL,VL,L,SL,N,SH,MH,VH,EH` with one row per catalog cause.
CostTable load_cost_table(std::string_view text, const CauseCatalog& catalog);

std::string serialize_cost_table(const CostTable& table);

}  // namespace aqsspm
