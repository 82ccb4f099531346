#include "aqsspm/cost_table.hpp"

#include <algorithm>
#include <sstream>

#include "aqsspm/error.hpp"
#include "text.hpp"

namespace aqsspm {

CostTable::CostTable(CauseCatalog catalog, std::vector<CostRow> costs)
    : catalog_(std::move(catalog)), costs_(std::move(costs)) {
  if (costs_.size() != catalog_.size()) {
    throw Error(ErrorCode::Shape, "cost table has " + std::to_string(costs_.size()) +
                                      " rows, catalog has " +
                                      std::to_string(catalog_.size()) + " causes");
  }
  for (std::size_t i = 0; i < costs_.size(); ++i) {
    for (int c : costs_[i]) {
      if (c < 0) {
        throw Error(ErrorCode::Range,
                    "cost table row " + catalog_[i].id + " has a negative cost");
      }
    }
    min_total_ += *std::min_element(costs_[i].begin(), costs_[i].end());
    max_total_ += *std::max_element(costs_[i].begin(), costs_[i].end());
  }
  if (min_total_ >= max_total_) {
    throw Error(ErrorCode::DegenerateTable,
                "degenerate cost table: minimum total equals maximum total (" +
                    std::to_string(min_total_) + ")");
  }
}

CostTable CostTable::builtin() {
  //                        EL VL  L SL  N SH MH VH EH
  static const std::vector<CostRow> rows = {
      CostRow{2, 3, 3, 4, 5, 6, 6, 7, 8},  // C1
      CostRow{2, 2, 2, 4, 5, 6, 6, 7, 8},  // C2
      CostRow{2, 2, 3, 4, 4, 5, 6, 7, 8},  // C3
      CostRow{2, 2, 3, 4, 4, 6, 6, 7, 8},  // C4
      CostRow{1, 2, 2, 2, 4, 6, 6, 7, 7},  // C5
      CostRow{1, 2, 2, 3, 4, 6, 6, 7, 7},  // C6
      CostRow{1, 1, 2, 3, 5, 6, 6, 6, 7},  // C7
      CostRow{1, 1, 2, 3, 4, 4, 5, 6, 8},  // C8
      CostRow{3, 3, 4, 4, 5, 5, 6, 7, 8},  // C9
      CostRow{1, 2, 2, 2, 5, 6, 6, 6, 7},  // C10
      CostRow{1, 2, 3, 4, 5, 6, 7, 7, 8},  // C11
      CostRow{2, 3, 3, 4, 5, 6, 7, 8, 9},  // C12
      CostRow{2, 3, 3, 4, 5, 6, 7, 8, 9},  // C13
      CostRow{4, 3, 2, 4, 4, 6, 7, 7, 8},  // C14
      CostRow{3, 3, 4, 4, 5, 5, 6, 7, 8},  // C15
      CostRow{1, 1, 2, 5, 4, 3, 5, 6, 8},  // C16
      CostRow{2, 2, 4, 4, 5, 6, 7, 7, 8},  // C17
      CostRow{1, 4, 3, 5, 5, 6, 7, 8, 9},  // C18
      CostRow{1, 2, 2, 2, 4, 6, 8, 7, 7},  // C19
  };
  return CostTable(CauseCatalog::default_catalog(), rows);
}

int CostTable::cost(std::size_t cause, int scale) const {
  if (cause >= costs_.size()) throw Error(ErrorCode::Range, "cause index out of range");
  if (!is_valid_scale(scale)) {
    throw Error(ErrorCode::Range, catalog_[cause].id + ": scale " + std::to_string(scale) +
                                      " outside [1,9]");
  }
  return costs_[cause][static_cast<std::size_t>(scale - kScaleMin)];
}

CostTable CostTable::select(std::span<const std::size_t> positions) const {
  std::vector<CostRow> picked;
  picked.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= costs_.size()) throw Error(ErrorCode::Range, "cost table position out of range");
    picked.push_back(costs_[p]);
  }
  return CostTable(catalog_.select(positions), std::move(picked));
}

int cost_of(std::span<const int> solution, const CostTable& table) {
  if (solution.size() != table.cause_count()) {
    throw Error(ErrorCode::LengthMismatch,
                "solution has " + std::to_string(solution.size()) + " genes, table has " +
                    std::to_string(table.cause_count()) + " causes");
  }
  int total = 0;
  for (std::size_t i = 0; i < solution.size(); ++i) total += table.cost(i, solution[i]);
  return total;
}

double normalized_cost(std::span<const int> solution, const CostTable& table) {
  const int total = cost_of(solution, table);
  return static_cast<double>(total - table.min_total()) /
         static_cast<double>(table.max_total() - table.min_total());
}

CostTable load_cost_table(std::string_view content, const CauseCatalog& catalog) {
  const auto all_lines = text::lines(content);
  if (all_lines.empty()) throw Error(ErrorCode::Shape, "cost table: missing header row");

  const auto header = text::split(all_lines.front());
  if (header.empty() || header[0] != "cause") {
    throw Error(ErrorCode::Shape, "cost table: first column must be 'cause'");
  }
  for (int level = kScaleMin; level <= kScaleMax; ++level) {
    const auto idx = static_cast<std::size_t>(level - kScaleMin) + 1;
    const auto expected = scale_label(level);
    if (idx >= header.size()) {
      throw Error(ErrorCode::Shape, "cost table: missing column '" + std::string(expected) + "'");
    }
    bool ok = false;
    try {
      ok = scale_level(header[idx]) == level;
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      throw Error(ErrorCode::Shape, "cost table: column " + std::to_string(idx + 1) +
                                        " is '" + std::string(header[idx]) +
                                        "', expected '" + std::string(expected) + "'");
    }
  }
  if (header.size() != kScaleCount + 1) {
    throw Error(ErrorCode::Shape, "cost table: expected 10 columns, found " +
                                      std::to_string(header.size()));
  }

  std::vector<CostRow> rows;
  for (std::size_t l = 1; l < all_lines.size(); ++l) {
    if (text::trim(all_lines[l]).empty()) continue;
    const auto cells = text::split(all_lines[l]);
    const std::string line_tag = "cost table row " + std::to_string(l + 1);
    if (cells.size() != kScaleCount + 1) {
      throw Error(ErrorCode::Shape, line_tag + ": expected 10 cells, found " +
                                        std::to_string(cells.size()));
    }
    const std::size_t cause = rows.size();
    if (cause >= catalog.size()) {
      throw Error(ErrorCode::Shape, line_tag + ": more rows than catalog causes (" +
                                        std::to_string(catalog.size()) + ")");
    }
    if (cells[0] != catalog[cause].id) {
      throw Error(ErrorCode::Shape, line_tag + ": cause '" + std::string(cells[0]) +
                                        "', expected '" + catalog[cause].id + "'");
    }
    CostRow row{};
    for (std::size_t j = 0; j < kScaleCount; ++j) {
      const auto value = text::parse_integer(cells[j + 1]);
      if (!value) {
        throw Error(ErrorCode::Parse, line_tag + ", column " + std::string(kScaleLabels[j]) +
                                          ": non-integer cell '" + std::string(cells[j + 1]) +
                                          "'");
      }
      row[j] = static_cast<int>(*value);
    }
    rows.push_back(row);
  }
  if (rows.size() != catalog.size()) {
    throw Error(ErrorCode::Shape, "cost table has " + std::to_string(rows.size()) +
                                      " rows, catalog has " + std::to_string(catalog.size()));
  }
  return CostTable(catalog, std::move(rows));
}

std::string serialize_cost_table(const CostTable& table) {
  std::ostringstream out;
  out << "cause";
  for (auto label : kScaleLabels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < table.cause_count(); ++i) {
    out << table.catalog()[i].id;
    for (int c : table.rows()[i]) out << ',' << c;
    out << '\n';
  }
  return out.str();
}

}  // namespace aqsspm
