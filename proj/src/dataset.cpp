#include "aqsspm/dataset.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "aqsspm/error.hpp"
#include "aqsspm/likert.hpp"
#include "text.hpp"

namespace aqsspm {

namespace {

constexpr std::string_view kOutcomeColumn = "outcome";

std::string cell_position(std::size_t line, std::string_view column) {
  return "row " + std::to_string(line) + ", column " + std::string(column);
}

}  // namespace

SurveyDataset::SurveyDataset(CauseCatalog catalog, std::vector<SurveyRow> rows)
    : catalog_(std::move(catalog)), rows_(std::move(rows)) {
  const std::size_t n = catalog_.size();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.scales.size() != n) {
      throw Error(ErrorCode::Shape, "row " + std::to_string(r + 1) + " has " +
                                        std::to_string(row.scales.size()) +
                                        " scales, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_valid_scale(row.scales[i])) {
        throw Error(ErrorCode::Range, "row " + std::to_string(r + 1) + ", " +
                                          catalog_[i].id + ": scale " +
                                          std::to_string(row.scales[i]) +
                                          " outside [1,9]");
      }
    }
    if (row.outcome != Outcome::Failure && row.outcome != Outcome::Success) {
      throw Error(ErrorCode::UnknownOutcome,
                  "row " + std::to_string(r + 1) + ": outcome must be 0 or 1");
    }
  }
}

std::size_t SurveyDataset::count(Outcome outcome) const {
  return static_cast<std::size_t>(std::count_if(
      rows_.begin(), rows_.end(), [&](const SurveyRow& r) { return r.outcome == outcome; }));
}

void SurveyDataset::require_both_classes() const {
  if (rows_.empty()) throw Error(ErrorCode::NoRows, "dataset has no rows");
  if (count(Outcome::Success) == 0 || count(Outcome::Failure) == 0) {
    throw Error(ErrorCode::SingleClass,
                "single-class dataset: both success and failure rows are required");
  }
}

SurveyDataset parse_dataset(std::string_view content, const CauseCatalog& catalog) {
  const auto all_lines = text::lines(content);
  if (all_lines.empty() || text::trim(all_lines.front()).empty()) {
    throw Error(ErrorCode::Parse, "dataset: missing header row");
  }

  // Map header columns onto catalog positions.
  const auto header = text::split(all_lines.front());
  const std::size_t n = catalog.size();
  std::vector<std::optional<std::size_t>> column_of_cause(n);
  std::optional<std::size_t> outcome_column;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const auto name = header[c];
    if (name == kOutcomeColumn) {
      if (outcome_column) throw Error(ErrorCode::Shape, "duplicate column 'outcome'");
      outcome_column = c;
      continue;
    }
    bool matched = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (catalog[i].id == name) {
        if (column_of_cause[i]) {
          throw Error(ErrorCode::Shape, "duplicate column '" + std::string(name) + "'");
        }
        column_of_cause[i] = c;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorCode::Shape, "unexpected column '" + std::string(name) + "'");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!column_of_cause[i]) {
      throw Error(ErrorCode::Shape, "missing column '" + catalog[i].id + "'");
    }
  }
  if (!outcome_column) throw Error(ErrorCode::Shape, "missing column 'outcome'");

  std::vector<SurveyRow> rows;
  for (std::size_t l = 1; l < all_lines.size(); ++l) {
    const std::size_t line_no = l + 1;
    if (text::trim(all_lines[l]).empty()) continue;
    const auto cells = text::split(all_lines[l]);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::Shape, "row " + std::to_string(line_no) + ": expected " +
                                        std::to_string(header.size()) + " cells, found " +
                                        std::to_string(cells.size()));
    }
    SurveyRow row;
    row.scales.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto cell = cells[*column_of_cause[i]];
      const auto value = text::parse_integer(cell);
      if (!value) {
        throw Error(ErrorCode::Parse, cell_position(line_no, catalog[i].id) +
                                          ": malformed cell '" + std::string(cell) + "'");
      }
      if (*value < kScaleMin || *value > kScaleMax) {
        throw Error(ErrorCode::Range, cell_position(line_no, catalog[i].id) + ": scale " +
                                          std::to_string(*value) + " outside [1,9]");
      }
      row.scales[i] = static_cast<int>(*value);
    }
    const auto outcome_cell = cells[*outcome_column];
    const auto outcome = text::parse_integer(outcome_cell);
    if (!outcome || (*outcome != 0 && *outcome != 1)) {
      throw Error(ErrorCode::UnknownOutcome, cell_position(line_no, kOutcomeColumn) +
                                                 ": unknown outcome value '" +
                                                 std::string(outcome_cell) + "'");
    }
    row.outcome = *outcome == 1 ? Outcome::Success : Outcome::Failure;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::NoRows, "dataset: no rows");
  return SurveyDataset(catalog, std::move(rows));
}

std::string serialize_dataset(const SurveyDataset& dataset) {
  std::ostringstream out;
  for (const auto& cause : dataset.catalog().causes()) out << cause.id << ',';
  out << kOutcomeColumn << '\n';
  for (const auto& row : dataset.rows()) {
    for (int s : row.scales) out << s << ',';
    out << static_cast<int>(row.outcome) << '\n';
  }
  return out.str();
}

}  // namespace aqsspm
