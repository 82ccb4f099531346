#include "aqsspm/catalog.hpp"

#include <sstream>

#include "aqsspm/error.hpp"
#include "text.hpp"

namespace aqsspm {

namespace {

std::string expected_id(std::size_t position) {
  return "C" + std::to_string(position + 1);
}

}  // namespace

CauseCatalog::CauseCatalog(std::vector<Cause> causes) : causes_(std::move(causes)) {
  if (causes_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "cause catalog must not be empty");
  }
  for (std::size_t i = 0; i < causes_.size(); ++i) {
    if (causes_[i].id != expected_id(i)) {
      throw Error(ErrorCode::Parse, "catalog entry " + std::to_string(i + 1) +
                                        " has id '" + causes_[i].id +
                                        "', expected '" + expected_id(i) + "'");
    }
  }
}

CauseCatalog CauseCatalog::default_catalog() {
  static const std::vector<Cause> causes = {
      {"C1", "Lack of domain specific knowledge"},
      {"C2", "Lack of market interest"},
      {"C3", "Limited academic research"},
      {"C4", "Funding sources"},
      {"C5", "Complex technical requirements"},
      {"C6", "Cross-disciplinary integration difficulties"},
      {"C7", "Rapid pace of innovation"},
      {"C8", "Right tool for right job"},
      {"C9", "Lack of industrial interest"},
      {"C10", "Limited resources"},
      {"C11", "Varying interpretations of agile methodologies"},
      {"C12", "Rapid evolution of quantum technologies"},
      {"C13", "Complexity of quantum computing concepts"},
      {"C14", "Necessity of integration with existing standards"},
      {"C15", "Technological paradigm shift"},
      {"C16", "Transforming process from legacy to quantum software"},
      {"C17", "Gap between research and practice"},
      {"C18", "Emerging working culture"},
      {"C19", "Interdisciplinary collaboration barriers"},
  };
  return CauseCatalog(causes);
}

CauseCatalog CauseCatalog::parse(std::string_view content) {
  std::vector<Cause> causes;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(content)) {
    ++line_no;
    line = text::trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::Parse, "catalog line " + std::to_string(line_no) +
                                        ": expected 'id,name'");
    }
    causes.push_back({std::string(text::trim(line.substr(0, comma))),
                      std::string(text::trim(line.substr(comma + 1)))});
  }
  if (causes.empty()) throw Error(ErrorCode::NoRows, "catalog: no rows");
  return CauseCatalog(std::move(causes));
}

CauseCatalog CauseCatalog::generic(std::size_t n) {
  std::vector<Cause> causes;
  causes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    causes.push_back({expected_id(i), "Cause " + std::to_string(i + 1)});
  }
  return CauseCatalog(std::move(causes));
}

CauseCatalog CauseCatalog::select(std::span<const std::size_t> positions) const {
  std::vector<Cause> picked;
  picked.reserve(positions.size());
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= causes_.size()) {
      throw Error(ErrorCode::Range, "catalog position out of range");
    }
    picked.push_back({expected_id(k), causes_[positions[k]].name});
  }
  return CauseCatalog(std::move(picked));
}

std::string CauseCatalog::serialize() const {
  std::ostringstream out;
  for (const auto& cause : causes_) out << cause.id << ',' << cause.name << '\n';
  return out.str();
}

}  // namespace aqsspm
