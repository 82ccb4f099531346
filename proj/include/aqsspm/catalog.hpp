#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aqsspm {

struct Cause {
  std::string id;
  std::string name;

  bool operator==(const Cause&) const = default;
};

// Ordered list of causes; ids are always C1..Cn in order.
class CauseCatalog {
 public:
  explicit CauseCatalog(std::vector<Cause> causes);

  /// The 19 causes of challenges in agile-quantum projects.
  static CauseCatalog default_catalog();

  /// Parses `id,name` lines. Blank lines are skipped.
  static CauseCatalog parse(std::string_view text);

  /// Catalog with `n` generic causes C1..Cn.
  static CauseCatalog generic(std::size_t n);

  /// Sub-catalog keeping the given positions, renumbered C1..Ck.
  CauseCatalog select(std::span<const std::size_t> positions) const;

  std::size_t size() const noexcept { return causes_.size(); }
  const Cause& operator[](std::size_t i) const { return causes_[i]; }
  const std::vector<Cause>& causes() const noexcept { return causes_; }

  std::string serialize() const;

  bool operator==(const CauseCatalog&) const = default;

 private:
  std::vector<Cause> causes_;
};

}  // namespace aqsspm
