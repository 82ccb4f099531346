#pragma once

#include <json.hpp>

#include "aqsspm/catalog.hpp"

namespace aqsspm {

inline nlohmann::json catalog_to_json(const CauseCatalog& catalog) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : catalog.causes()) out.push_back({{"id", c.id}, {"name", c.name}});
  return out;
}

inline CauseCatalog catalog_from_json(const nlohmann::json& doc) {
  std::vector<Cause> causes;
  for (const auto& c : doc) {
    causes.push_back({c.at("id").get<std::string>(), c.at("name").get<std::string>()});
  }
  return CauseCatalog(std::move(causes));
}

}  // namespace aqsspm
