#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "centauts/group.hpp"

namespace centauts {

struct CatalogEntry {
  std::string name;
  std::string description;
  std::function<Group()> build;
  std::size_t order = 0;
};

// Deterministic: ordered by group order, then by insertion.
const std::vector<CatalogEntry>& catalog();
// ConfigError for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);
Group catalog_group(const std::string& name);

}  // namespace centauts
