#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "centauts/group.hpp"

namespace centauts {

struct GroupFile {
  std::string name;
  Group group;
};

/// Parses a group document:
///   {"name": str, "format": "cayley"|"perm"|"product",
///    "n": int, "table": [[int]]            (cayley)
///    "degree": int, "generators": [[int]]  (perm, image form)
///    "factors": [name or spec]}            (product; names from the catalog)
/// ParseError carries the line/column or the JSON path of the problem.
GroupFile parse_group_text(const std::string& text, std::size_t cap = kDefaultElementCap);
GroupFile parse_group_json(const nlohmann::json& doc, std::size_t cap = kDefaultElementCap);
// IoError if the file cannot be read.
GroupFile parse_group_file(const std::filesystem::path& path, std::size_t cap = kDefaultElementCap);

// The group as a cayley document; parsing it back gives the same table.
nlohmann::json group_to_json(const Group& g, const std::string& name);

}  // namespace centauts
