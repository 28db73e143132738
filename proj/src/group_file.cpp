#include "centauts/group_file.hpp"

#include <fstream>
#include <sstream>

#include "centauts/catalog.hpp"
#include "centauts/error.hpp"

namespace centauts {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& why) {
  throw Error(ErrorKind::ParseError, where + ": " + why);
}

const json& field(const json& doc, const std::string& path, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<std::int64_t>();
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

Group parse_cayley(const json& doc, const std::string& path, std::size_t cap) {
  const std::int64_t n = integer(field(doc, path, "n"), path + "/n");
  const json& rows = array(field(doc, path, "table"), path + "/table");
  if (n <= 0) fail(path + "/n", "must be positive");
  if (rows.size() != static_cast<std::size_t>(n))
    fail(path + "/table", "has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n));
  std::vector<std::vector<std::int64_t>> table;
  table.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rowPath = path + "/table/" + std::to_string(i);
    const json& row = array(rows[i], rowPath);
    if (row.size() != rows.size())
      fail(rowPath, "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    std::vector<std::int64_t> r;
    r.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(integer(row[j], rowPath + "/" + std::to_string(j)));
    table.push_back(std::move(r));
  }
  return Group::from_cayley_table(table, cap);
}

Group parse_perm(const json& doc, const std::string& path, std::size_t cap) {
  const std::int64_t degree = integer(field(doc, path, "degree"), path + "/degree");
  if (degree <= 0) fail(path + "/degree", "must be positive");
  const json& gens = array(field(doc, path, "generators"), path + "/generators");
  std::vector<std::vector<std::size_t>> perms;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string genPath = path + "/generators/" + std::to_string(g);
    const json& gen = array(gens[g], genPath);
    if (gen.size() != static_cast<std::size_t>(degree))
      fail(genPath, "has " + std::to_string(gen.size()) + " images, expected " + std::to_string(degree));
    std::vector<std::size_t> perm;
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < gen.size(); ++i) {
      const std::int64_t v = integer(gen[i], genPath + "/" + std::to_string(i));
      if (v < 0 || v >= degree) fail(genPath + "/" + std::to_string(i), "point out of range");
      if (seen[v]) fail(genPath + "/" + std::to_string(i), "repeated image, not a permutation");
      seen[v] = true;
      perm.push_back(static_cast<std::size_t>(v));
    }
    perms.push_back(std::move(perm));
  }
  return from_permutation_generators(static_cast<std::size_t>(degree), perms, cap);
}

Group parse_spec(const json& doc, const std::string& path, std::size_t cap);

Group parse_product(const json& doc, const std::string& path, std::size_t cap) {
  const json& factors = array(field(doc, path, "factors"), path + "/factors");
  if (factors.empty()) fail(path + "/factors", "needs at least one factor");
  std::optional<Group> g;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string fPath = path + "/factors/" + std::to_string(i);
    Group f = [&] {
      if (factors[i].is_string()) {
        try {
          return catalog_group(factors[i].get<std::string>());
        } catch (const Error& e) {
          fail(fPath, e.what());
        }
      }
      if (!factors[i].is_object()) fail(fPath, "expected a catalog name or a group spec");
      return parse_spec(factors[i], fPath, cap);
    }();
    g = g ? direct_product(*g, f, cap) : f;
    if (g->order() > cap) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  fPath + ": product order " + std::to_string(g->order()) + " exceeds cap " + std::to_string(cap));
    }
  }
  return *g;
}

Group parse_spec(const json& doc, const std::string& path, std::size_t cap) {
  if (!doc.is_object()) fail(path.empty() ? "/" : path, "expected an object");
  const json& format = field(doc, path.empty() ? "/" : path, "format");
  if (!format.is_string()) fail(path + "/format", "expected a string");
  const std::string f = format.get<std::string>();
  if (f == "cayley") return parse_cayley(doc, path, cap);
  if (f == "perm") return parse_perm(doc, path, cap);
  if (f == "product") return parse_product(doc, path, cap);
  fail(path + "/format", "unknown format '" + f + "'");
}

}  // namespace

GroupFile parse_group_json(const json& doc, std::size_t cap) {
  GroupFile out{"", parse_spec(doc, "", cap)};
  auto it = doc.find("name");
  if (it != doc.end()) {
    if (!it->is_string()) fail("/name", "expected a string");
    out.name = it->get<std::string>();
  }
  return out;
}

GroupFile parse_group_text(const std::string& text, std::size_t cap) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // byte offset -> line and column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
  }
  return parse_group_json(doc, cap);
}

GroupFile parse_group_file(const std::filesystem::path& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    GroupFile f = parse_group_text(ss.str(), cap);
    if (f.name.empty()) f.name = path.stem().string();
    return f;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, path.string() + ": " + std::string(e.what()).substr(12));
  }
}

json group_to_json(const Group& g, const std::string& name) {
  json table = json::array();
  for (Element x = 0; x < g.order(); ++x) {
    json row = json::array();
    for (Element y = 0; y < g.order(); ++y) row.push_back(g.mul(x, y));
    table.push_back(std::move(row));
  }
  return {{"name", name}, {"format", "cayley"}, {"n", g.order()}, {"table", std::move(table)}};
}

}  // namespace centauts
