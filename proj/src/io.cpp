#include "queenlab/io.hpp"

#include <fstream>
#include <sstream>

namespace queenlab::io {

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

const Json& require(const Json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) throw DocumentError(path.empty() ? "/" : path, "expected an object");
  const auto it = doc.find(key);
  if (it == doc.end()) throw DocumentError(child(path, key), "missing field");
  return *it;
}

int require_int(const Json& value, const std::string& path) {
  if (!value.is_number_integer()) throw DocumentError(path, "expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw DocumentError(path, "integer out of range");
  }
  return static_cast<int>(v);
}

const Json& require_array(const Json& value, const std::string& path) {
  if (!value.is_array()) throw DocumentError(path, "expected an array");
  return value;
}

std::pair<int, int> require_pair(const Json& value, const std::string& path) {
  require_array(value, path);
  if (value.size() != 2) throw DocumentError(path, "expected a 2-element array");
  return {require_int(value[0], child(path, std::size_t{0})),
          require_int(value[1], child(path, std::size_t{1}))};
}

int require_order(const Json& doc) {
  const int n = require_int(require(doc, "n", ""), "/n");
  if (n < 1) throw DocumentError("/n", "must be positive");
  return n;
}

void require_in_range(int v, int n, const std::string& path) {
  if (v < 1 || v > n) {
    throw DocumentError(path, "value " + std::to_string(v) + " outside [1," + std::to_string(n) + "]");
  }
}

bool is_flat_array(const Json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v) {
    if (e.is_object()) return false;
    if (e.is_array()) {
      for (const auto& x : e) {
        if (x.is_structured()) return false;
      }
    }
  }
  return true;
}

}  // namespace

LabeledDigraph digraph_from_json(const Json& doc) {
  const int n = require_order(doc);
  const Json& arcs = require_array(require(doc, "arcs", ""), "/arcs");
  std::vector<Arc> parsed;
  parsed.reserve(arcs.size());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const std::string path = child("/arcs", k);
    const auto [u, v] = require_pair(arcs[k], path);
    require_in_range(u, n, child(path, std::size_t{0}));
    require_in_range(v, n, child(path, std::size_t{1}));
    parsed.push_back({u, v});
  }
  try {
    return from_arcs(n, parsed);
  } catch (const std::invalid_argument& e) {
    throw DocumentError("/arcs", e.what());
  }
}

Json digraph_to_json(const LabeledDigraph& d) {
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  return Json{{"n", d.order()}, {"arcs", std::move(arcs)}};
}

PlacementDocument placement_from_json(const Json& doc) {
  const int n = require_order(doc);
  const Json& queens = require_array(require(doc, "queens", ""), "/queens");
  std::vector<Square> parsed;
  parsed.reserve(queens.size());
  for (std::size_t k = 0; k < queens.size(); ++k) {
    const std::string path = child("/queens", k);
    const auto [r, c] = require_pair(queens[k], path);
    require_in_range(r, n, child(path, std::size_t{0}));
    require_in_range(c, n, child(path, std::size_t{1}));
    parsed.push_back({r, c});
  }
  PlacementDocument out;
  try {
    out.placement = Placement(n, std::move(parsed));
  } catch (const std::invalid_argument& e) {
    throw DocumentError("/queens", e.what());
  }
  if (const auto it = doc.find("modular"); it != doc.end()) {
    if (!it->is_boolean()) throw DocumentError("/modular", "expected a boolean");
    out.modular = it->get<bool>();
  }
  return out;
}

Json placement_to_json(const PlacementDocument& doc) {
  Json queens = Json::array();
  for (const Square& q : doc.placement.queens()) queens.push_back({q.row, q.col});
  Json out{{"n", doc.placement.size()}, {"queens", std::move(queens)}};
  if (doc.modular) out["modular"] = *doc.modular;
  return out;
}

std::map<Arc, std::size_t> assignment_from_json(const Json& doc) {
  const Json& entries = require_array(require(doc, "arcs", ""), "/arcs");
  std::map<Arc, std::size_t> assign;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const std::string path = child("/arcs", k);
    const auto [u, v] = require_pair(require(entries[k], "arc", path), child(path, "arc"));
    const int index = require_int(require(entries[k], "index", path), child(path, "index"));
    if (index < 0) throw DocumentError(child(path, "index"), "must be non-negative");
    if (!assign.emplace(Arc{u, v}, static_cast<std::size_t>(index)).second) {
      throw DocumentError(path, "arc " + to_string(Arc{u, v}) + " assigned twice");
    }
  }
  return assign;
}

Json assignment_to_json(const std::map<Arc, std::size_t>& assign) {
  Json entries = Json::array();
  for (const auto& [arc, index] : assign) {
    entries.push_back(Json{{"arc", {arc.tail, arc.head}}, {"index", index}});
  }
  return Json{{"arcs", std::move(entries)}};
}

AnyDocument any_from_json(const Json& doc) {
  if (doc.is_object() && doc.contains("arcs")) return digraph_from_json(doc);
  if (doc.is_object() && doc.contains("queens")) return placement_from_json(doc);
  throw DocumentError("/", "expected a digraph (\"arcs\") or placement (\"queens\") document");
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < offset; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(column),
                        "syntax error");
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string(), "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse(buffer.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + ": " + e.where(), "syntax error");
  }
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw DocumentError(path.string(), "cannot open file for writing");
  out << dump(doc);
}

std::string dump(const Json& doc) {
  if (!doc.is_object()) return doc.dump() + "\n";
  std::string out = "{\n";
  std::size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && !is_flat_array(value)) {
      out += "[\n";
      for (std::size_t e = 0; e < value.size(); ++e) {
        out += "    " + value[e].dump() + (e + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += (++k < doc.size() ? ",\n" : "\n");
  }
  return out + "}\n";
}

std::string render_ascii(const Placement& p) {
  const int n = p.size();
  std::vector<std::string> rows(n, std::string(n, '.'));
  for (const Square& q : p.queens()) rows[q.row - 1][q.col - 1] = 'Q';
  std::string out;
  for (const auto& r : rows) out += r + "\n";
  return out;
}

}  // namespace queenlab::io
