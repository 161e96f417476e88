#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"

#include "queenlab/digraph.hpp"
#include "queenlab/labeling.hpp"

namespace queenlab::io {

using Json = nlohmann::ordered_json;

/// A malformed or schema-violating document. where() is a JSON pointer for
/// schema errors, or "line L, column C" for syntax errors.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& message)
      : std::runtime_error(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct PlacementDocument {
  Placement placement;
  std::optional<bool> modular;

  friend bool operator==(const PlacementDocument&, const PlacementDocument&) = default;
};

/// {"n": N, "arcs": [[u, v], ...]}
LabeledDigraph digraph_from_json(const Json& doc);
Json digraph_to_json(const LabeledDigraph& d);

/// {"n": N, "queens": [[row, col], ...], "modular": bool?}
PlacementDocument placement_from_json(const Json& doc);
Json placement_to_json(const PlacementDocument& doc);

/// {"arcs": [{"arc": [u, v], "index": i}, ...]}; index points into the
/// family list.
std::map<Arc, std::size_t> assignment_from_json(const Json& doc);
Json assignment_to_json(const std::map<Arc, std::size_t>& assign);

/// Either kind of document, chosen by the presence of "arcs" or "queens".
using AnyDocument = std::variant<LabeledDigraph, PlacementDocument>;
AnyDocument any_from_json(const Json& doc);

/// Parses text, mapping syntax errors to DocumentError with a line number.
Json parse(const std::string& text);
Json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const Json& doc);

/// Canonical text form: one document, two-space indent, arcs on one line.
std::string dump(const Json& doc);

/// n lines of n characters, row 1 first, 'Q' for a queen and '.' elsewhere.
std::string render_ascii(const Placement& p);

}  // namespace queenlab::io
