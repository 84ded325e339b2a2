#pragma once

#include <string>

#include "stallings/core_graph.hpp"

namespace stallings {

/// Serializes a core graph as
///   {"rank": r, "vertices": n, "basepoint": 0, "edges": [[letter, from, to], ...]}
/// with edges sorted by (letter, from). Lossless together with from_json.
std::string to_json(const CoreGraph& g);

/// Parses the schema above. Malformed documents raise ParseError; documents
/// that violate the core-graph invariants raise ValidationError.
CoreGraph from_json(const std::string& text);

/// Graphviz export. Edge labels carry the letter name; the basepoint is
/// drawn with a double circle. Export only.
std::string to_dot(const CoreGraph& g);

}  // namespace stallings
