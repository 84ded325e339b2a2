#include "stallings/graph_io.hpp"

#include <json.hpp>

#include "stallings/errors.hpp"

namespace stallings {

std::string to_json(const CoreGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (int x = 1; x <= g.alphabet().rank(); ++x) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      std::uint32_t t = g.out(v, x);
      if (t != kNoVertex) {
        edges.push_back({x, v, t});
      }
    }
  }
  nlohmann::json doc;
  doc["rank"] = g.alphabet().rank();
  doc["vertices"] = g.vertex_count();
  doc["basepoint"] = 0;
  doc["edges"] = std::move(edges);
  return doc.dump();
}

CoreGraph from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("vertices") ||
      !doc.contains("edges")) {
    throw ParseError("graph document must carry rank, vertices and edges");
  }
  try {
    const int rank = doc.at("rank").get<int>();
    const std::uint32_t vertices = doc.at("vertices").get<std::uint32_t>();
    if (doc.contains("basepoint") && doc.at("basepoint").get<int>() != 0) {
      throw ValidationError("basepoint must be vertex 0");
    }
    if (vertices == 0) {
      throw ValidationError("graph needs at least the basepoint vertex");
    }
    GraphBuilder b(Alphabet(rank), vertices);
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw ParseError("each edge must be a [letter, from, to] triple");
      }
      b.add_edge(e.at(0).get<int>(), e.at(1).get<std::uint32_t>(),
                 e.at(2).get<std::uint32_t>());
    }
    return adopt_folded(b);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid graph document: ") + e.what());
  }
}

std::string to_dot(const CoreGraph& g) {
  std::string out = "digraph core {\n  rankdir=LR;\n  node [shape=circle];\n";
  out += "  0 [shape=doublecircle];\n";
  for (std::uint32_t v = 1; v < g.vertex_count(); ++v) {
    out += "  " + std::to_string(v) + ";\n";
  }
  for (int x = 1; x <= g.alphabet().rank(); ++x) {
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      std::uint32_t t = g.out(v, x);
      if (t != kNoVertex) {
        out += "  " + std::to_string(v) + " -> " + std::to_string(t) +
               " [label=\"" + static_cast<char>('a' + x - 1) + "\"];\n";
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace stallings
