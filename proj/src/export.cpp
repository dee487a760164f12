#include "tropcov/export.hpp"

#include <sstream>

namespace tropcov {

using nlohmann::ordered_json;

ordered_json catalog_json(const CoverCatalog& catalog) {
  ordered_json covers = ordered_json::array();
  for (const TropicalCover& c : catalog.covers) {
    ordered_json vertices = ordered_json::array();
    for (const VertexTerm& t : c.vertices) {
      vertices.push_back(ordered_json{{"g1", t.g1},
                                      {"g2", t.g2},
                                      {"germs", t.germs()},
                                      {"coeff", t.coeff.str()}});
    }
    ordered_json edges = ordered_json::array();
    for (const auto& e : c.internal_edges)
      edges.push_back(ordered_json{{"from", e[0]}, {"to", e[1]}, {"weight", e[2]}});
    ordered_json left = ordered_json::array();
    for (const auto& p : c.left_ends)
      left.push_back(ordered_json{{"vertex", p.first}, {"weight", p.second}});
    ordered_json right = ordered_json::array();
    for (const auto& p : c.right_ends)
      right.push_back(ordered_json{{"vertex", p.first}, {"weight", p.second}});
    covers.push_back(ordered_json{{"vertices", vertices},
                                  {"edges", edges},
                                  {"left_ends", left},
                                  {"right_ends", right},
                                  {"through_strands", c.through_strands},
                                  {"weight", c.weight.str()},
                                  {"matchings", c.matchings},
                                  {"aut", c.aut.str()},
                                  {"h1", c.h1},
                                  {"genus", c.genus}});
  }
  return ordered_json{{"covers", covers},
                      {"count", catalog.covers.size()},
                      {"total", catalog.total.str()}};
}

std::string catalog_dot(const CoverCatalog& catalog) {
  std::ostringstream out;
  for (size_t ci = 0; ci < catalog.covers.size(); ++ci) {
    const TropicalCover& c = catalog.covers[ci];
    out << "graph cover" << ci << " {\n";
    out << "  rankdir=LR;\n";
    out << "  label=\"weight=" << c.weight.str() << "\";\n";
    for (size_t v = 0; v < c.vertices.size(); ++v) {
      out << "  v" << v << " [label=\"g=(" << c.vertices[v].g1 << ',' << c.vertices[v].g2
          << ")\"];\n";
    }
    int end_id = 0;
    for (const auto& p : c.left_ends) {
      out << "  l" << end_id << " [shape=point];\n";
      out << "  l" << end_id << " -- v" << p.first << " [label=\"w=" << p.second << "\"];\n";
      ++end_id;
    }
    for (const auto& p : c.right_ends) {
      out << "  r" << end_id << " [shape=point];\n";
      out << "  v" << p.first << " -- r" << end_id << " [label=\"w=" << p.second << "\"];\n";
      ++end_id;
    }
    for (int w : c.through_strands) {
      out << "  l" << end_id << " [shape=point];\n  r" << end_id << " [shape=point];\n";
      out << "  l" << end_id << " -- r" << end_id << " [label=\"w=" << w << "\"];\n";
      ++end_id;
    }
    for (const auto& e : c.internal_edges)
      out << "  v" << e[0] << " -- v" << e[1] << " [label=\"w=" << e[2] << "\"];\n";
    out << "}\n";
  }
  return out.str();
}

ordered_json upoly_json(const UPoly& poly) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, v] : poly) out[std::to_string(k)] = v.str();
  return out;
}

}  // namespace tropcov
