#ifndef MODQ_DOT_HPP
#define MODQ_DOT_HPP

#include <cstdint>
#include <cstdio>
#include <string>

#include "modq/solver.hpp"

namespace modq {

/// FNV-1a over the key words, big-endian byte order.
inline std::uint64_t stable_hash(const BitKey& key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : key.words) {
    for (int shift = 56; shift >= 0; shift -= 8) {
      h ^= (w >> shift) & 0xFFU;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

inline std::string key_digest(const BitKey& key) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(stable_hash(key)));
  return buf;
}

/// Graphviz digraph. Locked positions are filled black, the complete position is
/// a filled double circle, labels carry the queen count and key digest.
inline std::string export_dot(const GameGraph& graph) {
  std::string out = "digraph game_graph {\n";
  out += "  // n=" + std::to_string(graph.n) + " variant=" + to_string(graph.variant.kind) + " k=" +
         std::to_string(graph.variant.modulus) + "\n";
  out += "  node [shape=circle, fontsize=10];\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& node = graph.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" + std::to_string(node.queens) + "\\n" + key_digest(node.key) + "\"";
    if (node.cls == BoardClass::Locked) {
      out += ", style=filled, fillcolor=black, fontcolor=white";
    } else if (node.cls == BoardClass::Complete) {
      out += ", shape=doublecircle, style=filled, fillcolor=gray";
    }
    out += "];\n";
  }
  for (const GraphEdge& e : graph.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" + std::to_string(e.label.at.row) +
           "," + std::to_string(e.label.at.col) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace modq

#endif
