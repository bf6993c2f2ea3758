#include "lamina/dot_export.hpp"

#include <algorithm>

namespace lamina {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const CodingTree& t) {
  std::string out = "graph codingtree {\n";
  const CodingTree& view = t.is_rational() ? t.ball(9) : t;
  if (t.is_rational())
    out += "  label=\"rational tree, unfolded to radius 9\";\n";
  for (int v = 0; v < view.vertex_count(); ++v) {
    out += "  v" + std::to_string(v) + " [shape=" +
           (view.kind(v) == VertexKind::Simple ? "circle" : "box") +
           (v == view.root() ? ", style=bold" : "") + ", label=" +
           quote(std::to_string(v)) + "];\n";
  }
  for (int v = 0; v < view.vertex_count(); ++v)
    for (int w : view.neighbors(v))
      if (v < w)
        out += "  v" + std::to_string(v) + " -- v" + std::to_string(w) + ";\n";
  return out + "}\n";
}

std::string to_dot(const ForestOfCodingTrees& f) {
  std::string out = "digraph forest {\n  rankdir=BT;\n";
  for (int fl = 0; fl < f.forest.floor_count(); ++fl) {
    out += "  { rank=same;";
    for (int v : f.forest.floors[fl]) out += " v" + std::to_string(v) + ";";
    out += " }\n";
  }
  for (int fl = 0; fl < f.forest.floor_count(); ++fl)
    for (int v : f.forest.floors[fl]) {
      const CodingTree& t = f.tree_at[v];
      std::string label = std::to_string(v);
      if (t.is_finite()) {
        auto sig = surface_of(t);
        label += ": g" + std::to_string(sig.genus) + "b" +
                 std::to_string(sig.boundary_count);
      }
      out += "  v" + std::to_string(v) + " [shape=box, label=" + quote(label) +
             "];\n";
    }
  for (const auto& [o, t] : f.forest.edges)
    out += "  v" + std::to_string(o) + " -> v" + std::to_string(t) + ";\n";
  return out + "}\n";
}

std::string to_dot(const GluingPresentation& p) {
  std::string out = "graph gluing {\n";
  for (std::size_t i = 0; i < p.pieces.size(); ++i)
    out += "  p" + std::to_string(i) + " [shape=box, label=" +
           quote(p.pieces[i].name +
                 (p.pieces[i].certificate ? " [tube]" : "")) +
           "];\n";
  for (std::size_t e = 0; e < p.gluing.size(); ++e) {
    const auto& g = p.gluing[e];
    bool special =
        std::count(p.distinguished.begin(), p.distinguished.end(),
                   static_cast<int>(e)) > 0;
    out += "  p" + std::to_string(g.plus.piece) + " -- p" +
           std::to_string(g.minus.piece) + " [label=" +
           quote("deg " +
                 std::to_string(
                     p.pieces[g.plus.piece].circles[g.plus.circle].degree)) +
           (special ? ", style=bold" : "") + "];\n";
  }
  return out + "}\n";
}

std::string to_dot(const TowerPlan& p) {
  std::string out = "digraph tower {\n  rankdir=BT;\n";
  for (const auto& lvl : p.levels) {
    std::string x = "x" + std::to_string(lvl.floor);
    out += "  " + x + " [shape=ellipse, label=" +
           quote("X_" + std::to_string(lvl.floor) + ": " +
                 lvl.complement_systole.str() + ", " +
                 lvl.complement_collar.str()) +
           "];\n";
    if (lvl.floor > 0)
      out += "  x" + std::to_string(lvl.floor - 1) + " -> " + x + ";\n";
    for (int v : lvl.marked_vertices) {
      std::string node = "s" + std::to_string(lvl.floor) + "_" +
                         std::to_string(v);
      out += "  " + node + " [shape=box, label=" +
             quote("S_" + std::to_string(v)) + "];\n";
      out += "  " + node + " -> " + x + " [style=dashed];\n";
    }
  }
  return out + "}\n";
}

}  // namespace lamina
