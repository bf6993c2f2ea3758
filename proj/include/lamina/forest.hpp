#pragma once

#include <utility>
#include <vector>

#include "lamina/validation.hpp"

namespace lamina {

/// Graph stratified into finite floors, every edge going up exactly one
/// floor, every vertex terminal of at most one edge and origin of at least
/// one. A stored object holds a finite prefix of the floors; the top floor
/// is the enumeration frontier and is exempt from the out-edge axiom.
struct Forest {
  std::vector<std::vector<int>> floors;   // vertex ids per floor
  std::vector<std::pair<int, int>> edges; // (origin, terminal)

  int vertex_count() const;
  int floor_count() const { return static_cast<int>(floors.size()); }
  int floor_of(int v) const;
  std::vector<int> out_edges(int v) const;  // edge indices
  int in_edge(int v) const;                 // edge index or -1
  std::vector<int> roots() const;           // vertices terminal of no edge
  bool operator==(const Forest&) const = default;
};

ValidationReport validate_forest(const Forest& f);

/// Path from a root upward, one edge per floor.
struct Ray {
  int root = -1;
  std::vector<int> edges;  // forest edge indices, consecutive floors
};

/// All maximal upward paths of the stored prefix, truncated at max_floor.
/// Paths never merge (each vertex has at most one incoming edge), so two
/// distinct paths stay distinct on every later floor.
std::vector<Ray> enumerate_rays(const Forest& f, int max_floor);

}  // namespace lamina
