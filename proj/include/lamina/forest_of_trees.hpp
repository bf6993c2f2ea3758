#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamina/coding_tree.hpp"
#include "lamina/end_space.hpp"
#include "lamina/forest.hpp"

namespace lamina {

/// A forest whose vertices carry finite coding trees and whose edges carry
/// good inclusions between them.
struct ForestOfCodingTrees {
  Forest forest;
  std::vector<CodingTree> tree_at;             // per vertex id
  std::vector<GoodTreeInclusion> inclusion_at; // per edge index

  /// Exact limits for rays whose trees are known in closed form; keyed by
  /// the ray's root vertex.
  std::map<int, CodingTree> ray_source;
  std::map<int, std::string> ray_label;
};

ValidationReport validate_forest_of_trees(const ForestOfCodingTrees& f);

struct UniversalForestResult {
  ForestOfCodingTrees forest;
  bool partial = false;  // budget cut the enumeration short
  int built_floors = 0;  // floors actually present
  int requested_floors = 0;
};

/// Floor n lists one canonical representative per isomorphism class of
/// radius-(2n+1) balls of coding trees; an edge is present exactly when a
/// good inclusion exists, with the lexicographically least witness.
/// Enumeration cost explodes with n_max, so floors beyond `budget` are not
/// built and the result is flagged partial instead.
UniversalForestResult universal_forest(int n_max, int budget = 2);

/// Reads the enumeration budget from the environment (LAMINA_ENUM_BUDGET),
/// defaulting to 2.
int enumeration_budget_from_env();

/// One ray per input tree: tree i (0-based) has its root at floor i and its
/// radius-(2(n-i)+1) ball at floor n. `floors` floors are materialised.
ForestOfCodingTrees countable_forest(const std::vector<CodingTree>& trees,
                                     int floors);

/// Lazily extensible variant: trees are pulled from the generator one by
/// one as their roots come within the materialised floors.
ForestOfCodingTrees countable_forest(
    const std::function<CodingTree(int)>& tree_generator, int count,
    int floors);

struct LimitTreeResult {
  CodingTree tree;
  bool exact = false;
  int stabilized_floor = -1;  // floor index where the chain became constant
};

/// Increasing union along a ray: the stored source tree when the ray has
/// one, the stabilised tree when the chain becomes constant, otherwise a
/// depth-limited approximation at the deepest available floor.
LimitTreeResult limit_tree(const ForestOfCodingTrees& f, const Ray& r,
                           int depth);

struct LeafCensusEntry {
  std::string end_id;
  ClassifyingTriple triple;
  bool resolved = true;   // false: an unresolved cluster of ends
  std::vector<std::string> notes;
};

struct LeafCensus {
  std::vector<LeafCensusEntry> marked;
  std::string generic = "disk";
  bool distinct_leaves = true;  // distinct ends give distinct leaves
};

/// One entry per end enumerable to the given floor, carrying the
/// classifying triple of the interior of its limit surface. Ends that the
/// stored floors cannot separate are reported as unresolved clusters.
LeafCensus leaf_census(const ForestOfCodingTrees& f, int depth);

}  // namespace lamina
