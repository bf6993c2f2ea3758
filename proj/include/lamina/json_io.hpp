#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lamina/bounds.hpp"
#include "lamina/coding_tree.hpp"
#include "lamina/cover_cases.hpp"
#include "lamina/end_space.hpp"
#include "lamina/forest_of_trees.hpp"
#include "lamina/gluing.hpp"
#include "lamina/perm_cover.hpp"
#include "lamina/tower.hpp"

namespace lamina {

/// Parse failure with the schema path of the first violation.
struct SchemaError : std::runtime_error {
  std::string path;
  SchemaError(std::string p, const std::string& msg)
      : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
};

using Json = nlohmann::json;

// Every emitter stamps its "format" tag; every parser checks it and reports
// the schema path of the first violation.

Json to_json(const CodingTree& t);                       // codingtree/1
CodingTree coding_tree_from_json(const Json& j);

Json to_json(const ClassifyingTriple& t);
ClassifyingTriple triple_from_json(const Json& j);

Json to_json(const ForestOfCodingTrees& f);              // forest/1
ForestOfCodingTrees forest_from_json(const Json& j);

Json to_json(const PermCover& c);                        // cover/1
PermCover cover_from_json(const Json& j);

Json to_json(const GluingPresentation& p);               // gluing/1
GluingPresentation gluing_from_json(const Json& j);

Json to_json(const Bound& b);                            // cert/1
Bound bound_from_json(const Json& j);

Json to_json(const TowerPlan& p);                        // tower/1
TowerPlan tower_from_json(const Json& j);

Json to_json(const LeafCensus& c);                       // census/1
LeafCensus census_from_json(const Json& j);

/// Canonical bytes: two-space indentation, keys in sorted order, trailing
/// newline. Fixed inputs give fixed output bytes.
std::string dump_canonical(const Json& j);

}  // namespace lamina
