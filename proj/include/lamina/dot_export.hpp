#pragma once

#include <string>

#include "lamina/coding_tree.hpp"
#include "lamina/forest_of_trees.hpp"
#include "lamina/gluing.hpp"
#include "lamina/tower.hpp"

namespace lamina {

/// Graphviz rendering; simple vertices are circles, boundary vertices boxes.
std::string to_dot(const CodingTree& t);

/// Forest with one rank per floor; vertices labelled by their tree
/// signature.
std::string to_dot(const ForestOfCodingTrees& f);

/// Piece-gluing graph; distinguished pairs drawn bold.
std::string to_dot(const GluingPresentation& p);

/// Level decomposition of a plan: per level, the complement node and the
/// marked surfaces with their certified bounds.
std::string to_dot(const TowerPlan& p);

}  // namespace lamina
