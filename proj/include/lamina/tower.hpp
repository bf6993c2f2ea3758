#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lamina/bounds.hpp"
#include "lamina/forest_of_trees.hpp"
#include "lamina/gluing.hpp"

namespace lamina {

/// One bookkeeping move in a tower construction. Covering passes request a
/// second-systole bound K; tube attachments always use L = 4K.
struct PlanStep {
  enum class Kind { AttachTube, CarveSubsurface, SecondCoveringPass };
  Kind kind = Kind::SecondCoveringPass;
  int level = 0;

  // AttachTube
  std::string boundary_id;
  double tube_param = 0;  // L = 4K
  std::optional<TubeCertificate> tube_certificate;

  // CarveSubsurface
  int vertex = -1;
  std::string room_spec;

  // SecondCoveringPass
  double k = 0;

  std::vector<std::string> justification;
};

const char* step_kind_name(PlanStep::Kind k);

/// Lift of a forest inclusion into the next covering level; the flag
/// records the bookkeeping identity "projection after lift is the
/// identity".
struct LiftMap {
  int edge = -1;  // forest edge index
  GoodTreeInclusion inclusion;
  bool projects_to_identity = true;
};

/// Certified state after building floor `floor` of the tower.
struct TowerLevel {
  int floor = 0;
  std::vector<int> marked_vertices;   // forest vertices stabilised here
  Bound complement_systole;           // internal systole of the complement
  Bound complement_collar;            // half-collar width at its boundary
  Bound star_systole;                 // complement of the lifted surfaces
  std::vector<int> star_vertices;     // images of the lower floor
  std::vector<GluePart> star_parts;   // decomposition discharging the bound
  std::vector<LiftMap> lift_maps;
  int genus_reserved = 0;
};

struct TowerPlan {
  ForestOfCodingTrees forest;
  std::vector<TowerLevel> levels;  // levels[0] is the base
  std::vector<PlanStep> steps;

  std::string audit_log() const;  // one line per discharged clause
};

/// Replays the covering-tower induction symbolically against the forest:
/// per level, tubes isolate the floor's boundary circles, carving realises
/// new roots and the targets of the good inclusions, a second covering
/// pass certifies systole and collar bounds of value n at level n, and the
/// star complement bound is discharged through glue_systole over the
/// level decomposition. Requires the forest to provide floors 0..levels.
TowerPlan build_tower_plan(const ForestOfCodingTrees& f, int levels);

/// Re-derives every admissibility clause from the plan's own records:
/// certified systole and collar growth, covering passes present at each
/// level, lift maps matching the forest inclusions, star consistency, and
/// the glue_systole discharge replayed from the stored decomposition.
ValidationReport verify_admissible(const TowerPlan& p);

/// Leaf census of the plan's forest with the per-level growth witness
/// min(sigma_n, K_n/2) attached; rejects plans failing verify_admissible.
struct TowerCensus {
  LeafCensus census;
  std::vector<double> growth_witness;  // per level
};
TowerCensus census_of_tower(const TowerPlan& p, int depth);

}  // namespace lamina
