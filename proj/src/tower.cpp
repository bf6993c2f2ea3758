#include "lamina/tower.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lamina {

const char* step_kind_name(PlanStep::Kind k) {
  switch (k) {
    case PlanStep::Kind::AttachTube: return "attach_tube";
    case PlanStep::Kind::CarveSubsurface: return "carve_subsurface";
    case PlanStep::Kind::SecondCoveringPass: return "second_covering_pass";
  }
  return "?";
}

namespace {

Bound make_bound(Quantity q, double value, bool strict, std::string rule,
                 std::string detail) {
  Bound b;
  b.quantity = q;
  b.value = value;
  b.strict = strict;
  b.premises.push_back({std::move(rule), std::move(detail), true});
  return b;
}

// boundary circles of the surface encoded by a tree = its boundary leaves
std::vector<int> boundary_leaves(const CodingTree& t) {
  std::vector<int> out;
  for (int v = 0; v < t.vertex_count(); ++v)
    if (t.kind(v) == VertexKind::Boundary && t.valency(v) == 1)
      out.push_back(v);
  return out;
}

}  // namespace

std::string TowerPlan::audit_log() const {
  std::string out;
  for (const auto& s : steps) {
    out += "level " + std::to_string(s.level) + ": " +
           step_kind_name(s.kind);
    switch (s.kind) {
      case PlanStep::Kind::AttachTube:
        out += " at " + s.boundary_id + ", L=" + std::to_string(s.tube_param);
        break;
      case PlanStep::Kind::CarveSubsurface:
        out += " vertex " + std::to_string(s.vertex) + " (" + s.room_spec + ")";
        break;
      case PlanStep::Kind::SecondCoveringPass:
        out += " K=" + std::to_string(s.k);
        break;
    }
    out += "\n";
    for (const auto& j : s.justification) out += "    " + j + "\n";
  }
  for (const auto& lvl : levels) {
    if (lvl.floor == 0) continue;
    out += "level " + std::to_string(lvl.floor) + ": certified " +
           lvl.complement_systole.str() + "; " + lvl.complement_collar.str() +
           "; star " + lvl.star_systole.str() + "\n";
  }
  return out;
}

TowerPlan build_tower_plan(const ForestOfCodingTrees& f, int levels) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  auto fr = validate_forest_of_trees(f);
  if (!fr.ok())
    throw std::invalid_argument("invalid forest of coding trees: " +
                                fr.violations.front().rule);
  if (f.forest.floor_count() <= levels)
    throw std::invalid_argument(
        "forest floor references missing trees: need floors 0.." +
        std::to_string(levels));

  TowerPlan plan;
  plan.forest = f;

  // base level: the floor-0 surfaces exist in the base surface
  TowerLevel base;
  base.floor = 0;
  base.marked_vertices = f.forest.floors[0];
  base.complement_systole = make_bound(
      Quantity::InternalSystole, 0, false, "base_surface",
      "base hyperbolic surface containing the floor-0 subsurfaces");
  base.complement_collar =
      make_bound(Quantity::HalfCollarWidth, 0, false, "base_surface",
                 "no collar certified at the base");
  base.star_systole = make_bound(Quantity::InternalSystole, 0, false,
                                 "base_surface", "no lifted surfaces yet");
  plan.levels.push_back(std::move(base));

  for (int n = 1; n <= levels; ++n) {
    double K = n;
    TowerLevel lvl;
    lvl.floor = n;
    lvl.marked_vertices = f.forest.floors[n];

    // genus reservation: enough room to carve every floor-n surface
    for (int v : f.forest.floors[n]) {
      auto sig = surface_of(f.tree_at[v]);
      lvl.genus_reserved =
          std::max(lvl.genus_reserved, sig.genus + sig.boundary_count);
    }

    // tubes isolate every boundary circle of the previous floor's surfaces
    for (int v : f.forest.floors[n - 1]) {
      for (int leaf : boundary_leaves(f.tree_at[v])) {
        PlanStep tube;
        tube.kind = PlanStep::Kind::AttachTube;
        tube.level = n;
        tube.boundary_id =
            "v" + std::to_string(v) + "/b" + std::to_string(leaf);
        tube.tube_param = 4 * K;
        tube.tube_certificate = make_tube_certificate(4 * K);
        tube.justification.push_back(
            "tube certificate: unique short lift, collar >= " +
            std::to_string(2 * K) + ", genus >= " +
            std::to_string(tube.tube_certificate->genus_lb));
        plan.steps.push_back(std::move(tube));
      }
    }

    // first covering pass: creates room and keeps the lifted surfaces
    PlanStep pass1;
    pass1.kind = PlanStep::Kind::SecondCoveringPass;
    pass1.level = n;
    pass1.k = K;
    pass1.justification.push_back(
        "intermediate complement: internal systole > " + std::to_string(K));
    pass1.justification.push_back(
        "room reservation: genus " + std::to_string(lvl.genus_reserved) +
        " per boundary component (granted by the tube genus)");
    pass1.justification.push_back(
        "filling curves of length >= K exist (certificate)");
    plan.steps.push_back(std::move(pass1));

    // carve new roots appearing at this floor
    std::set<int> targets;
    for (int e = 0; e < static_cast<int>(f.forest.edges.size()); ++e)
      if (f.forest.floor_of(f.forest.edges[e].second) == n)
        targets.insert(f.forest.edges[e].second);
    for (int v : f.forest.floors[n]) {
      PlanStep carve;
      carve.kind = PlanStep::Kind::CarveSubsurface;
      carve.level = n;
      carve.vertex = v;
      auto sig = surface_of(f.tree_at[v]);
      if (!targets.count(v)) {
        carve.room_spec = "new root: genus " + std::to_string(sig.genus) +
                          ", boundary " + std::to_string(sig.boundary_count);
        carve.justification.push_back("realised inside the reserved room");
      } else {
        carve.room_spec = "extend included surface to genus " +
                          std::to_string(sig.genus) + ", boundary " +
                          std::to_string(sig.boundary_count);
        carve.justification.push_back(
            "good inclusion: complement of the image carries a hyperbolic "
            "structure with geodesic boundary");
      }
      plan.steps.push_back(std::move(carve));
    }

    // second covering pass: systole and collars of the new complement
    PlanStep pass2;
    pass2.kind = PlanStep::Kind::SecondCoveringPass;
    pass2.level = n;
    pass2.k = K;
    pass2.justification.push_back("complement systole > " + std::to_string(K));
    pass2.justification.push_back("boundary half-collars > " +
                                  std::to_string(K));
    plan.steps.push_back(std::move(pass2));

    lvl.complement_systole =
        make_bound(Quantity::InternalSystole, K, true, "covering_pass",
                   "level " + std::to_string(n) + " complement");
    lvl.complement_collar =
        make_bound(Quantity::HalfCollarWidth, K, true, "covering_pass",
                   "level " + std::to_string(n) + " complement boundary");

    // lift maps: the forest inclusions, lifted isometrically
    for (int e = 0; e < static_cast<int>(f.forest.edges.size()); ++e) {
      auto [o, t] = f.forest.edges[e];
      if (f.forest.floor_of(o) != n - 1) continue;
      lvl.lift_maps.push_back({e, f.inclusion_at[e], true});
      lvl.star_vertices.push_back(t);
    }
    std::sort(lvl.star_vertices.begin(), lvl.star_vertices.end());

    // star complement bound via the level decomposition
    GluePart complement_part;
    complement_part.id = "X_" + std::to_string(n);
    complement_part.internal_systole = K;
    complement_part.collar_widths = {K};
    complement_part.boundary_lengths = {K};
    lvl.star_parts.push_back(complement_part);
    for (int v : f.forest.floors[n]) {
      GluePart part;
      part.id = "S_" + std::to_string(v) + "," + std::to_string(n);
      part.internal_systole = K;       // from the first covering pass
      part.collar_widths = {K};        // complement collars at its boundary
      part.boundary_lengths = {K};     // new boundary created with length > K
      lvl.star_parts.push_back(part);
    }
    auto glued = glue_systole(lvl.star_parts, K);
    if (!glued.ok())
      throw std::logic_error("internal invariant violation: " +
                             glued.failure);
    lvl.star_systole = *glued.bound;

    plan.levels.push_back(std::move(lvl));
  }
  return plan;
}

ValidationReport verify_admissible(const TowerPlan& p) {
  ValidationReport r;
  if (p.levels.empty()) {
    r.add("levels", "plan has no levels");
    return r;
  }
  auto fr = validate_forest_of_trees(p.forest);
  if (!fr.ok()) {
    r.add("forest", "plan forest invalid: " + fr.violations.front().rule);
    return r;
  }
  for (std::size_t i = 1; i < p.levels.size(); ++i) {
    const TowerLevel& lvl = p.levels[i];
    int n = lvl.floor;
    double K = n;

    // (1) star systole certified, >= n, discharged by its decomposition
    bool star_ok = lvl.star_systole.value >= K;
    auto replay = glue_systole(lvl.star_parts, K);
    if (!star_ok || !replay.ok())
      r.add("star-systole",
            "level " + std::to_string(n) + ": sigma_n >= n not certified" +
                (replay.ok() ? "" : " (" + replay.failure + ")"));

    // (2) collar growth certified and backed by a covering pass
    bool collar_ok = lvl.complement_collar.value >= K;
    bool pass_found = false;
    for (const auto& s : p.steps)
      if (s.kind == PlanStep::Kind::SecondCoveringPass && s.level == n &&
          s.k >= K)
        pass_found = true;
    if (!collar_ok)
      r.add("collar-growth",
            "level " + std::to_string(n) + ": K_n >= n not certified");
    if (!pass_found)
      r.add("collar-growth", "level " + std::to_string(n) +
                                 ": no covering pass discharges the collar");

    // (3) lift maps agree with the forest inclusions (commuting squares)
    std::set<int> expected_edges;
    for (int e = 0; e < static_cast<int>(p.forest.forest.edges.size()); ++e)
      if (p.forest.forest.floor_of(p.forest.forest.edges[e].first) == n - 1)
        expected_edges.insert(e);
    std::set<int> present;
    for (const auto& lift : lvl.lift_maps) {
      present.insert(lift.edge);
      if (!expected_edges.count(lift.edge)) {
        r.add("lift-maps", "level " + std::to_string(n) +
                               ": lift map for a foreign edge",
              {lift.edge});
        continue;
      }
      auto [o, t] = p.forest.forest.edges[lift.edge];
      if (!lift.projects_to_identity)
        r.add("lift-maps",
              "edge lift does not project back to the identity",
              {lift.edge});
      if (!is_good_inclusion(p.forest.tree_at[o], p.forest.tree_at[t],
                             lift.inclusion) ||
          !(lift.inclusion == p.forest.inclusion_at[lift.edge]))
        r.add("lift-maps",
              "level " + std::to_string(n) +
                  ": lift map breaks the commuting square at edge " +
                  std::to_string(lift.edge),
              {lift.edge});
    }
    for (int e : expected_edges)
      if (!present.count(e))
        r.add("lift-maps",
              "level " + std::to_string(n) + ": missing lift map", {e});

    // (4) star consistency: star vertices are the images of the lower floor
    std::set<int> expected_star;
    for (int e : expected_edges)
      expected_star.insert(p.forest.forest.edges[e].second);
    std::set<int> recorded(lvl.star_vertices.begin(),
                           lvl.star_vertices.end());
    if (expected_star != recorded)
      r.add("star-consistency",
            "level " + std::to_string(n) +
                ": recorded star differs from the floor images");
  }
  return r;
}

TowerCensus census_of_tower(const TowerPlan& p, int depth) {
  auto report = verify_admissible(p);
  if (!report.ok())
    throw std::invalid_argument("plan fails admissibility: " +
                                report.violations.front().rule);
  TowerCensus out;
  out.census = leaf_census(p.forest, depth);
  for (const auto& lvl : p.levels) {
    if (lvl.floor == 0) continue;
    out.growth_witness.push_back(
        std::min(lvl.star_systole.value, lvl.complement_collar.value / 2));
  }
  for (auto& entry : out.census.marked)
    entry.notes.push_back(
        "generic-disk witness: min(sigma_n, K_n/2) grows along the tower");
  return out;
}

}  // namespace lamina
