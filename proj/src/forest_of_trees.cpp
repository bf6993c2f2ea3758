#include "lamina/forest_of_trees.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace lamina {

ValidationReport validate_forest_of_trees(const ForestOfCodingTrees& f) {
  ValidationReport r = validate_forest(f.forest);
  int n = f.forest.vertex_count();
  if (static_cast<int>(f.tree_at.size()) != n) {
    r.add("trees", "one coding tree required per forest vertex");
    return r;
  }
  if (f.inclusion_at.size() != f.forest.edges.size()) {
    r.add("inclusions", "one good inclusion required per forest edge");
    return r;
  }
  for (int v = 0; v < n; ++v) {
    if (!f.tree_at[v].is_finite()) {
      r.add("tree-finite", "forest vertices carry explicit finite trees", {v});
      continue;
    }
    auto tr = validate_coding_tree(f.tree_at[v]);
    if (!tr.ok())
      r.add("tree-valid", "invalid coding tree at vertex: " +
                              tr.violations.front().rule,
            {v});
  }
  for (int e = 0; e < static_cast<int>(f.forest.edges.size()); ++e) {
    auto [o, t] = f.forest.edges[e];
    if (!is_good_inclusion(f.tree_at[o], f.tree_at[t], f.inclusion_at[e]))
      r.add("inclusion-valid", "edge map is not a good inclusion", {e});
  }
  return r;
}

int enumeration_budget_from_env() {
  if (const char* s = std::getenv("LAMINA_ENUM_BUDGET")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 2;
}

UniversalForestResult universal_forest(int n_max, int budget) {
  if (n_max < 0) throw std::invalid_argument("negative floor count");
  UniversalForestResult out;
  out.requested_floors = n_max + 1;
  int top = std::min(n_max, budget);
  out.partial = top < n_max;
  out.built_floors = top + 1;

  ForestOfCodingTrees& f = out.forest;
  std::vector<std::vector<CodingTree>> reps;  // per floor, canonical order
  for (int n = 0; n <= top; ++n)
    reps.push_back(enumerate_coding_trees(2 * n + 1));

  int next_id = 0;
  std::vector<std::vector<int>> ids;  // floor -> vertex ids
  for (int n = 0; n <= top; ++n) {
    std::vector<int> floor;
    for (auto& t : reps[n]) {
      floor.push_back(next_id++);
      f.tree_at.push_back(t);
    }
    ids.push_back(floor);
    f.forest.floors.push_back(floor);
  }
  for (int n = 0; n + 1 <= top; ++n) {
    for (std::size_t i = 0; i < reps[n].size(); ++i) {
      for (std::size_t j = 0; j < reps[n + 1].size(); ++j) {
        auto res = find_good_inclusion(reps[n][i], reps[n + 1][j]);
        if (res.status == SearchStatus::Found) {
          f.forest.edges.emplace_back(ids[n][i], ids[n + 1][j]);
          f.inclusion_at.push_back(*res.witness);
        }
      }
    }
  }
  return out;
}

ForestOfCodingTrees countable_forest(
    const std::function<CodingTree(int)>& tree_generator, int count,
    int floors) {
  if (count < 1) throw std::invalid_argument("empty tree list");
  std::vector<CodingTree> trees;
  // only trees whose roots fall inside the materialised floors are pulled
  for (int i = 0; i < std::min(count, floors); ++i)
    trees.push_back(tree_generator(i));
  return countable_forest(trees, floors);
}

ForestOfCodingTrees countable_forest(const std::vector<CodingTree>& trees,
                                     int floors) {
  if (trees.empty()) throw std::invalid_argument("empty tree list");
  for (const auto& t : trees) {
    auto r = validate_coding_tree(t);
    if (!r.ok())
      throw std::invalid_argument("invalid coding tree: " +
                                  r.violations.front().rule);
  }
  int k = static_cast<int>(trees.size());
  if (floors < k)
    throw std::invalid_argument(
        "need at least as many floors as trees (every tree must root)");

  ForestOfCodingTrees f;
  int next_id = 0;
  // vertex of tree i at floor n (n >= i) is its ball of radius 2(n-i)+1
  std::vector<std::vector<int>> id_at(k);
  for (int n = 0; n < floors; ++n) {
    std::vector<int> floor;
    for (int i = 0; i <= n && i < k; ++i) {
      int v = next_id++;
      floor.push_back(v);
      id_at[i].push_back(v);
      f.tree_at.push_back(trees[i].ball(2 * (n - i) + 1));
    }
    f.forest.floors.push_back(floor);
  }
  for (int i = 0; i < k; ++i) {
    f.ray_source.emplace(id_at[i][0], trees[i]);
    f.ray_label.emplace(id_at[i][0], "end/" + std::to_string(i));
    for (std::size_t s = 0; s + 1 < id_at[i].size(); ++s) {
      int o = id_at[i][s], t = id_at[i][s + 1];
      auto res = find_good_inclusion(f.tree_at[o], f.tree_at[t]);
      if (res.status != SearchStatus::Found)
        throw std::logic_error("ball chain lost its inclusion");
      f.forest.edges.emplace_back(o, t);
      f.inclusion_at.push_back(*res.witness);
    }
  }
  return f;
}

LimitTreeResult limit_tree(const ForestOfCodingTrees& f, const Ray& r,
                           int depth) {
  if (r.root < 0 || r.root >= f.forest.vertex_count())
    throw std::invalid_argument("ray root outside forest");
  LimitTreeResult out;

  // follow the ray, checking that consecutive edges compose
  int v = r.root;
  int steps = 0;
  for (int e : r.edges) {
    if (e < 0 || e >= static_cast<int>(f.forest.edges.size()) ||
        f.forest.edges[e].first != v)
      throw std::invalid_argument("ray edges do not compose");
    if (steps >= depth) break;
    v = f.forest.edges[e].second;
    ++steps;
  }

  auto src = f.ray_source.find(r.root);
  if (src != f.ray_source.end()) {
    out.tree = src->second;
    out.exact = true;
    return out;
  }

  // detect a stabilised chain: the top inclusion followed is bijective
  const CodingTree& top = f.tree_at[v];
  if (!r.edges.empty() && steps > 0) {
    int last_edge = r.edges[std::min<std::size_t>(steps, r.edges.size()) - 1];
    const auto& inc = f.inclusion_at[last_edge];
    int o = f.forest.edges[last_edge].first;
    if (f.tree_at[o].vertex_count() == top.vertex_count() &&
        static_cast<int>(inc.vertex_map.size()) == top.vertex_count()) {
      out.tree = top;
      out.exact = true;
      int fl = f.forest.floor_of(v);
      // walk back while the chain stays constant
      out.stabilized_floor = fl;
      for (int i = static_cast<int>(std::min<std::size_t>(steps, r.edges.size())) - 1;
           i >= 0; --i) {
        int e = r.edges[i];
        if (f.tree_at[f.forest.edges[e].first].vertex_count() ==
            top.vertex_count())
          out.stabilized_floor = f.forest.floor_of(f.forest.edges[e].first);
        else
          break;
      }
      return out;
    }
  }

  out.tree = CodingTree::depth_limited(top, top.depth());
  out.exact = false;
  out.stabilized_floor = f.forest.floor_of(v);
  return out;
}

LeafCensus leaf_census(const ForestOfCodingTrees& f, int depth) {
  LeafCensus census;
  auto rays = enumerate_rays(f.forest, depth);
  std::map<std::string, int> seen_ids;
  for (const auto& ray : rays) {
    LeafCensusEntry entry;
    auto label = f.ray_label.find(ray.root);
    if (label != f.ray_label.end()) {
      entry.end_id = label->second;
    } else {
      // identify the end by its path through the stored floors
      entry.end_id = "ray/" + std::to_string(ray.root);
      int v = ray.root;
      for (int e : ray.edges) {
        v = f.forest.edges[e].second;
        entry.end_id += ">" + std::to_string(v);
      }
    }
    if (seen_ids.count(entry.end_id))
      throw std::logic_error("duplicate end identifier in census");
    seen_ids[entry.end_id] = 1;

    // a path that can still branch above the inspected floors is a cluster
    bool branches = false;
    int v = ray.root;
    for (int e : ray.edges) {
      v = f.forest.edges[e].second;
    }
    if (f.forest.out_edges(v).size() > 1) branches = true;
    for (int e : ray.edges)
      if (f.forest.out_edges(f.forest.edges[e].first).size() > 1)
        branches = true;

    auto limit = limit_tree(f, ray, depth);
    entry.triple = classify_limit(limit.tree);
    entry.resolved = limit.exact && !branches;
    if (!limit.exact)
      entry.notes.push_back("limit known to depth " +
                            std::to_string(limit.tree.known_radius()));
    if (branches)
      entry.notes.push_back("unresolved cluster: path branches beyond floor " +
                            std::to_string(depth));
    census.marked.push_back(std::move(entry));
  }
  return census;
}

}  // namespace lamina
