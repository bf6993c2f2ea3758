#include "lamina/forest.hpp"

#include <algorithm>
#include <functional>

namespace lamina {

int Forest::vertex_count() const {
  int n = 0;
  for (const auto& fl : floors) n += static_cast<int>(fl.size());
  return n;
}

int Forest::floor_of(int v) const {
  for (int i = 0; i < floor_count(); ++i)
    for (int u : floors[i])
      if (u == v) return i;
  return -1;
}

std::vector<int> Forest::out_edges(int v) const {
  std::vector<int> out;
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].first == v) out.push_back(e);
  return out;
}

int Forest::in_edge(int v) const {
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    if (edges[e].second == v) return e;
  return -1;
}

std::vector<int> Forest::roots() const {
  std::vector<char> terminal(vertex_count(), 0);
  for (const auto& [o, t] : edges)
    if (t >= 0 && t < vertex_count()) terminal[t] = 1;
  std::vector<int> out;
  for (const auto& fl : floors)
    for (int v : fl)
      if (!terminal[v]) out.push_back(v);
  return out;
}

ValidationReport validate_forest(const Forest& f) {
  ValidationReport r;
  int n = f.vertex_count();
  std::vector<int> floor(n, -1);
  bool ids_ok = true;
  for (int i = 0; i < f.floor_count(); ++i)
    for (int v : f.floors[i]) {
      if (v < 0 || v >= n) {
        r.add("vertex-ids", "vertex id out of range", {v});
        ids_ok = false;
        continue;
      }
      if (floor[v] >= 0) {
        r.add("vertex-ids", "vertex listed on two floors", {v});
        ids_ok = false;
      }
      floor[v] = i;
    }
  for (int v = 0; v < n && ids_ok; ++v)
    if (floor[v] < 0) {
      r.add("vertex-ids", "vertex missing from every floor", {v});
      ids_ok = false;
    }
  if (!ids_ok) return r;

  std::vector<int> in_count(n, 0), out_count(n, 0);
  for (int e = 0; e < static_cast<int>(f.edges.size()); ++e) {
    auto [o, t] = f.edges[e];
    if (o < 0 || o >= n || t < 0 || t >= n) {
      r.add("edge-ids", "edge endpoint out of range", {e});
      continue;
    }
    if (floor[t] != floor[o] + 1)
      r.add("edge-floors", "edge does not go up exactly one floor", {o, t});
    ++out_count[o];
    ++in_count[t];
  }
  for (int v = 0; v < n; ++v) {
    if (in_count[v] > 1)
      r.add("unique-parent", "vertex terminal of " +
                                 std::to_string(in_count[v]) + " edges",
            {v});
    // the stored top floor is the frontier; out-edges are only required below
    if (out_count[v] == 0 && floor[v] + 1 < f.floor_count())
      r.add("has-extension", "vertex is origin of no edge", {v});
  }
  return r;
}

std::vector<Ray> enumerate_rays(const Forest& f, int max_floor) {
  std::vector<Ray> rays;
  std::function<void(Ray&, int)> extend = [&](Ray& ray, int v) {
    int fl = f.floor_of(v);
    auto outs = f.out_edges(v);
    if (fl >= max_floor || outs.empty()) {
      rays.push_back(ray);
      return;
    }
    for (int e : outs) {
      ray.edges.push_back(e);
      extend(ray, f.edges[e].second);
      ray.edges.pop_back();
    }
  };
  for (int root : f.roots()) {
    Ray ray;
    ray.root = root;
    extend(ray, root);
  }
  return rays;
}

}  // namespace lamina
