#include "lamina/coding_tree.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace lamina {

CodingTree CodingTree::finite(std::vector<VertexKind> kinds,
                              const std::vector<std::pair<int, int>>& edges,
                              int root) {
  CodingTree t;
  t.kinds_ = std::move(kinds);
  t.adj_.assign(t.kinds_.size(), {});
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= t.vertex_count() || b >= t.vertex_count())
      throw std::invalid_argument("edge endpoint out of range");
    t.adj_[a].push_back(b);
    t.adj_[b].push_back(a);
  }
  for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());
  if (root < 0 || root >= t.vertex_count())
    throw std::invalid_argument("root out of range");
  t.root_ = root;
  t.pres_ = Presentation::ExplicitFinite;
  return t;
}

CodingTree CodingTree::rational(RationalBase base) {
  if (base.nodes.empty()) throw std::invalid_argument("empty base graph");
  if (base.root < 0 || base.root >= static_cast<int>(base.nodes.size()))
    throw std::invalid_argument("base root out of range");
  for (const auto& n : base.nodes)
    for (int c : n.children)
      if (c < 0 || c >= static_cast<int>(base.nodes.size()))
        throw std::invalid_argument("base child out of range");
  CodingTree t;
  t.pres_ = Presentation::Rational;
  t.base_ = std::move(base);
  t.root_ = 0;
  return t;
}

CodingTree CodingTree::depth_limited(const CodingTree& ball, int radius) {
  if (!ball.is_finite())
    throw std::invalid_argument("depth_limited needs an explicit ball");
  CodingTree t = ball;
  t.pres_ = Presentation::DepthLimited;
  t.known_radius_ = radius;
  return t;
}

std::vector<int> CodingTree::depths() const {
  // BFS distances; on valid trees the unique path lengths.
  std::vector<int> dist(vertex_count(), -1);
  std::deque<int> q{root_};
  dist[root_] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : adj_[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

int CodingTree::depth_of(int v) const { return depths()[v]; }

int CodingTree::depth() const {
  int d = 0;
  for (int dv : depths()) d = std::max(d, dv);
  return d;
}

namespace {

// Ball extraction on the explicit part, breadth-first relabelling.
CodingTree explicit_ball(const CodingTree& t, int radius) {
  std::vector<int> dist(t.vertex_count(), -1);
  std::vector<int> order;
  std::deque<int> q{t.root()};
  dist[t.root()] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    order.push_back(u);
    for (int w : t.neighbors(u))
      if (dist[w] < 0 && dist[u] + 1 <= radius) {
        dist[w] = dist[u] + 1;
        q.push_back(w);
      }
  }
  std::vector<int> new_id(t.vertex_count(), -1);
  std::vector<VertexKind> kinds;
  for (int u : order) {
    new_id[u] = static_cast<int>(kinds.size());
    kinds.push_back(t.kind(u));
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : order)
    for (int w : t.neighbors(u))
      if (new_id[w] >= 0 && new_id[u] < new_id[w])
        edges.emplace_back(new_id[u], new_id[w]);
  return CodingTree::finite(std::move(kinds), edges, 0);
}

// Unfolds a base graph to the given radius; walks become vertices.
CodingTree unfold_base(const RationalBase& base, int radius) {
  std::vector<VertexKind> kinds{base.nodes[base.root].kind};
  std::vector<std::pair<int, int>> edges;
  struct Item {
    int vertex;
    int node;
    int depth;
  };
  std::deque<Item> q{{0, base.root, 0}};
  while (!q.empty()) {
    auto [v, node, d] = q.front();
    q.pop_front();
    if (d == radius) continue;
    for (int c : base.nodes[node].children) {
      int w = static_cast<int>(kinds.size());
      kinds.push_back(base.nodes[c].kind);
      edges.emplace_back(v, w);
      q.push_back({w, c, d + 1});
    }
  }
  return CodingTree::finite(std::move(kinds), edges, 0);
}

}  // namespace

CodingTree CodingTree::ball(int radius) const {
  if (radius < 0) throw std::invalid_argument("negative radius");
  switch (pres_) {
    case Presentation::ExplicitFinite:
      return explicit_ball(*this, radius);
    case Presentation::Rational:
      return unfold_base(*base_, radius);
    case Presentation::DepthLimited:
      if (radius > known_radius_)
        throw std::invalid_argument("ball radius exceeds known radius");
      return explicit_ball(*this, radius);
  }
  throw std::logic_error("unreachable");
}

namespace {

ValidationReport validate_explicit(const CodingTree& t) {
  ValidationReport r;
  int n = t.vertex_count();
  if (n == 0) {
    r.add("nonempty", "tree has no vertices");
    return r;
  }
  long edge_count = 0;
  for (int v = 0; v < n; ++v) edge_count += t.valency(v);
  edge_count /= 2;

  std::vector<char> seen(n, 0);
  std::deque<int> q{t.root()};
  seen[t.root()] = 1;
  int reached = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    ++reached;
    for (int w : t.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
  }
  if (reached != n) {
    std::vector<int> missing;
    for (int v = 0; v < n; ++v)
      if (!seen[v]) missing.push_back(v);
    r.add("connected", "vertices unreachable from the root", missing);
  }
  if (edge_count != n - 1)
    r.add("acyclic", "edge count " + std::to_string(edge_count) +
                         " differs from vertex count - 1");
  if (!r.ok()) return r;  // only report local axioms on actual trees

  if (t.kind(t.root()) != VertexKind::Simple)
    r.add("root-kind", "root must be a simple vertex", {t.root()});
  for (int v = 0; v < n; ++v) {
    for (int w : t.neighbors(v))
      if (v < w && t.kind(v) == t.kind(w))
        r.add("alternation", "edge joins two vertices of the same type",
              {v, w});
    int d = t.valency(v);
    if (t.kind(v) == VertexKind::Boundary) {
      if (d != 1 && d != 2)
        r.add("boundary-valency",
              "boundary vertex of valency " + std::to_string(d), {v});
    } else {
      if (d < 1 || d > 3)
        r.add("simple-valency", "simple vertex of valency " + std::to_string(d),
              {v});
      else if (d == 1 && v != t.root())
        r.add("simple-valency",
              "non-root simple vertex of valency 1", {v});
    }
  }
  return r;
}

ValidationReport validate_base(const RationalBase& base) {
  ValidationReport r;
  int n = static_cast<int>(base.nodes.size());
  std::vector<char> reach(n, 0), nonroot(n, 0);
  std::deque<int> q{base.root};
  reach[base.root] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int c : base.nodes[u].children) {
      nonroot[c] = 1;
      if (!reach[c]) {
        reach[c] = 1;
        q.push_back(c);
      }
    }
  }
  if (base.nodes[base.root].kind != VertexKind::Simple)
    r.add("root-kind", "base root must be a simple vertex", {base.root});
  int root_arity = static_cast<int>(base.nodes[base.root].children.size());
  if (root_arity < 1 || root_arity > 3)
    r.add("simple-valency",
          "root occurrence has valency " + std::to_string(root_arity),
          {base.root});
  for (int u = 0; u < n; ++u) {
    if (!reach[u]) continue;
    const auto& node = base.nodes[u];
    for (int c : node.children)
      if (base.nodes[c].kind == node.kind)
        r.add("alternation",
              "base edge joins two vertices of the same type", {u, c});
    if (!nonroot[u]) continue;
    int arity = static_cast<int>(node.children.size());
    if (node.kind == VertexKind::Simple) {
      if (arity < 1 || arity > 2)
        r.add("simple-valency",
              "unfolded simple vertex of valency " + std::to_string(arity + 1),
              {u});
    } else {
      if (arity > 1)
        r.add("boundary-valency",
              "unfolded boundary vertex of valency " +
                  std::to_string(arity + 1),
              {u});
    }
  }
  return r;
}

}  // namespace

ValidationReport validate_coding_tree(const CodingTree& t) {
  if (t.is_rational()) return validate_base(*t.base());
  return validate_explicit(t);
}

CompactSurfaceSignature surface_of(const CodingTree& t) {
  if (!t.is_finite()) throw std::invalid_argument("finite tree required");
  CompactSurfaceSignature s;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.kind(v) == VertexKind::Simple) {
      int d = t.valency(v);
      s.genus += (d <= 2) ? 1 : 0;
      s.euler_characteristic += (d == 2) ? -2 : -1;
    } else if (t.valency(v) == 1) {
      ++s.boundary_count;
    }
  }
  return s;
}

CodingTree truncate(const CodingTree& t, int n) {
  if (n < 0) throw std::invalid_argument("negative truncation index");
  return t.ball(2 * n + 1);
}

namespace {

std::string subtree_code(const CodingTree& t, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : t.neighbors(v))
    if (w != parent) child_codes.push_back(subtree_code(t, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code(1, t.kind(v) == VertexKind::Simple ? 'S' : 'B');
  code += '(';
  for (const auto& c : child_codes) code += c;
  code += ')';
  return code;
}

}  // namespace

std::string canonical_form(const CodingTree& t) {
  if (!t.is_finite()) throw std::invalid_argument("finite tree required");
  return subtree_code(t, t.root(), -1);
}

CodingTree canonical_relabel(const CodingTree& t) {
  if (!t.is_finite()) throw std::invalid_argument("finite tree required");
  std::vector<VertexKind> kinds;
  std::vector<std::pair<int, int>> edges;
  std::function<int(int, int)> emit = [&](int v, int parent) {
    int id = static_cast<int>(kinds.size());
    kinds.push_back(t.kind(v));
    std::vector<std::pair<std::string, int>> children;
    for (int w : t.neighbors(v))
      if (w != parent) children.emplace_back(subtree_code(t, w, v), w);
    std::sort(children.begin(), children.end());
    for (const auto& [code, w] : children) edges.emplace_back(id, emit(w, v));
    return id;
  };
  emit(t.root(), -1);
  return CodingTree::finite(std::move(kinds), edges, 0);
}

bool is_good_inclusion(const CodingTree& src, const CodingTree& dst,
                       const GoodTreeInclusion& inc) {
  const CodingTree& d =
      dst.is_rational() ? dst.ball(src.depth() + 1) : dst;
  const auto& m = inc.vertex_map;
  if (static_cast<int>(m.size()) != src.vertex_count()) return false;
  std::vector<char> hit(d.vertex_count(), 0);
  for (int v = 0; v < src.vertex_count(); ++v) {
    int w = m[v];
    if (w < 0 || w >= d.vertex_count()) return false;
    if (hit[w]) return false;  // injective
    hit[w] = 1;
    if (src.kind(v) != d.kind(w)) return false;
  }
  if (m[src.root()] != d.root()) return false;
  // adjacency preserved
  for (int v = 0; v < src.vertex_count(); ++v) {
    std::set<int> image_nbrs;
    for (int u : src.neighbors(v)) image_nbrs.insert(m[u]);
    const auto& dn = d.neighbors(m[v]);
    for (int w : image_nbrs)
      if (!std::binary_search(dn.begin(), dn.end(), w)) return false;
    // image boundary consists of boundary vertices: a simple image vertex
    // must have all of its dst neighbours inside the image
    if (src.kind(v) == VertexKind::Simple &&
        static_cast<int>(image_nbrs.size()) != d.valency(m[v]))
      return false;
  }
  return true;
}

namespace {

// Backtracking embedding search; candidates tried in ascending dst id so the
// first full solution is the lexicographically least witness.
struct InclusionSearch {
  const CodingTree& src;
  const CodingTree& dst;
  std::vector<int> order;    // src vertices, breadth-first
  std::vector<int> parent;   // src parent
  std::vector<int> map;      // src -> dst
  std::vector<char> used;    // dst vertices taken

  InclusionSearch(const CodingTree& s, const CodingTree& d)
      : src(s), dst(d), parent(s.vertex_count(), -1),
        map(s.vertex_count(), -1), used(d.vertex_count(), 0) {
    std::deque<int> q{src.root()};
    std::vector<char> seen(src.vertex_count(), 0);
    seen[src.root()] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      order.push_back(u);
      for (int w : src.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          q.push_back(w);
        }
    }
  }

  bool feasible(int v, int w) const {
    if (src.kind(v) != dst.kind(w)) return false;
    if (src.kind(v) == VertexKind::Simple)
      return src.valency(v) == dst.valency(w);
    return src.valency(v) <= dst.valency(w);
  }

  bool solve(std::size_t i) {
    if (i == order.size()) return true;
    int v = order[i];
    if (v == src.root()) {
      int w = dst.root();
      if (!feasible(v, w)) return false;
      map[v] = w;
      used[w] = 1;
      if (solve(i + 1)) return true;
      used[w] = 0;
      map[v] = -1;
      return false;
    }
    int anchor = map[parent[v]];
    for (int w : dst.neighbors(anchor)) {
      if (used[w] || !feasible(v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (solve(i + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  }
};

}  // namespace

InclusionSearchResult find_good_inclusion(const CodingTree& src,
                                          const CodingTree& dst) {
  InclusionSearchResult res;
  if (!src.is_finite()) {
    res.status = SearchStatus::Undecidable;
    res.note = "source must be an explicit finite tree";
    return res;
  }
  int src_depth = src.depth();
  if (dst.presentation() == CodingTree::Presentation::DepthLimited &&
      src_depth > dst.known_radius()) {
    res.status = SearchStatus::Undecidable;
    res.note = "undecidable at depth " + std::to_string(dst.known_radius());
    return res;
  }
  const CodingTree unfolded =
      dst.is_rational() ? dst.ball(src_depth + 1) : dst;
  InclusionSearch search(src, unfolded);
  if (search.solve(0)) {
    res.status = SearchStatus::Found;
    res.witness = GoodTreeInclusion{search.map};
    if (dst.is_rational())
      res.note = "witness into ball(" + std::to_string(src_depth + 1) + ")";
  } else {
    res.status = SearchStatus::NotFound;
  }
  return res;
}

namespace {

// Shapes hanging below a boundary vertex, enumerated up to isomorphism.
struct BoundaryShape {
  // empty means a boundary leaf; otherwise indices of grandchild shapes
  // (1 or 2, non-decreasing) in the previous layer's shape list
  std::vector<int> grandchildren;
  int pieces = 0;
};

struct ShapeLayer {
  std::vector<BoundaryShape> shapes;
  const ShapeLayer* deeper = nullptr;  // layer the grandchildren refer to
};

void emit_shape(const ShapeLayer& layer, int shape_idx, int attach,
                std::vector<VertexKind>& kinds,
                std::vector<std::pair<int, int>>& edges) {
  int b = static_cast<int>(kinds.size());
  kinds.push_back(VertexKind::Boundary);
  edges.emplace_back(attach, b);
  const BoundaryShape& shape = layer.shapes[shape_idx];
  if (shape.grandchildren.empty()) return;
  int s = static_cast<int>(kinds.size());
  kinds.push_back(VertexKind::Simple);
  edges.emplace_back(b, s);
  for (int g : shape.grandchildren) emit_shape(*layer.deeper, g, s, kinds, edges);
}

}  // namespace

std::vector<CodingTree> enumerate_coding_trees(int max_depth, int max_pieces) {
  if (max_depth < 1) return {};
  // layers[d] = shapes of additional depth <= d below a boundary vertex
  std::vector<ShapeLayer> layers(max_depth);
  for (int d = 0; d < max_depth; ++d) {
    ShapeLayer& layer = layers[d];
    layer.shapes.push_back({{}, 0});  // the boundary leaf
    if (d >= 2) {
      layer.deeper = &layers[d - 2];
      const auto& sub = layer.deeper->shapes;
      int m = static_cast<int>(sub.size());
      for (int i = 0; i < m; ++i)
        layer.shapes.push_back({{i}, 1 + sub[i].pieces});
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
          layer.shapes.push_back({{i, j}, 1 + sub[i].pieces + sub[j].pieces});
    }
  }
  const ShapeLayer& top = layers[max_depth - 1];
  int m = static_cast<int>(top.shapes.size());
  std::vector<CodingTree> out;
  auto emit_tree = [&](const std::vector<int>& children) {
    int pieces = 1;
    for (int c : children) pieces += top.shapes[c].pieces;
    if (max_pieces >= 0 && pieces > max_pieces) return;
    std::vector<VertexKind> kinds{VertexKind::Simple};
    std::vector<std::pair<int, int>> edges;
    for (int c : children) emit_shape(top, c, 0, kinds, edges);
    out.push_back(canonical_relabel(CodingTree::finite(std::move(kinds), edges, 0)));
  };
  for (int i = 0; i < m; ++i) {
    emit_tree({i});
    for (int j = i; j < m; ++j) {
      emit_tree({i, j});
      for (int k = j; k < m; ++k) emit_tree({i, j, k});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CodingTree& a, const CodingTree& b) {
              return canonical_form(a) < canonical_form(b);
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lamina
