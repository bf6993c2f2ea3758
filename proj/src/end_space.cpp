#include "lamina/end_space.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lamina {

namespace {
constexpr long kCountCap = 1000000000000000L;
constexpr int kMaxFinitePoints = 4096;
constexpr int kMaxFallbackRadius = 16;

long sat_add(long a, long b) { return std::min(kCountCap, a + b); }
}  // namespace

std::string Genus::str() const {
  switch (tag) {
    case Tag::Finite: return std::to_string(value);
    case Tag::Infinite: return "inf";
    case Tag::AtLeast: return ">=" + std::to_string(value);
  }
  return "?";
}

EndSpaceDescriptor EndSpaceDescriptor::points(int count,
                                              const std::string& prefix) {
  if (count > kMaxFinitePoints)
    throw std::length_error("too many isolated ends for a finite descriptor");
  std::vector<std::string> ls;
  ls.reserve(count);
  for (int i = 0; i < count; ++i) ls.push_back(prefix + std::to_string(i));
  return points(std::move(ls));
}

bool EndSpaceDescriptor::exact() const {
  if (kind == Kind::DepthLimited) return false;
  for (const auto& p : parts)
    if (!p.exact()) return false;
  return true;
}

bool EndSpaceDescriptor::empty() const {
  if (!exact()) return false;
  auto s = normal_shape(*this);
  return s.isolated == 0 && !s.cantor;
}

std::string EndSpaceDescriptor::str() const {
  switch (kind) {
    case Kind::FinitePoints:
      return std::to_string(labels.size()) + " point" +
             (labels.size() == 1 ? "" : "s");
    case Kind::CantorBlock:
      return labels.empty() ? std::string("cantor") : "cantor:" + labels[0];
    case Kind::Composite: {
      std::string out = "[";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i].str();
      }
      return out + "]";
    }
    case Kind::DepthLimited:
      return "depth-limited(d=" + std::to_string(depth) +
             ", isolated=" + std::to_string(observed_isolated) +
             ", clusters=" + std::to_string(observed_clusters) + ")";
  }
  return "?";
}

EndSpaceShape normal_shape(const EndSpaceDescriptor& d) {
  EndSpaceShape s;
  switch (d.kind) {
    case EndSpaceDescriptor::Kind::FinitePoints:
      s.isolated = static_cast<long>(d.labels.size());
      break;
    case EndSpaceDescriptor::Kind::CantorBlock:
      s.cantor = true;
      break;
    case EndSpaceDescriptor::Kind::Composite:
      for (const auto& p : d.parts) {
        auto ps = normal_shape(p);
        s.isolated += ps.isolated;
        s.cantor = s.cantor || ps.cantor;
      }
      break;
    case EndSpaceDescriptor::Kind::DepthLimited:
      break;  // no exact shape
  }
  return s;
}

std::string ClassifyingTriple::str() const {
  return "(genus " + genus.str() + ", ends " + ends.str() +
         ", accumulated " + ends_accumulated.str() + ")";
}

namespace {

void collect_point_labels(const EndSpaceDescriptor& d,
                          std::set<std::string>& points,
                          std::set<std::string>& blocks) {
  switch (d.kind) {
    case EndSpaceDescriptor::Kind::FinitePoints:
      points.insert(d.labels.begin(), d.labels.end());
      break;
    case EndSpaceDescriptor::Kind::CantorBlock:
      blocks.insert(d.labels.empty() ? "cantor" : d.labels[0]);
      break;
    case EndSpaceDescriptor::Kind::Composite:
      for (const auto& p : d.parts) collect_point_labels(p, points, blocks);
      break;
    case EndSpaceDescriptor::Kind::DepthLimited:
      break;
  }
}

}  // namespace

ValidationReport validate_triple(const ClassifyingTriple& t) {
  ValidationReport r;
  bool exact = t.ends.exact() && t.ends_accumulated.exact() && t.genus.exact();
  if (!exact) return r;  // depth-limited triples carry no exact claims
  auto ends = normal_shape(t.ends);
  if (ends.isolated == 0 && !ends.cantor)
    r.add("ends-nonempty", "noncompact surface needs a nonempty end space");
  std::set<std::string> pts, blocks, pts0, blocks0;
  collect_point_labels(t.ends, pts, blocks);
  collect_point_labels(t.ends_accumulated, pts0, blocks0);
  if (!std::includes(pts.begin(), pts.end(), pts0.begin(), pts0.end()) ||
      !std::includes(blocks.begin(), blocks.end(), blocks0.begin(),
                     blocks0.end()))
    r.add("accumulated-subset", "ends_accumulated is not a subset of ends");
  bool acc_nonempty = !t.ends_accumulated.empty();
  if (t.genus.is_infinite() != acc_nonempty)
    r.add("genus-accumulation",
          "g=inf must hold exactly when ends_accumulated is nonempty");
  return r;
}

// ---------------------------------------------------------------------------
// classify_limit

namespace {

struct PartSum {
  long iso_plain = 0;   // isolated ends not accumulated by genus
  long iso_acc = 0;     // isolated ends accumulated by genus
  bool cantor_plain = false;
  bool cantor_acc = false;
  bool failed = false;

  void merge(const PartSum& o) {
    iso_plain = sat_add(iso_plain, o.iso_plain);
    iso_acc = sat_add(iso_acc, o.iso_acc);
    cantor_plain = cantor_plain || o.cantor_plain;
    cantor_acc = cantor_acc || o.cantor_acc;
    failed = failed || o.failed;
  }
};

struct BaseAnalysis {
  const RationalBase& base;
  int n;
  std::vector<char> reach, on_cycle, tainted, live;
  std::vector<long> leaf_count;   // memo: walks to leaves from a dead node
  std::vector<char> leaf_done;
  std::map<int, PartSum> part_memo;

  explicit BaseAnalysis(const RationalBase& b)
      : base(b), n(static_cast<int>(b.nodes.size())),
        reach(n, 0), on_cycle(n, 0), tainted(n, 0), live(n, 0),
        leaf_count(n, 0), leaf_done(n, 0) {}

  std::vector<char> forward_closure(int start, bool include_start) const {
    std::vector<char> out(n, 0);
    std::deque<int> q;
    if (include_start) {
      out[start] = 1;
      q.push_back(start);
    } else {
      for (int c : base.nodes[start].children)
        if (!out[c]) {
          out[c] = 1;
          q.push_back(c);
        }
    }
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int c : base.nodes[u].children)
        if (!out[c]) {
          out[c] = 1;
          q.push_back(c);
        }
    }
    return out;
  }

  void prepare() {
    reach = forward_closure(base.root, true);
    for (int u = 0; u < n; ++u) {
      if (!reach[u]) continue;
      auto fwd = forward_closure(u, false);
      if (fwd[u]) on_cycle[u] = 1;
    }
    for (int u = 0; u < n; ++u) {
      if (!on_cycle[u]) continue;
      auto fwd = forward_closure(u, true);
      for (int v = 0; v < n; ++v)
        if (fwd[v]) tainted[v] = 1;
    }
    for (int u = 0; u < n; ++u) {
      if (!reach[u]) continue;
      auto fwd = forward_closure(u, true);
      for (int v = 0; v < n; ++v)
        if (fwd[v] && on_cycle[v]) {
          live[u] = 1;
          break;
        }
    }
  }

  bool is_leaf(int u) const {
    return base.nodes[u].kind == VertexKind::Boundary &&
           base.nodes[u].children.empty();
  }
  // genus piece as a non-root occurrence (valency-two handle)
  bool is_genus(int u) const {
    return base.nodes[u].kind == VertexKind::Simple &&
           base.nodes[u].children.size() == 1;
  }

  long leaves_below(int u) {
    if (leaf_done[u]) return leaf_count[u];
    leaf_done[u] = 1;  // dead region is acyclic, no revisit issues
    long total = is_leaf(u) ? 1 : 0;
    for (int c : base.nodes[u].children)
      total = sat_add(total, leaves_below(c));
    leaf_count[u] = total;
    return total;
  }

  // Number of walks from the root to each node, valid on the untainted
  // (acyclic) region.
  std::vector<long> walk_counts() const {
    std::vector<long> ways(n, 0);
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u) {
      if (!reach[u] || tainted[u]) continue;
      for (int c : base.nodes[u].children)
        if (reach[c] && !tainted[c]) ++indeg[c];
    }
    std::deque<int> q;
    for (int u = 0; u < n; ++u)
      if (reach[u] && !tainted[u] && indeg[u] == 0) q.push_back(u);
    ways[base.root] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int c : base.nodes[u].children) {
        if (!reach[c] || tainted[c]) continue;
        ways[c] = sat_add(ways[c], ways[u]);
        if (--indeg[c] == 0) q.push_back(c);
      }
    }
    return ways;
  }

  // Live nodes reachable from u, u included.
  std::vector<int> cone(int u) const {
    std::vector<char> seen(n, 0);
    std::vector<int> nodes;
    std::deque<int> q{u};
    seen[u] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      nodes.push_back(v);
      for (int c : base.nodes[v].children)
        if (live[c] && !seen[c]) {
          seen[c] = 1;
          q.push_back(c);
        }
    }
    return nodes;
  }

  // live boundary children of a simple node; branching happens only here
  int live_branching(int u) const {
    int k = 0;
    for (int c : base.nodes[u].children)
      if (live[c]) ++k;
    return k;
  }

  bool subgraph_has_cycle(const std::vector<int>& nodes,
                          const std::vector<char>& removed) const {
    std::map<int, int> indeg;
    for (int u : nodes)
      if (!removed[u]) indeg[u] = 0;
    for (int u : nodes) {
      if (removed[u]) continue;
      for (int c : base.nodes[u].children)
        if (indeg.count(c)) ++indeg[c];
    }
    std::deque<int> q;
    for (auto& [u, d] : indeg)
      if (d == 0) q.push_back(u);
    std::size_t visited = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      ++visited;
      for (int c : base.nodes[u].children)
        if (indeg.count(c) && --indeg[c] == 0) q.push_back(c);
    }
    return visited != indeg.size();
  }

  // Terminal classification of the cone of a tainted live node.
  PartSum classify_cone(int u) {
    auto nodes = cone(u);
    bool all_ray = true, any_genus = false;
    for (int v : nodes) {
      if (base.nodes[v].kind != VertexKind::Simple) continue;
      if (live_branching(v) >= 2) all_ray = false;
      if (is_genus(v)) any_genus = true;
    }
    PartSum s;
    if (all_ray) {
      s.iso_acc = 1;  // a single ray of valency-two handles
      return s;
    }
    std::vector<char> removed(n, 0);
    for (int v : nodes)
      if (base.nodes[v].kind == VertexKind::Simple && live_branching(v) >= 2)
        removed[v] = 1;
    bool branch_everywhere = !subgraph_has_cycle(nodes, removed);
    if (!branch_everywhere) {
      s.failed = true;
      return s;
    }
    if (!any_genus) {
      s.cantor_plain = true;
      return s;
    }
    std::fill(removed.begin(), removed.end(), 0);
    for (int v : nodes)
      if (is_genus(v)) removed[v] = 1;
    bool genus_everywhere = !subgraph_has_cycle(nodes, removed);
    if (genus_everywhere)
      s.cantor_acc = true;
    else
      s.failed = true;  // mixed behaviour, outside the exact fragment
    return s;
  }

  PartSum part_of(int u) {
    auto it = part_memo.find(u);
    if (it != part_memo.end()) return it->second;
    PartSum s;
    if (tainted[u]) {
      s = classify_cone(u);
    } else {
      for (int c : base.nodes[u].children) {
        if (live[c]) {
          s.merge(part_of(c));
        } else {
          PartSum dead;
          dead.iso_plain = leaves_below(c);
          s.merge(dead);
        }
      }
    }
    part_memo[u] = s;
    return s;
  }
};

ClassifyingTriple depth_limited_triple(const CodingTree& explicit_ball,
                                       int radius) {
  long genus_seen = 0;
  int funnels = 0, clusters = 0;
  auto depths = explicit_ball.depths();
  for (int v = 0; v < explicit_ball.vertex_count(); ++v) {
    int d = depths[v];
    if (d >= radius) {
      ++clusters;
      continue;
    }
    if (explicit_ball.kind(v) == VertexKind::Simple) {
      if (explicit_ball.valency(v) <= 2) ++genus_seen;
    } else if (explicit_ball.valency(v) == 1) {
      ++funnels;
    }
  }
  ClassifyingTriple t;
  t.genus = Genus::at_least(genus_seen);
  t.ends = EndSpaceDescriptor::depth_limited(radius, funnels, clusters);
  t.ends_accumulated = EndSpaceDescriptor::depth_limited(radius, 0, clusters);
  return t;
}

ClassifyingTriple finite_triple(const CodingTree& t) {
  auto sig = surface_of(t);
  ClassifyingTriple out;
  out.genus = Genus::finite(sig.genus);
  out.ends = EndSpaceDescriptor::points(sig.boundary_count, "e");
  out.ends_accumulated = EndSpaceDescriptor::points(0, "e");
  return out;
}

ClassifyingTriple assemble_triple(bool genus_infinite, long finite_genus,
                                  const PartSum& s) {
  ClassifyingTriple out;
  out.genus = genus_infinite ? Genus::infinite() : Genus::finite(finite_genus);

  std::vector<EndSpaceDescriptor> parts, acc_parts;
  long iso_total = sat_add(s.iso_acc, s.iso_plain);
  if (iso_total > kMaxFinitePoints)
    throw std::length_error("too many isolated ends for a finite descriptor");
  std::vector<std::string> labels, acc_labels;
  for (long i = 0; i < s.iso_acc; ++i) {
    labels.push_back("g" + std::to_string(i));
    acc_labels.push_back("g" + std::to_string(i));
  }
  for (long i = 0; i < s.iso_plain; ++i)
    labels.push_back("e" + std::to_string(i));
  if (!labels.empty()) parts.push_back(EndSpaceDescriptor::points(labels));
  if (s.cantor_acc) {
    auto block = EndSpaceDescriptor::cantor();
    block.labels = {"cg"};
    parts.push_back(block);
    acc_parts.push_back(block);
  }
  if (s.cantor_plain) {
    auto block = EndSpaceDescriptor::cantor();
    block.labels = {"ce"};
    parts.push_back(block);
  }
  auto pack = [](std::vector<EndSpaceDescriptor> ps) {
    if (ps.empty()) return EndSpaceDescriptor::points({});
    if (ps.size() == 1) return ps[0];
    return EndSpaceDescriptor::composite(std::move(ps));
  };
  out.ends = pack(parts);
  if (!acc_labels.empty())
    acc_parts.insert(acc_parts.begin(),
                     EndSpaceDescriptor::points(acc_labels));
  if (acc_parts.empty())
    out.ends_accumulated = EndSpaceDescriptor::points({});
  else if (acc_parts.size() == 1)
    out.ends_accumulated = acc_parts[0];
  else
    out.ends_accumulated = EndSpaceDescriptor::composite(std::move(acc_parts));
  return out;
}

}  // namespace

ClassifyingTriple classify_limit(const CodingTree& t, int fallback_depth) {
  fallback_depth = std::clamp(fallback_depth, 1, kMaxFallbackRadius);
  switch (t.presentation()) {
    case CodingTree::Presentation::ExplicitFinite:
      return finite_triple(t);
    case CodingTree::Presentation::DepthLimited: {
      int r = std::min(fallback_depth, t.known_radius());
      return depth_limited_triple(t.ball(r), r);
    }
    case CodingTree::Presentation::Rational:
      break;
  }
  const RationalBase& base = *t.base();
  BaseAnalysis a(base);
  a.prepare();

  bool any_live = false;
  for (int u = 0; u < a.n; ++u)
    if (a.reach[u] && a.live[u]) any_live = true;

  bool root_genus_occurrence =
      base.nodes[base.root].kind == VertexKind::Simple &&
      base.nodes[base.root].children.size() <= 2;

  if (!any_live) {
    // finite unfolding: count pieces and boundary leaves by walk counting
    auto ways = a.walk_counts();
    long genus = root_genus_occurrence ? 1 : 0;
    long funnels = 0;
    for (int u = 0; u < a.n; ++u) {
      if (!a.reach[u] || u == base.root) continue;
      if (a.is_genus(u)) genus = sat_add(genus, ways[u]);
      if (a.is_leaf(u)) funnels = sat_add(funnels, ways[u]);
    }
    PartSum s;
    s.iso_plain = funnels;
    try {
      return assemble_triple(false, genus, s);
    } catch (const std::length_error&) {
      return depth_limited_triple(t.ball(fallback_depth), fallback_depth);
    }
  }

  // infinite unfolding
  bool leaf_tainted = false, genus_infinite = false;
  for (int u = 0; u < a.n; ++u) {
    if (!a.reach[u] || !a.tainted[u]) continue;
    if (a.is_leaf(u)) leaf_tainted = true;
    if (a.is_genus(u)) genus_infinite = true;
  }
  if (leaf_tainted)
    return depth_limited_triple(t.ball(fallback_depth), fallback_depth);

  PartSum s = a.part_of(base.root);
  if (s.failed)
    return depth_limited_triple(t.ball(fallback_depth), fallback_depth);

  long finite_genus = 0;
  if (!genus_infinite) {
    auto ways = a.walk_counts();
    finite_genus = root_genus_occurrence ? 1 : 0;
    for (int u = 0; u < a.n; ++u) {
      if (!a.reach[u] || a.tainted[u] || u == base.root) continue;
      if (a.is_genus(u)) finite_genus = sat_add(finite_genus, ways[u]);
    }
  }
  try {
    return assemble_triple(genus_infinite, finite_genus, s);
  } catch (const std::length_error&) {
    return depth_limited_triple(t.ball(fallback_depth), fallback_depth);
  }
}

// ---------------------------------------------------------------------------
// triples_equivalent

namespace {

struct PairShape {
  long plain_points = 0, acc_points = 0;
  bool plain_cantor = false, acc_cantor = false;
  bool operator==(const PairShape&) const = default;
};

PairShape pair_shape(const ClassifyingTriple& t) {
  std::set<std::string> pts, blocks, pts0, blocks0;
  collect_point_labels(t.ends, pts, blocks);
  collect_point_labels(t.ends_accumulated, pts0, blocks0);
  PairShape s;
  s.acc_points = static_cast<long>(pts0.size());
  s.plain_points = static_cast<long>(pts.size()) - s.acc_points;
  s.acc_cantor = !blocks0.empty();
  for (const auto& b : blocks)
    if (!blocks0.count(b)) s.plain_cantor = true;
  return s;
}

}  // namespace

TripleComparison triples_equivalent(const ClassifyingTriple& a,
                                    const ClassifyingTriple& b) {
  for (const auto* t : {&a, &b}) {
    auto report = validate_triple(*t);
    if (!report.ok())
      throw std::invalid_argument("invalid classifying triple: " +
                                  report.violations.front().rule + " (" +
                                  report.violations.front().detail + ")");
  }
  // genus comparison first; it can refute even depth-limited triples
  const Genus &ga = a.genus, &gb = b.genus;
  auto genus_no = [&]() {
    if (ga.exact() && gb.exact()) return !(ga == gb);
    if (ga.tag == Genus::Tag::AtLeast && gb.tag == Genus::Tag::Finite)
      return ga.value > gb.value;
    if (gb.tag == Genus::Tag::AtLeast && ga.tag == Genus::Tag::Finite)
      return gb.value > ga.value;
    return false;
  };
  if (genus_no()) return {TripleMatch::No, -1};

  bool exact = a.ends.exact() && a.ends_accumulated.exact() &&
               b.ends.exact() && b.ends_accumulated.exact() && ga.exact() &&
               gb.exact();
  if (!exact) {
    int depth = -1;
    for (const auto* d : {&a.ends, &a.ends_accumulated, &b.ends,
                          &b.ends_accumulated})
      if (d->kind == EndSpaceDescriptor::Kind::DepthLimited)
        depth = depth < 0 ? d->depth : std::min(depth, d->depth);
    return {TripleMatch::UnknownBeyondDepth, depth};
  }
  return {pair_shape(a) == pair_shape(b) ? TripleMatch::Yes : TripleMatch::No,
          -1};
}

}  // namespace lamina
