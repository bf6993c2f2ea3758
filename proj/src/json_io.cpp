#include "lamina/json_io.hpp"

#include <algorithm>

namespace lamina {

namespace {

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "." + key, "missing");
  return *it;
}

int require_int(const Json& j, const char* key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_number_integer())
    throw SchemaError(path + "." + key, "expected an integer");
  return v.get<int>();
}

double require_double(const Json& j, const char* key,
                      const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_number()) throw SchemaError(path + "." + key, "expected a number");
  return v.get<double>();
}

bool require_bool(const Json& j, const char* key, const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_boolean())
    throw SchemaError(path + "." + key, "expected a boolean");
  return v.get<bool>();
}

std::string require_string(const Json& j, const char* key,
                           const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

const Json& require_array(const Json& j, const char* key,
                          const std::string& path) {
  const Json& v = require(j, key, path);
  if (!v.is_array()) throw SchemaError(path + "." + key, "expected an array");
  return v;
}

std::vector<int> int_array(const Json& arr, const std::string& path) {
  if (!arr.is_array()) throw SchemaError(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number_integer())
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "expected an integer");
    out.push_back(arr[i].get<int>());
  }
  return out;
}

std::vector<double> double_array(const Json& arr, const std::string& path) {
  if (!arr.is_array()) throw SchemaError(path, "expected an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number())
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "expected a number");
    out.push_back(arr[i].get<double>());
  }
  return out;
}

std::vector<std::string> string_array(const Json& arr,
                                      const std::string& path) {
  if (!arr.is_array()) throw SchemaError(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string())
      throw SchemaError(path + "[" + std::to_string(i) + "]",
                        "expected a string");
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

void check_format(const Json& j, const char* tag, const std::string& path) {
  if (require_string(j, "format", path) != tag)
    throw SchemaError(path + ".format", std::string("expected \"") + tag +
                                            "\"");
}

VertexKind kind_from_string(const std::string& s, const std::string& path) {
  if (s == "simple") return VertexKind::Simple;
  if (s == "boundary") return VertexKind::Boundary;
  throw SchemaError(path, "expected 'simple' or 'boundary'");
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

// --- codingtree/1 -----------------------------------------------------------

Json to_json(const CodingTree& t) {
  Json j;
  j["format"] = "codingtree/1";
  Json verts = Json::array();
  for (int v = 0; v < t.vertex_count(); ++v)
    verts.push_back({{"id", v}, {"kind", kind_name(t.kind(v))}});
  j["vertices"] = std::move(verts);
  Json edges = Json::array();
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int w : t.neighbors(v))
      if (v < w) edges.push_back(Json::array({v, w}));
  j["edges"] = std::move(edges);
  j["root"] = t.root();
  if (t.is_rational()) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < t.base()->nodes.size(); ++i) {
      const auto& n = t.base()->nodes[i];
      nodes.push_back({{"id", static_cast<int>(i)},
                       {"kind", kind_name(n.kind)},
                       {"children", n.children}});
    }
    j["rational"] = {{"nodes", std::move(nodes)}, {"root", t.base()->root}};
  }
  if (t.presentation() == CodingTree::Presentation::DepthLimited)
    j["known_radius"] = t.known_radius();
  return j;
}

CodingTree coding_tree_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "codingtree/1", path);
  if (j.contains("rational")) {
    const Json& rj = j["rational"];
    const std::string rpath = path + ".rational";
    RationalBase base;
    const Json& nodes = require_array(rj, "nodes", rpath);
    base.nodes.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const std::string npath = rpath + ".nodes[" + std::to_string(i) + "]";
      int id = require_int(nodes[i], "id", npath);
      if (id < 0 || id >= static_cast<int>(nodes.size()))
        throw SchemaError(npath + ".id", "node id out of range");
      base.nodes[id].kind = kind_from_string(
          require_string(nodes[i], "kind", npath), npath + ".kind");
      const Json& ch = require_array(nodes[i], "children", npath);
      for (std::size_t c = 0; c < ch.size(); ++c) {
        if (!ch[c].is_number_integer())
          throw SchemaError(npath + ".children[" + std::to_string(c) + "]",
                            "expected an integer");
        base.nodes[id].children.push_back(ch[c].get<int>());
      }
    }
    base.root = require_int(rj, "root", rpath);
    try {
      return CodingTree::rational(std::move(base));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(rpath, e.what());
    }
  }
  const Json& verts = require_array(j, "vertices", path);
  std::vector<VertexKind> kinds(verts.size(), VertexKind::Simple);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string vpath = path + ".vertices[" + std::to_string(i) + "]";
    int id = require_int(verts[i], "id", vpath);
    if (id < 0 || id >= static_cast<int>(verts.size()))
      throw SchemaError(vpath + ".id", "vertex id out of range");
    kinds[id] = kind_from_string(require_string(verts[i], "kind", vpath),
                                 vpath + ".kind");
  }
  const Json& edges = require_array(j, "edges", path);
  std::vector<std::pair<int, int>> edge_list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string epath = path + ".edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2 ||
        !edges[i][0].is_number_integer() || !edges[i][1].is_number_integer())
      throw SchemaError(epath, "expected a pair of vertex ids");
    edge_list.emplace_back(edges[i][0].get<int>(), edges[i][1].get<int>());
  }
  int root = require_int(j, "root", path);
  CodingTree t;
  try {
    t = CodingTree::finite(std::move(kinds), edge_list, root);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
  if (j.contains("known_radius")) {
    if (!j["known_radius"].is_number_integer())
      throw SchemaError(path + ".known_radius", "expected an integer");
    t = CodingTree::depth_limited(t, j["known_radius"].get<int>());
  }
  return t;
}

// --- classifying triples ----------------------------------------------------

namespace {

Json descriptor_to_json(const EndSpaceDescriptor& d) {
  Json j;
  switch (d.kind) {
    case EndSpaceDescriptor::Kind::FinitePoints:
      j["kind"] = "points";
      j["labels"] = d.labels;
      break;
    case EndSpaceDescriptor::Kind::CantorBlock:
      j["kind"] = "cantor";
      if (!d.labels.empty()) j["name"] = d.labels[0];
      break;
    case EndSpaceDescriptor::Kind::Composite: {
      j["kind"] = "composite";
      Json parts = Json::array();
      for (const auto& p : d.parts) parts.push_back(descriptor_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
    case EndSpaceDescriptor::Kind::DepthLimited:
      j["kind"] = "depth_limited";
      j["depth"] = d.depth;
      j["isolated"] = d.observed_isolated;
      j["clusters"] = d.observed_clusters;
      break;
  }
  return j;
}

EndSpaceDescriptor descriptor_from_json(const Json& j,
                                        const std::string& path) {
  std::string kind = require_string(j, "kind", path);
  if (kind == "points") {
    const Json& ls = require_array(j, "labels", path);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (!ls[i].is_string())
        throw SchemaError(path + ".labels[" + std::to_string(i) + "]",
                          "expected a string");
      labels.push_back(ls[i].get<std::string>());
    }
    return EndSpaceDescriptor::points(std::move(labels));
  }
  if (kind == "cantor") {
    auto d = EndSpaceDescriptor::cantor();
    if (j.contains("name")) d.labels = {j["name"].get<std::string>()};
    return d;
  }
  if (kind == "composite") {
    const Json& ps = require_array(j, "parts", path);
    std::vector<EndSpaceDescriptor> parts;
    for (std::size_t i = 0; i < ps.size(); ++i)
      parts.push_back(descriptor_from_json(
          ps[i], path + ".parts[" + std::to_string(i) + "]"));
    return EndSpaceDescriptor::composite(std::move(parts));
  }
  if (kind == "depth_limited")
    return EndSpaceDescriptor::depth_limited(
        require_int(j, "depth", path), require_int(j, "isolated", path),
        require_int(j, "clusters", path));
  throw SchemaError(path + ".kind", "unknown descriptor kind '" + kind + "'");
}

}  // namespace

Json to_json(const ClassifyingTriple& t) {
  Json j;
  switch (t.genus.tag) {
    case Genus::Tag::Finite: j["genus"] = t.genus.value; break;
    case Genus::Tag::Infinite: j["genus"] = "inf"; break;
    case Genus::Tag::AtLeast:
      j["genus"] = ">=" + std::to_string(t.genus.value);
      break;
  }
  j["ends"] = descriptor_to_json(t.ends);
  j["ends_accumulated"] = descriptor_to_json(t.ends_accumulated);
  return j;
}

ClassifyingTriple triple_from_json(const Json& j) {
  const std::string path = "$";
  ClassifyingTriple t;
  const Json& g = require(j, "genus", path);
  if (g.is_number_integer()) {
    t.genus = Genus::finite(g.get<long>());
  } else if (g.is_string()) {
    std::string s = g.get<std::string>();
    if (s == "inf")
      t.genus = Genus::infinite();
    else if (s.rfind(">=", 0) == 0)
      t.genus = Genus::at_least(std::stol(s.substr(2)));
    else
      throw SchemaError(path + ".genus", "expected an integer, 'inf' or '>=n'");
  } else {
    throw SchemaError(path + ".genus", "expected an integer or a string");
  }
  t.ends = descriptor_from_json(require(j, "ends", path), path + ".ends");
  t.ends_accumulated = descriptor_from_json(
      require(j, "ends_accumulated", path), path + ".ends_accumulated");
  return t;
}

// --- forest/1 ----------------------------------------------------------------

Json to_json(const ForestOfCodingTrees& f) {
  Json j;
  j["format"] = "forest/1";
  j["floors"] = f.forest.floors;
  Json edges = Json::array();
  for (std::size_t e = 0; e < f.forest.edges.size(); ++e)
    edges.push_back({{"from", f.forest.edges[e].first},
                     {"to", f.forest.edges[e].second},
                     {"vertex_map", f.inclusion_at[e].vertex_map}});
  j["edges"] = std::move(edges);
  Json trees = Json::array();
  for (const auto& t : f.tree_at) trees.push_back(to_json(t));
  j["trees"] = std::move(trees);
  Json sources = Json::array();
  for (const auto& [root, tree] : f.ray_source) {
    Json s;
    s["root"] = root;
    s["tree"] = to_json(tree);
    auto label = f.ray_label.find(root);
    if (label != f.ray_label.end()) s["label"] = label->second;
    sources.push_back(std::move(s));
  }
  j["ray_sources"] = std::move(sources);
  return j;
}

ForestOfCodingTrees forest_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "forest/1", path);
  ForestOfCodingTrees f;
  const Json& floors = require_array(j, "floors", path);
  for (std::size_t i = 0; i < floors.size(); ++i) {
    f.forest.floors.push_back(
        int_array(floors[i], path + ".floors[" + std::to_string(i) + "]"));
  }
  const Json& edges = require_array(j, "edges", path);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string epath = path + ".edges[" + std::to_string(e) + "]";
    f.forest.edges.emplace_back(require_int(edges[e], "from", epath),
                                require_int(edges[e], "to", epath));
    f.inclusion_at.push_back(
        {int_array(require_array(edges[e], "vertex_map", epath),
                   epath + ".vertex_map")});
  }
  const Json& trees = require_array(j, "trees", path);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    try {
      f.tree_at.push_back(coding_tree_from_json(trees[i]));
    } catch (const SchemaError& e) {
      throw SchemaError(path + ".trees[" + std::to_string(i) + "]" +
                            e.path.substr(1),
                        "invalid coding tree");
    }
  }
  if (j.contains("ray_sources")) {
    const Json& sources = j["ray_sources"];
    if (!sources.is_array())
      throw SchemaError(path + ".ray_sources", "expected an array");
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const std::string spath =
          path + ".ray_sources[" + std::to_string(i) + "]";
      int root = require_int(sources[i], "root", spath);
      f.ray_source.emplace(root,
                           coding_tree_from_json(require(sources[i], "tree",
                                                         spath)));
      if (sources[i].contains("label")) {
        if (!sources[i]["label"].is_string())
          throw SchemaError(spath + ".label", "expected a string");
        f.ray_label.emplace(root, sources[i]["label"].get<std::string>());
      }
    }
  }
  return f;
}

// --- cover/1 ------------------------------------------------------------------

Json to_json(const PermCover& c) {
  Json j;
  j["format"] = "cover/1";
  j["degree"] = c.degree;
  j["alphabet"] = c.alphabet;
  Json mono = Json::object();
  for (const auto& [gen, perm] : c.monodromy)
    mono[gen] = perm.cycle_string();
  j["monodromy"] = std::move(mono);
  return j;
}

PermCover cover_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "cover/1", path);
  int degree = require_int(j, "degree", path);
  const Json& alpha = require_array(j, "alphabet", path);
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i].is_string())
      throw SchemaError(path + ".alphabet[" + std::to_string(i) + "]",
                        "expected a string");
    alphabet.push_back(alpha[i].get<std::string>());
  }
  const Json& mono = require(j, "monodromy", path);
  if (!mono.is_object())
    throw SchemaError(path + ".monodromy", "expected an object");
  std::map<std::string, Permutation> monodromy;
  for (const auto& gen : alphabet) {
    auto it = mono.find(gen);
    if (it == mono.end())
      throw SchemaError(path + ".monodromy." + gen, "missing");
    if (!it->is_string())
      throw SchemaError(path + ".monodromy." + gen,
                        "expected cycle notation");
    auto p = Permutation::parse_cycles(degree, it->get<std::string>());
    if (!p)
      throw SchemaError(path + ".monodromy." + gen,
                        "bad cycle notation '" + it->get<std::string>() + "'");
    monodromy.emplace(gen, *p);
  }
  try {
    return make_cover(degree, std::move(alphabet), std::move(monodromy));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
}

// --- gluing/1 -----------------------------------------------------------------

Json to_json(const GluingPresentation& p) {
  Json j;
  j["format"] = "gluing/1";
  Json pieces = Json::array();
  for (const auto& piece : p.pieces) {
    Json pj;
    pj["name"] = piece.name;
    pj["connected"] = piece.connected;
    pj["stays_connected_when_cut"] = piece.stays_connected_when_cut;
    Json circles = Json::array();
    for (const auto& c : piece.circles)
      circles.push_back({{"side", c.side > 0 ? "+" : "-"},
                         {"degree", c.degree},
                         {"label", c.label}});
    pj["circles"] = std::move(circles);
    if (piece.certificate) {
      const auto& t = *piece.certificate;
      pj["tube_certificate"] = {{"k", t.k},
                                {"unique_short_lift", t.unique_short_lift},
                                {"collar_width_lb", t.collar_width_lb},
                                {"genus_lb", t.genus_lb}};
    }
    pieces.push_back(std::move(pj));
  }
  j["pieces"] = std::move(pieces);
  Json gluing = Json::array();
  for (const auto& g : p.gluing)
    gluing.push_back({{"plus", Json::array({g.plus.piece, g.plus.circle})},
                      {"minus", Json::array({g.minus.piece, g.minus.circle})}});
  j["gluing"] = std::move(gluing);
  j["distinguished"] = p.distinguished;
  return j;
}

GluingPresentation gluing_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "gluing/1", path);
  GluingPresentation p;
  const Json& pieces = require_array(j, "pieces", path);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string ppath = path + ".pieces[" + std::to_string(i) + "]";
    GluingPiece piece;
    piece.name = require_string(pieces[i], "name", ppath);
    piece.connected = require_bool(pieces[i], "connected", ppath);
    piece.stays_connected_when_cut =
        require_bool(pieces[i], "stays_connected_when_cut", ppath);
    const Json& circles = require_array(pieces[i], "circles", ppath);
    for (std::size_t c = 0; c < circles.size(); ++c) {
      const std::string cpath = ppath + ".circles[" + std::to_string(c) + "]";
      GluingCircle circle;
      std::string side = require_string(circles[c], "side", cpath);
      if (side != "+" && side != "-")
        throw SchemaError(cpath + ".side", "expected '+' or '-'");
      circle.side = side == "+" ? +1 : -1;
      circle.degree = require_int(circles[c], "degree", cpath);
      if (circle.degree < 1)
        throw SchemaError(cpath + ".degree", "degree must be >= 1");
      circle.label = require_string(circles[c], "label", cpath);
      piece.circles.push_back(std::move(circle));
    }
    if (pieces[i].contains("tube_certificate")) {
      const Json& tj = pieces[i]["tube_certificate"];
      const std::string tpath = ppath + ".tube_certificate";
      TubeCertificate cert;
      cert.k = require_double(tj, "k", tpath);
      cert.unique_short_lift = require_bool(tj, "unique_short_lift", tpath);
      cert.collar_width_lb = require_double(tj, "collar_width_lb", tpath);
      cert.genus_lb = require_int(tj, "genus_lb", tpath);
      piece.certificate = cert;
    }
    p.pieces.push_back(std::move(piece));
  }
  const Json& gluing = require_array(j, "gluing", path);
  for (std::size_t e = 0; e < gluing.size(); ++e) {
    const std::string epath = path + ".gluing[" + std::to_string(e) + "]";
    const Json& plus = require_array(gluing[e], "plus", epath);
    const Json& minus = require_array(gluing[e], "minus", epath);
    if (plus.size() != 2 || minus.size() != 2)
      throw SchemaError(epath, "expected [piece, circle] pairs");
    p.gluing.push_back({{plus[0].get<int>(), plus[1].get<int>()},
                        {minus[0].get<int>(), minus[1].get<int>()}});
  }
  if (j.contains("distinguished"))
    p.distinguished = int_array(j["distinguished"], path + ".distinguished");
  return p;
}

// --- cert/1 -------------------------------------------------------------------

Json to_json(const Bound& b) {
  Json j;
  j["format"] = "cert/1";
  j["quantity"] = quantity_name(b.quantity);
  j["value"] = b.value;
  j["strict"] = b.strict;
  Json premises = Json::array();
  for (const auto& p : b.premises)
    premises.push_back(
        {{"rule", p.rule}, {"detail", p.detail}, {"holds", p.holds}});
  j["premises"] = std::move(premises);
  return j;
}

Bound bound_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "cert/1", path);
  Bound b;
  std::string q = require_string(j, "quantity", path);
  bool found = false;
  for (Quantity quantity :
       {Quantity::InternalSystole, Quantity::HalfCollarWidth,
        Quantity::InjectivityRadius, Quantity::BoundaryLength,
        Quantity::Genus})
    if (q == quantity_name(quantity)) {
      b.quantity = quantity;
      found = true;
    }
  if (!found) throw SchemaError(path + ".quantity", "unknown quantity");
  b.value = require_double(j, "value", path);
  b.strict = require_bool(j, "strict", path);
  const Json& premises = require_array(j, "premises", path);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const std::string ppath = path + ".premises[" + std::to_string(i) + "]";
    Premise pr;
    pr.rule = require_string(premises[i], "rule", ppath);
    pr.detail = require_string(premises[i], "detail", ppath);
    pr.holds = require_bool(premises[i], "holds", ppath);
    b.premises.push_back(std::move(pr));
  }
  return b;
}

// --- tower/1 ------------------------------------------------------------------

namespace {

Json bound_body(const Bound& b) {
  Json j = to_json(b);
  j.erase("format");
  return j;
}

Bound bound_from_body(Json j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  j["format"] = "cert/1";
  try {
    return bound_from_json(j);
  } catch (const SchemaError& e) {
    throw SchemaError(path + e.path.substr(1), "invalid bound");
  }
}

}  // namespace

Json to_json(const TowerPlan& p) {
  Json j;
  j["format"] = "tower/1";
  j["forest"] = to_json(p.forest);
  Json levels = Json::array();
  for (const auto& lvl : p.levels) {
    Json lj;
    lj["floor"] = lvl.floor;
    lj["marked_vertices"] = lvl.marked_vertices;
    lj["complement_systole"] = bound_body(lvl.complement_systole);
    lj["complement_collar"] = bound_body(lvl.complement_collar);
    lj["star_systole"] = bound_body(lvl.star_systole);
    lj["star_vertices"] = lvl.star_vertices;
    Json parts = Json::array();
    for (const auto& part : lvl.star_parts)
      parts.push_back({{"id", part.id},
                       {"internal_systole", part.internal_systole},
                       {"systole_strict", part.systole_strict},
                       {"collar_widths", part.collar_widths},
                       {"boundary_lengths", part.boundary_lengths},
                       {"bounds_strict", part.bounds_strict}});
    lj["star_parts"] = std::move(parts);
    Json lifts = Json::array();
    for (const auto& lift : lvl.lift_maps)
      lifts.push_back({{"edge", lift.edge},
                       {"vertex_map", lift.inclusion.vertex_map},
                       {"projects_to_identity", lift.projects_to_identity}});
    lj["lift_maps"] = std::move(lifts);
    lj["genus_reserved"] = lvl.genus_reserved;
    levels.push_back(std::move(lj));
  }
  j["levels"] = std::move(levels);
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json sj;
    sj["kind"] = step_kind_name(s.kind);
    sj["level"] = s.level;
    switch (s.kind) {
      case PlanStep::Kind::AttachTube:
        sj["boundary_id"] = s.boundary_id;
        sj["tube_param"] = s.tube_param;
        if (s.tube_certificate) {
          const auto& t = *s.tube_certificate;
          sj["tube_certificate"] = {{"k", t.k},
                                    {"unique_short_lift", t.unique_short_lift},
                                    {"collar_width_lb", t.collar_width_lb},
                                    {"genus_lb", t.genus_lb}};
        }
        break;
      case PlanStep::Kind::CarveSubsurface:
        sj["vertex"] = s.vertex;
        sj["room_spec"] = s.room_spec;
        break;
      case PlanStep::Kind::SecondCoveringPass:
        sj["k"] = s.k;
        break;
    }
    sj["justification"] = s.justification;
    steps.push_back(std::move(sj));
  }
  j["steps"] = std::move(steps);
  return j;
}

TowerPlan tower_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "tower/1", path);
  TowerPlan p;
  p.forest = forest_from_json(require(j, "forest", path));
  const Json& levels = require_array(j, "levels", path);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string lpath = path + ".levels[" + std::to_string(i) + "]";
    TowerLevel lvl;
    lvl.floor = require_int(levels[i], "floor", lpath);
    lvl.marked_vertices =
        int_array(require_array(levels[i], "marked_vertices", lpath),
                  lpath + ".marked_vertices");
    lvl.complement_systole =
        bound_from_body(require(levels[i], "complement_systole", lpath),
                        lpath + ".complement_systole");
    lvl.complement_collar =
        bound_from_body(require(levels[i], "complement_collar", lpath),
                        lpath + ".complement_collar");
    lvl.star_systole = bound_from_body(
        require(levels[i], "star_systole", lpath), lpath + ".star_systole");
    lvl.star_vertices =
        int_array(require_array(levels[i], "star_vertices", lpath),
                  lpath + ".star_vertices");
    const Json& parts = require_array(levels[i], "star_parts", lpath);
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const std::string ppath =
          lpath + ".star_parts[" + std::to_string(k) + "]";
      GluePart part;
      part.id = require_string(parts[k], "id", ppath);
      part.internal_systole = require_double(parts[k], "internal_systole",
                                             ppath);
      part.systole_strict = require_bool(parts[k], "systole_strict", ppath);
      part.collar_widths =
          double_array(require_array(parts[k], "collar_widths", ppath),
                       ppath + ".collar_widths");
      part.boundary_lengths =
          double_array(require_array(parts[k], "boundary_lengths", ppath),
                       ppath + ".boundary_lengths");
      part.bounds_strict = require_bool(parts[k], "bounds_strict", ppath);
      lvl.star_parts.push_back(std::move(part));
    }
    const Json& lifts = require_array(levels[i], "lift_maps", lpath);
    for (std::size_t k = 0; k < lifts.size(); ++k) {
      const std::string mpath = lpath + ".lift_maps[" + std::to_string(k) + "]";
      LiftMap lift;
      lift.edge = require_int(lifts[k], "edge", mpath);
      lift.inclusion.vertex_map =
          int_array(require_array(lifts[k], "vertex_map", mpath),
                    mpath + ".vertex_map");
      lift.projects_to_identity =
          require_bool(lifts[k], "projects_to_identity", mpath);
      lvl.lift_maps.push_back(std::move(lift));
    }
    lvl.genus_reserved = require_int(levels[i], "genus_reserved", lpath);
    p.levels.push_back(std::move(lvl));
  }
  const Json& steps = require_array(j, "steps", path);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string spath = path + ".steps[" + std::to_string(i) + "]";
    PlanStep s;
    std::string kind = require_string(steps[i], "kind", spath);
    s.level = require_int(steps[i], "level", spath);
    if (kind == "attach_tube") {
      s.kind = PlanStep::Kind::AttachTube;
      s.boundary_id = require_string(steps[i], "boundary_id", spath);
      s.tube_param = require_double(steps[i], "tube_param", spath);
      if (steps[i].contains("tube_certificate")) {
        const Json& tj = steps[i]["tube_certificate"];
        const std::string tpath = spath + ".tube_certificate";
        TubeCertificate cert;
        cert.k = require_double(tj, "k", tpath);
        cert.unique_short_lift = require_bool(tj, "unique_short_lift", tpath);
        cert.collar_width_lb = require_double(tj, "collar_width_lb", tpath);
        cert.genus_lb = require_int(tj, "genus_lb", tpath);
        s.tube_certificate = cert;
      }
    } else if (kind == "carve_subsurface") {
      s.kind = PlanStep::Kind::CarveSubsurface;
      s.vertex = require_int(steps[i], "vertex", spath);
      s.room_spec = require_string(steps[i], "room_spec", spath);
    } else if (kind == "second_covering_pass") {
      s.kind = PlanStep::Kind::SecondCoveringPass;
      s.k = require_double(steps[i], "k", spath);
    } else {
      throw SchemaError(spath + ".kind", "unknown step kind '" + kind + "'");
    }
    s.justification = string_array(
        require_array(steps[i], "justification", spath),
        spath + ".justification");
    p.steps.push_back(std::move(s));
  }
  return p;
}

// --- census/1 -----------------------------------------------------------------

Json to_json(const LeafCensus& c) {
  Json j;
  j["format"] = "census/1";
  Json marked = Json::array();
  for (const auto& e : c.marked) {
    Json ej;
    ej["end"] = e.end_id;
    ej["triple"] = to_json(e.triple);
    ej["resolved"] = e.resolved;
    ej["notes"] = e.notes;
    marked.push_back(std::move(ej));
  }
  j["marked"] = std::move(marked);
  j["generic"] = c.generic;
  j["distinct_leaves"] = c.distinct_leaves;
  return j;
}

LeafCensus census_from_json(const Json& j) {
  const std::string path = "$";
  check_format(j, "census/1", path);
  LeafCensus c;
  const Json& marked = require_array(j, "marked", path);
  for (std::size_t i = 0; i < marked.size(); ++i) {
    const std::string epath = path + ".marked[" + std::to_string(i) + "]";
    LeafCensusEntry e;
    e.end_id = require_string(marked[i], "end", epath);
    e.triple = triple_from_json(require(marked[i], "triple", epath));
    e.resolved = require_bool(marked[i], "resolved", epath);
    e.notes = string_array(require_array(marked[i], "notes", epath),
                           epath + ".notes");
    c.marked.push_back(std::move(e));
  }
  c.generic = require_string(j, "generic", path);
  c.distinct_leaves = require_bool(j, "distinct_leaves", path);
  return c;
}

}  // namespace lamina
