#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lamina/validation.hpp"

namespace lamina {

enum class VertexKind { Simple, Boundary };

inline const char* kind_name(VertexKind k) {
  return k == VertexKind::Simple ? "simple" : "boundary";
}

/// Finite base graph whose unfolding describes an infinite coding tree.
/// Node `root` is the root occurrence; every walk from it spells one vertex
/// of the unfolded tree.
struct RationalBase {
  struct Node {
    VertexKind kind;
    std::vector<int> children;  // base node ids
    bool operator==(const Node&) const = default;
  };
  std::vector<Node> nodes;
  int root = 0;
  bool operator==(const RationalBase&) const = default;
};

/// Rooted tree with alternating simple/boundary vertices encoding an
/// orientable surface built from one-holed tori, two-holed tori and pants.
///
/// Presentations:
///  - ExplicitFinite: the stored graph is the whole tree.
///  - Rational: a finite base graph; the stored graph is empty, use ball().
///  - DepthLimited: the stored graph is exact only up to known_radius().
class CodingTree {
 public:
  enum class Presentation { ExplicitFinite, Rational, DepthLimited };

  CodingTree() = default;

  static CodingTree finite(std::vector<VertexKind> kinds,
                           const std::vector<std::pair<int, int>>& edges,
                           int root);
  static CodingTree rational(RationalBase base);
  /// Marks `ball` as a radius-`radius` approximation of an unknown tree.
  static CodingTree depth_limited(const CodingTree& ball, int radius);

  Presentation presentation() const { return pres_; }
  bool is_finite() const { return pres_ == Presentation::ExplicitFinite; }
  bool is_rational() const { return pres_ == Presentation::Rational; }

  int vertex_count() const { return static_cast<int>(kinds_.size()); }
  VertexKind kind(int v) const { return kinds_[v]; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int valency(int v) const { return static_cast<int>(adj_[v].size()); }
  int root() const { return root_; }
  int known_radius() const { return known_radius_; }
  const RationalBase* base() const { return base_ ? &*base_ : nullptr; }

  /// Distances from the root, explicit part.
  std::vector<int> depths() const;
  int depth_of(int v) const;
  /// Depth of the explicit part.
  int depth() const;

  /// Ball of the given radius about the root, as an explicit finite tree
  /// with vertices relabelled in breadth-first order. Rational trees are
  /// unfolded; depth-limited trees reject radii beyond the known radius.
  CodingTree ball(int radius) const;

  bool operator==(const CodingTree&) const = default;

 private:
  std::vector<VertexKind> kinds_;
  std::vector<std::vector<int>> adj_;
  int root_ = 0;
  Presentation pres_ = Presentation::ExplicitFinite;
  std::optional<RationalBase> base_;
  int known_radius_ = -1;
};

struct CompactSurfaceSignature {
  int genus = 0;
  int boundary_count = 0;
  int euler_characteristic = 0;
  bool operator==(const CompactSurfaceSignature&) const = default;
};

/// Checks every coding-tree axiom and lists each violation with the
/// offending vertices. Structural damage (cycles, disconnection) is
/// reported, never thrown.
ValidationReport validate_coding_tree(const CodingTree& t);

/// Signature of the compact surface encoded by a finite tree.
/// Throws std::invalid_argument("finite tree required") otherwise.
CompactSurfaceSignature surface_of(const CodingTree& t);

/// Ball of radius 2n+1 about the root; always a valid coding tree.
CodingTree truncate(const CodingTree& t, int n);

/// Deterministic code equal for two finite trees iff they are isomorphic
/// as rooted, kind-labelled trees.
std::string canonical_form(const CodingTree& t);

/// Same tree with vertices renumbered into a canonical order (children
/// sorted by subtree code, ties kept stable).
CodingTree canonical_relabel(const CodingTree& t);

/// Injective vertex map src -> dst preserving root, kinds and adjacency,
/// whose image meets the rest of dst only at boundary vertices.
struct GoodTreeInclusion {
  std::vector<int> vertex_map;  // indexed by src vertex
  bool operator==(const GoodTreeInclusion&) const = default;
};

bool is_good_inclusion(const CodingTree& src, const CodingTree& dst,
                       const GoodTreeInclusion& inc);

enum class SearchStatus { Found, NotFound, Undecidable };

struct InclusionSearchResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<GoodTreeInclusion> witness;
  std::string note;
};

/// Searches for a good inclusion of src into dst. The witness is the
/// lexicographically least vertex map over the search order. A
/// depth-limited dst that is too shallow yields Undecidable, never a
/// false NotFound. Rational dst is unfolded as far as needed.
InclusionSearchResult find_good_inclusion(const CodingTree& src,
                                          const CodingTree& dst);

/// All valid coding trees with depth <= max_depth (and, if max_pieces >= 0,
/// at most that many simple vertices), one canonical representative per
/// isomorphism class, sorted by canonical code.
std::vector<CodingTree> enumerate_coding_trees(int max_depth,
                                               int max_pieces = -1);

}  // namespace lamina
