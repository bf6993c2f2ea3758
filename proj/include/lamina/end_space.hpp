#pragma once

#include <string>
#include <vector>

#include "lamina/coding_tree.hpp"

namespace lamina {

/// Genus of a possibly noncompact surface. AtLeast carries a lower bound
/// observed on a depth-limited approximation.
struct Genus {
  enum class Tag { Finite, Infinite, AtLeast };
  Tag tag = Tag::Finite;
  long value = 0;

  static Genus finite(long v) { return {Tag::Finite, v}; }
  static Genus infinite() { return {Tag::Infinite, 0}; }
  static Genus at_least(long v) { return {Tag::AtLeast, v}; }
  bool is_infinite() const { return tag == Tag::Infinite; }
  bool exact() const { return tag != Tag::AtLeast; }
  std::string str() const;
  bool operator==(const Genus&) const = default;
};

/// Finite descriptor algebra for the end spaces that arise here: finitely
/// many isolated ends, Cantor blocks, finite disjoint unions of those, and
/// an honest depth-limited fallback which is never reported as exact.
struct EndSpaceDescriptor {
  enum class Kind { FinitePoints, CantorBlock, Composite, DepthLimited };
  Kind kind = Kind::FinitePoints;
  std::vector<std::string> labels;          // FinitePoints
  std::vector<EndSpaceDescriptor> parts;    // Composite
  int depth = -1;                           // DepthLimited
  int observed_isolated = 0;                // DepthLimited approximation
  int observed_clusters = 0;                // unresolved frontier clusters

  static EndSpaceDescriptor points(std::vector<std::string> ls) {
    EndSpaceDescriptor d;
    d.labels = std::move(ls);
    return d;
  }
  static EndSpaceDescriptor points(int count, const std::string& prefix);
  static EndSpaceDescriptor cantor() {
    EndSpaceDescriptor d;
    d.kind = Kind::CantorBlock;
    return d;
  }
  static EndSpaceDescriptor composite(std::vector<EndSpaceDescriptor> ps) {
    EndSpaceDescriptor d;
    d.kind = Kind::Composite;
    d.parts = std::move(ps);
    return d;
  }
  static EndSpaceDescriptor depth_limited(int depth, int isolated,
                                          int clusters) {
    EndSpaceDescriptor d;
    d.kind = Kind::DepthLimited;
    d.depth = depth;
    d.observed_isolated = isolated;
    d.observed_clusters = clusters;
    return d;
  }

  bool exact() const;
  bool empty() const;  // exact and with no points at all
  std::string str() const;
  bool operator==(const EndSpaceDescriptor&) const = default;
};

/// Normal form of an exact descriptor: total isolated-point count plus
/// whether a Cantor block is present. Disjoint unions of these spaces are
/// homeomorphic iff the pairs agree.
struct EndSpaceShape {
  long isolated = 0;
  bool cantor = false;
  bool operator==(const EndSpaceShape&) const = default;
};
EndSpaceShape normal_shape(const EndSpaceDescriptor& d);

/// (genus, end space, ends accumulated by genus); the complete
/// homeomorphism invariant of an orientable surface.
struct ClassifyingTriple {
  Genus genus;
  EndSpaceDescriptor ends;
  EndSpaceDescriptor ends_accumulated;
  std::string str() const;
  bool operator==(const ClassifyingTriple&) const = default;
};

/// Rejects triples breaking the structural invariants (nonempty end space,
/// and g infinite exactly when some end is accumulated by genus).
ValidationReport validate_triple(const ClassifyingTriple& t);

/// Classifying triple of the interior of the surface encoded by `t`.
/// Exact for finite trees and for rational trees whose end behaviour is
/// uniform; otherwise a DepthLimited triple at `fallback_depth`.
ClassifyingTriple classify_limit(const CodingTree& t, int fallback_depth = 8);

enum class TripleMatch { Yes, No, UnknownBeyondDepth };

struct TripleComparison {
  TripleMatch result = TripleMatch::UnknownBeyondDepth;
  int depth = -1;  // depth bounding the comparison when Unknown
};

/// Decides equivalence of classifying triples on the exact fragment.
/// Throws std::invalid_argument on invariant-violating exact triples.
TripleComparison triples_equivalent(const ClassifyingTriple& a,
                                    const ClassifyingTriple& b);

}  // namespace lamina
