#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lamina/end_space.hpp"

using namespace lamina;
using namespace testing_support;

TEST_CASE("one ray of handles: one end accumulated by genus") {
  auto triple = classify_limit(loch_ness_tree());
  CHECK(triple.genus.is_infinite());
  auto ends = normal_shape(triple.ends);
  CHECK(ends.isolated == 1);
  CHECK_FALSE(ends.cantor);
  CHECK_FALSE(triple.ends_accumulated.empty());
  CHECK(validate_triple(triple).ok());
}

TEST_CASE("branching pants everywhere: Cantor ends, no genus") {
  auto t = cantor_pants_tree();
  // unfolding oracle: frontier clusters double every two levels and the
  // truncations never acquire genus
  int previous = 0;
  for (int n = 1; n <= 4; ++n) {
    auto ball = truncate(t, n);
    auto sig = surface_of(ball);
    CHECK(sig.genus == 0);
    CHECK(sig.boundary_count > previous);
    previous = sig.boundary_count;
  }
  auto triple = classify_limit(t);
  CHECK(triple.genus == Genus::finite(0));
  CHECK(triple.ends.kind == EndSpaceDescriptor::Kind::CantorBlock);
  auto shape = normal_shape(triple.ends);
  CHECK(shape.cantor);
  CHECK(shape.isolated == 0);
  CHECK(triple.ends_accumulated.empty());
  CHECK(validate_triple(triple).ok());
}

TEST_CASE("a finite tree classifies as the interior of its surface") {
  auto triple = classify_limit(one_handle_tree());
  CHECK(triple.genus == Genus::finite(1));
  CHECK(normal_shape(triple.ends).isolated == 1);
  CHECK(triple.ends_accumulated.empty());
}

TEST_CASE("interior genus and end count match the compact signature") {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    auto t = random_coding_tree(rng, 14);
    auto sig = surface_of(t);
    auto triple = classify_limit(t);
    CHECK(triple.genus == Genus::finite(sig.genus));
    CHECK(normal_shape(triple.ends).isolated == sig.boundary_count);
    CHECK(validate_triple(triple).ok());
  }
}

TEST_CASE("mixed root: funnel end next to a Cantor block") {
  auto triple = classify_limit(binary_pants_tree());
  CHECK(triple.genus == Genus::finite(0));
  auto shape = normal_shape(triple.ends);
  CHECK(shape.isolated == 1);
  CHECK(shape.cantor);
  CHECK(triple.ends_accumulated.empty());
}

TEST_CASE("funnels and an accumulated ray coexist in one triple") {
  // pants dropping one funnel, then an infinite handle ray: two ends,
  // exactly one of them accumulated by genus
  RationalBase base;
  base.nodes = {{VertexKind::Simple, {1}},      // root
                {VertexKind::Boundary, {2}},
                {VertexKind::Simple, {3, 4}},   // pants
                {VertexKind::Boundary, {}},     // funnel circle
                {VertexKind::Boundary, {5}},
                {VertexKind::Simple, {4}}};     // handle cycle
  base.root = 0;
  auto t = CodingTree::rational(base);
  REQUIRE(validate_coding_tree(t).ok());
  auto triple = classify_limit(t);
  CHECK(triple.genus.is_infinite());
  auto ends = normal_shape(triple.ends);
  CHECK(ends.isolated == 2);
  CHECK_FALSE(ends.cantor);
  auto acc = normal_shape(triple.ends_accumulated);
  CHECK(acc.isolated == 1);
  CHECK(validate_triple(triple).ok());
  // funnel ends are never accumulated: the accumulated point is the ray
  CHECK(triples_equivalent(triple, triple).result == TripleMatch::Yes);
}

TEST_CASE("end labels are compared by count, not by name") {
  ClassifyingTriple a{Genus::finite(1), EndSpaceDescriptor::points({"e"}),
                      EndSpaceDescriptor::points({})};
  ClassifyingTriple b{Genus::finite(1), EndSpaceDescriptor::points({"e'"}),
                      EndSpaceDescriptor::points({})};
  CHECK(triples_equivalent(a, b).result == TripleMatch::Yes);
}

TEST_CASE("different accumulated end counts distinguish triples") {
  ClassifyingTriple a{Genus::infinite(), EndSpaceDescriptor::points({"e"}),
                      EndSpaceDescriptor::points({"e"})};
  ClassifyingTriple b{Genus::infinite(),
                      EndSpaceDescriptor::points({"e1", "e2"}),
                      EndSpaceDescriptor::points({"e1", "e2"})};
  CHECK(triples_equivalent(a, b).result == TripleMatch::No);
}

TEST_CASE("finite genus never matches infinite genus") {
  ClassifyingTriple a{Genus::finite(5), EndSpaceDescriptor::points({"e"}),
                      EndSpaceDescriptor::points({})};
  ClassifyingTriple b{Genus::infinite(), EndSpaceDescriptor::points({"e"}),
                      EndSpaceDescriptor::points({"e"})};
  CHECK(triples_equivalent(a, b).result == TripleMatch::No);
}

TEST_CASE("triples violating the genus-accumulation law are rejected") {
  ClassifyingTriple bad{Genus::finite(2), EndSpaceDescriptor::points({"e"}),
                        EndSpaceDescriptor::points({"e"})};
  ClassifyingTriple good{Genus::finite(2), EndSpaceDescriptor::points({"e"}),
                         EndSpaceDescriptor::points({})};
  CHECK_THROWS_AS((void)triples_equivalent(bad, good), std::invalid_argument);
}

TEST_CASE("equivalence is reflexive and symmetric on the exact fragment") {
  std::mt19937 rng(5);
  std::vector<ClassifyingTriple> triples = {
      classify_limit(loch_ness_tree()), classify_limit(cantor_pants_tree()),
      classify_limit(binary_pants_tree())};
  for (int i = 0; i < 40; ++i)
    triples.push_back(classify_limit(random_coding_tree(rng, 10)));
  for (const auto& a : triples) {
    CHECK(triples_equivalent(a, a).result == TripleMatch::Yes);
    for (const auto& b : triples)
      CHECK(triples_equivalent(a, b).result ==
            triples_equivalent(b, a).result);
  }
}

TEST_CASE("shared base nodes unfold with multiplicity") {
  // both root branches reference the same base subtree; the unfolding
  // duplicates it, so counts must follow walks, not nodes
  RationalBase base;
  base.nodes = {{VertexKind::Simple, {1, 1}},
                {VertexKind::Boundary, {2}},
                {VertexKind::Simple, {3}},
                {VertexKind::Boundary, {}}};
  base.root = 0;
  auto t = CodingTree::rational(base);
  REQUIRE(validate_coding_tree(t).ok());
  auto triple = classify_limit(t);
  // cross-check on the fully unfolded explicit tree
  auto unfolded = t.ball(12);
  auto sig = surface_of(unfolded);
  CHECK(sig.genus == 3);
  CHECK(sig.boundary_count == 2);
  CHECK(triple.genus == Genus::finite(sig.genus));
  CHECK(normal_shape(triple.ends).isolated == sig.boundary_count);
}

TEST_CASE("mixed recurring behaviour falls back to a depth-limited triple") {
  // a branching cycle with a handle ray hanging off it: the end space mixes
  // a Cantor part with rays accumulating on it, outside the exact algebra
  RationalBase base;
  base.nodes = {{VertexKind::Simple, {1, 2}},    // 0: branching piece
                {VertexKind::Boundary, {0}},     // 1: back onto the cycle
                {VertexKind::Boundary, {3}},     // 2: into the handle ray
                {VertexKind::Simple, {2}}};      // 3: handle piece
  base.root = 0;
  auto t = CodingTree::rational(base);
  REQUIRE(validate_coding_tree(t).ok());
  auto triple = classify_limit(t, 6);
  CHECK_FALSE(triple.ends.exact());
  CHECK(triple.ends.kind == EndSpaceDescriptor::Kind::DepthLimited);
  CHECK(triple.ends.depth == 6);
}

TEST_CASE("depth-limited input yields a depth-limited verdict") {
  auto approx = CodingTree::depth_limited(truncate(loch_ness_tree(), 2), 5);
  auto triple = classify_limit(approx);
  CHECK_FALSE(triple.ends.exact());
  CHECK(triple.genus.tag == Genus::Tag::AtLeast);
  auto cmp = triples_equivalent(triple, classify_limit(loch_ness_tree()));
  CHECK(cmp.result == TripleMatch::UnknownBeyondDepth);
  CHECK(cmp.depth == 5);
}

TEST_CASE("observed genus can refute a depth-limited comparison") {
  auto approx = classify_limit(
      CodingTree::depth_limited(truncate(loch_ness_tree(), 3), 7));
  REQUIRE(approx.genus.tag == Genus::Tag::AtLeast);
  REQUIRE(approx.genus.value >= 3);
  ClassifyingTriple small{Genus::finite(1), EndSpaceDescriptor::points({"e"}),
                          EndSpaceDescriptor::points({})};
  CHECK(triples_equivalent(approx, small).result == TripleMatch::No);
}
