#pragma once

// Shared fixtures, random generators and independent oracles. Oracles here
// deliberately avoid the library code paths they are used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lamina/coding_tree.hpp"
#include "lamina/gluing.hpp"

namespace testing_support {

using lamina::CodingTree;
using lamina::RationalBase;
using lamina::VertexKind;

// --- fixtures ---------------------------------------------------------------

inline CodingTree pants_tree() {
  return CodingTree::finite(
      {VertexKind::Simple, VertexKind::Boundary, VertexKind::Boundary,
       VertexKind::Boundary},
      {{0, 1}, {0, 2}, {0, 3}}, 0);
}

inline CodingTree one_handle_tree() {  // valency-1 root and one leaf
  return CodingTree::finite({VertexKind::Simple, VertexKind::Boundary},
                            {{0, 1}}, 0);
}

// root - b - s - b - s ... with k handle pieces in a row, one boundary leaf
inline CodingTree chain_tree(int k) {
  std::vector<VertexKind> kinds;
  std::vector<std::pair<int, int>> edges;
  kinds.push_back(VertexKind::Simple);
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    if (i > 0) {
      kinds.push_back(VertexKind::Simple);
      edges.emplace_back(prev, static_cast<int>(kinds.size()) - 1);
      prev = static_cast<int>(kinds.size()) - 1;
    }
    kinds.push_back(VertexKind::Boundary);
    edges.emplace_back(prev, static_cast<int>(kinds.size()) - 1);
    prev = static_cast<int>(kinds.size()) - 1;
  }
  return CodingTree::finite(std::move(kinds), edges, 0);
}

// single ray of valency-two handle pieces: one end, infinite genus
inline CodingTree loch_ness_tree() {
  RationalBase base;
  base.nodes = {{VertexKind::Simple, {1}},
                {VertexKind::Boundary, {2}},
                {VertexKind::Simple, {1}}};
  base.root = 0;
  return CodingTree::rational(base);
}

// all three root branches recurse binarily: Cantor set of ends, no genus
inline CodingTree cantor_pants_tree() {
  RationalBase base;
  base.nodes = {{VertexKind::Simple, {1, 1, 1}},
                {VertexKind::Boundary, {2}},
                {VertexKind::Simple, {1, 1}}};
  base.root = 0;
  return CodingTree::rational(base);
}

// one root branch is a leaf, two recurse: one funnel end plus a Cantor set
inline CodingTree binary_pants_tree() {
  RationalBase base;
  base.nodes = {{VertexKind::Simple, {1, 2, 2}},
                {VertexKind::Boundary, {}},
                {VertexKind::Boundary, {3}},
                {VertexKind::Simple, {2, 2}}};
  base.root = 0;
  return CodingTree::rational(base);
}

// --- random coding trees ------------------------------------------------------

inline CodingTree random_coding_tree(std::mt19937& rng, int max_pieces) {
  std::vector<VertexKind> kinds{VertexKind::Simple};
  std::vector<std::pair<int, int>> edges;
  std::vector<int> frontier;  // boundary vertices that may still sprout
  int budget = std::uniform_int_distribution<int>(1, max_pieces)(rng);

  auto add_boundary = [&](int parent) {
    kinds.push_back(VertexKind::Boundary);
    int id = static_cast<int>(kinds.size()) - 1;
    edges.emplace_back(parent, id);
    frontier.push_back(id);
  };
  int root_valency = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < root_valency; ++i) add_boundary(0);
  int pieces = 1;
  while (pieces < budget && !frontier.empty()) {
    int slot = std::uniform_int_distribution<int>(
        0, static_cast<int>(frontier.size()) - 1)(rng);
    int b = frontier[slot];
    frontier.erase(frontier.begin() + slot);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;  // leaf
    kinds.push_back(VertexKind::Simple);
    int s = static_cast<int>(kinds.size()) - 1;
    edges.emplace_back(b, s);
    ++pieces;
    int children = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < children; ++i) add_boundary(s);
  }
  return CodingTree::finite(std::move(kinds), edges, 0);
}

inline CodingTree relabel(const CodingTree& t, std::mt19937& rng) {
  int n = t.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<VertexKind> kinds(n, VertexKind::Simple);
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    kinds[perm[v]] = t.kind(v);
    for (int w : t.neighbors(v))
      if (v < w) edges.emplace_back(perm[v], perm[w]);
  }
  return CodingTree::finite(std::move(kinds), edges, perm[t.root()]);
}

// --- independent oracles -------------------------------------------------------

// Rooted kind-preserving isomorphism by brute-force matching of children,
// independent of canonical codes.
inline bool brute_force_iso(const CodingTree& a, int va, int pa,
                            const CodingTree& b, int vb, int pb) {
  if (a.kind(va) != b.kind(vb)) return false;
  std::vector<int> ca, cb;
  for (int w : a.neighbors(va))
    if (w != pa) ca.push_back(w);
  for (int w : b.neighbors(vb))
    if (w != pb) cb.push_back(w);
  if (ca.size() != cb.size()) return false;
  std::vector<int> idx(cb.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end());
  do {
    bool all = true;
    for (std::size_t i = 0; i < ca.size() && all; ++i)
      if (!brute_force_iso(a, ca[i], va, b, cb[idx[i]], vb)) all = false;
    if (all) return true;
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

inline bool brute_force_iso(const CodingTree& a, const CodingTree& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  return brute_force_iso(a, a.root(), -1, b, b.root(), -1);
}

// Test-side enumeration of all valid coding trees up to isomorphism, by
// simple-piece budget; written independently of the library enumerator.
struct OracleTree {
  std::vector<VertexKind> kinds;
  std::vector<std::pair<int, int>> edges;
};

// subtrees rooted at a boundary vertex using at most `pieces` simple pieces
inline std::vector<OracleTree> oracle_boundary_subtrees(int pieces) {
  std::vector<OracleTree> out;
  out.push_back({{VertexKind::Boundary}, {}});  // bare leaf
  if (pieces < 1) return out;
  for (int arity = 1; arity <= 2; ++arity) {
    // distribute remaining budget over `arity` ordered slots, then dedupe
    std::vector<std::vector<OracleTree>> slot_choices;
    if (arity == 1) {
      auto subs = oracle_boundary_subtrees(pieces - 1);
      for (auto& s : subs) slot_choices.push_back({s});
    } else {
      for (int left = 0; left <= pieces - 1; ++left) {
        auto ls = oracle_boundary_subtrees(left);
        auto rs = oracle_boundary_subtrees(pieces - 1 - left);
        for (auto& l : ls)
          for (auto& r : rs) slot_choices.push_back({l, r});
      }
    }
    for (auto& parts : slot_choices) {
      OracleTree t;
      t.kinds = {VertexKind::Boundary, VertexKind::Simple};
      t.edges = {{0, 1}};
      for (auto& part : parts) {
        int off = static_cast<int>(t.kinds.size());
        for (auto k : part.kinds) t.kinds.push_back(k);
        t.edges.emplace_back(1, off);
        for (auto [x, y] : part.edges)
          t.edges.emplace_back(x + off, y + off);
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

inline std::vector<CodingTree> oracle_all_trees(int max_pieces) {
  std::vector<CodingTree> all;
  for (int arity = 1; arity <= 3; ++arity) {
    std::vector<std::vector<OracleTree>> combos;
    std::function<void(int, int, std::vector<OracleTree>&)> rec =
        [&](int slots, int budget, std::vector<OracleTree>& acc) {
          if (slots == 0) {
            combos.push_back(acc);
            return;
          }
          for (int take = 0; take <= budget; ++take)
            for (auto& s : oracle_boundary_subtrees(take)) {
              acc.push_back(s);
              rec(slots - 1, budget - take, acc);
              acc.pop_back();
            }
        };
    std::vector<OracleTree> acc;
    rec(arity, max_pieces - 1, acc);
    for (auto& parts : combos) {
      std::vector<VertexKind> kinds{VertexKind::Simple};
      std::vector<std::pair<int, int>> edges;
      for (auto& part : parts) {
        int off = static_cast<int>(kinds.size());
        for (auto k : part.kinds) kinds.push_back(k);
        edges.emplace_back(0, off);
        for (auto [x, y] : part.edges) edges.emplace_back(x + off, y + off);
      }
      all.push_back(CodingTree::finite(std::move(kinds), edges, 0));
    }
  }
  // reduce to isomorphism classes with the brute-force matcher
  std::vector<CodingTree> classes;
  for (auto& t : all) {
    bool seen = false;
    for (auto& c : classes)
      if (brute_force_iso(t, c)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(t);
  }
  return classes;
}

// high-precision hyperbolic cosine, used against std::cosh
inline long double cosh_oracle(long double x) {
  return (std::exp(static_cast<long double>(x)) +
          std::exp(static_cast<long double>(-x))) /
         2.0L;
}

// --- random gluing presentations ------------------------------------------------

inline lamina::GluingPresentation random_presentation(std::mt19937& rng,
                                                      bool flag_self_pair) {
  using namespace lamina;
  GluingPresentation p;
  int npieces = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int i = 0; i < npieces; ++i) {
    GluingPiece piece;
    piece.name = "p" + std::to_string(i);
    piece.connected = true;
    piece.stays_connected_when_cut =
        std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    p.pieces.push_back(std::move(piece));
  }
  auto add_pair = [&](int plus_piece, int minus_piece, int degree) {
    p.pieces[plus_piece].circles.push_back({+1, degree, "c+"});
    int pi = static_cast<int>(p.pieces[plus_piece].circles.size()) - 1;
    p.pieces[minus_piece].circles.push_back({-1, degree, "c-"});
    int mi = static_cast<int>(p.pieces[minus_piece].circles.size()) - 1;
    p.gluing.push_back({{plus_piece, pi}, {minus_piece, mi}});
  };
  if (flag_self_pair) {
    // pair 0: a degree-1 self-gluing on a piece carrying the flag
    p.pieces[0].stays_connected_when_cut = true;
    add_pair(0, 0, 1);
  } else {
    add_pair(std::uniform_int_distribution<int>(0, npieces - 1)(rng),
             std::uniform_int_distribution<int>(0, npieces - 1)(rng), 1);
  }
  // chain the pieces so the presentation is connected
  for (int i = 1; i < npieces; ++i) add_pair(i - 1, i, 1);
  int extra = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < extra; ++i)
    add_pair(std::uniform_int_distribution<int>(0, npieces - 1)(rng),
             std::uniform_int_distribution<int>(0, npieces - 1)(rng),
             std::uniform_int_distribution<int>(1, 3)(rng));
  return p;
}

}  // namespace testing_support
