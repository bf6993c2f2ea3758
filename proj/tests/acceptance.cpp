// Acceptance suite: every criterion prints one PASS/FAIL line with its
// runtime and the binary exits nonzero if any of them failed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lamina/cover_cases.hpp"
#include "lamina/tower.hpp"

using namespace lamina;
using namespace testing_support;

namespace {

struct Criterion {
  std::string name;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& why, const std::string& msg) {
  if (!cond && why.empty()) why = msg;
  return cond;
}

// 1. every appendix case, every admissible N <= 10
bool criterion_cases(std::string& why) {
  bool ok = true;
  for (int case_id = 1; case_id <= 4; ++case_id) {
    int min_n = case_id <= 2 ? 1 : (case_id == 3 ? 2 : 4);
    for (int n = min_n; n <= 10; ++n) {
      auto cc = build_case(case_id, n);
      std::vector<int> expected{1, n};
      std::sort(expected.begin(), expected.end());
      ok &= expect(cc.alpha_spectrum.degrees == expected, why,
                   "case " + std::to_string(case_id) + " N=" +
                       std::to_string(n) + ": alpha spectrum " +
                       cc.alpha_spectrum.str());
      bool beta_clean = !std::count(cc.beta_spectrum.degrees.begin(),
                                    cc.beta_spectrum.degrees.end(), 1);
      ok &= expect(beta_clean, why,
                   "case " + std::to_string(case_id) + " N=" +
                       std::to_string(n) + ": beta keeps a (1:1) lift");
    }
  }
  return ok;
}

// 2. three-beta product driver at N=5, checked point by point on the tuples
bool criterion_driver(std::string& why) {
  auto report = second_systole_driver(
      {{1, std::nullopt}, {3, std::nullopt}, {4, std::nullopt}}, 5);
  bool ok = expect(report.product.product.degree == 216, why,
                   "tuple space should have 216 points");
  ok &= expect(report.alpha_degree1_in_component == 1 &&
                   report.alpha_degree1_total == 1,
               why, "alpha must keep exactly one (1:1) lift");
  for (int fixed : report.beta_degree1_total)
    ok &= expect(fixed == 0, why, "a beta word kept a (1:1) lift");

  // exhaustive recomputation straight from the factor covers
  std::vector<Word> words;
  for (const auto& cc : report.cases) words.push_back(cc.beta);
  auto count_fixed_tuples = [&](const Word& w) {
    std::vector<Permutation> images;
    for (const auto& cc : report.cases) {
      // evaluate in the factor, treating absent generators as trivial
      Permutation acc(cc.cover.degree);
      for (const auto& letter : w.letters) {
        auto it = cc.cover.monodromy.find(letter.gen);
        if (it == cc.cover.monodromy.end()) continue;
        acc = (letter.exp > 0 ? it->second : it->second.inverse()).after(acc);
      }
      images.push_back(acc);
    }
    int count = 0;
    int d = report.cases.front().cover.degree;
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z)
          if (images[0](x) == x && images[1](y) == y && images[2](z) == z)
            ++count;
    return count;
  };
  ok &= expect(count_fixed_tuples(Word::parse("a")) == 1, why,
               "exhaustive recount of alpha lifts differs");
  for (const auto& w : words)
    ok &= expect(count_fixed_tuples(w) == 0, why,
                 "exhaustive recount found a beta lift");
  return ok;
}

// 3. a thousand random surgeries
bool criterion_surgery(std::string& why) {
  std::mt19937 rng(101);
  bool ok = true;
  auto stable_at = [](const GluingPresentation& p, int e) {
    const auto& sel = p.gluing[e];
    return sel.plus.piece == sel.minus.piece &&
           p.pieces[sel.plus.piece].stays_connected_when_cut;
  };
  for (int i = 0; i < 1000; ++i) {
    auto p1 = random_presentation(rng, i % 2 == 0);
    auto p2 = random_presentation(rng, i % 3 == 0);
    auto result = surgery(p1, 0, p2, 0);
    ok &= expect(validate_gluing(result).ok(), why, "surgery output invalid");
    ok &= expect(presentation_degree(result) ==
                     presentation_degree(p1) + presentation_degree(p2),
                 why, "surgery changed the total degree");
    for (int d : result.distinguished) {
      const auto& g = result.gluing[d];
      ok &= expect(
          result.pieces[g.plus.piece].circles[g.plus.circle].degree == 1, why,
          "a distinguished circle has degree != 1");
    }
    if ((stable_at(p1, 0) || stable_at(p2, 0)) &&
        connectivity(p1).size() == 1 && connectivity(p2).size() == 1)
      ok &= expect(connectivity(result).size() == 1, why,
                   "surgery disconnected a stable configuration");
  }
  return ok;
}

// 4. coding-tree consistency over ten thousand random trees
bool criterion_trees(std::string& why) {
  std::mt19937 rng(103);
  bool ok = true;
  for (int i = 0; i < 10000; ++i) {
    auto t = random_coding_tree(rng, 25);
    ok &= expect(validate_coding_tree(t).ok(), why,
                 "random generator produced an invalid tree");
    auto sig = surface_of(t);
    ok &= expect(sig.euler_characteristic ==
                     2 - 2 * sig.genus - sig.boundary_count,
                 why, "euler characteristic identity failed");
    int n = (i % 3 == 0) ? 2 : 1;
    auto small = truncate(t, n - 1);
    auto big = truncate(t, n);
    auto inc = find_good_inclusion(small, big);
    ok &= expect(inc.status == SearchStatus::Found &&
                     is_good_inclusion(small, big, *inc.witness),
                 why, "truncation chain misses a good inclusion");
  }
  // exact collision structure on every tree with <= 3 simple pieces
  auto classes = oracle_all_trees(3);
  std::mt19937 rng2(7);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ok &= expect(canonical_form(classes[i]) ==
                     canonical_form(relabel(classes[i], rng2)),
                 why, "canonical code not relabelling invariant");
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      bool iso = brute_force_iso(classes[i], classes[j]);
      bool same_code =
          canonical_form(classes[i]) == canonical_form(classes[j]);
      ok &= expect(iso == same_code, why,
                   "canonical collision disagrees with brute-force classes");
    }
  }
  return ok;
}

// 5. universal forest floors
bool criterion_universal(std::string& why) {
  auto result = universal_forest(1);
  bool ok = expect(!result.partial, why, "floor 1 must fit the budget");
  ok &= expect(result.forest.forest.floors[0].size() == 3, why,
               "floor 0 must have exactly 3 classes");
  std::set<std::string> floor1;
  for (int v : result.forest.forest.floors[1])
    floor1.insert(canonical_form(result.forest.tree_at[v]));
  int expected = 0;
  for (const auto& t : oracle_all_trees(4)) {
    if (t.depth() > 3) continue;
    ++expected;
    ok &= expect(floor1.count(canonical_form(t)) == 1, why,
                 "a depth-3 tree is missing from floor 1");
  }
  ok &= expect(static_cast<int>(floor1.size()) == expected, why,
               "floor 1 carries an unexpected class");
  ok &= expect(validate_forest_of_trees(result.forest).ok(), why,
               "universal forest fails validation");
  return ok;
}

// 6. countable forest over ten rational trees
bool criterion_countable(std::string& why) {
  std::vector<CodingTree> trees;
  trees.push_back(loch_ness_tree());
  trees.push_back(cantor_pants_tree());
  trees.push_back(binary_pants_tree());
  trees.push_back(loch_ness_tree());
  // pants chains of varying length, each pants dropping one funnel,
  // feeding an infinite handle ray
  for (int prefix = 1; prefix <= 6; ++prefix) {
    RationalBase base;
    base.nodes.push_back({VertexKind::Simple, {1}});
    int cursor = 1;
    for (int i = 0; i < prefix; ++i) {
      base.nodes.push_back({VertexKind::Boundary, {cursor + 1}});
      base.nodes.push_back({VertexKind::Simple, {cursor + 2, cursor + 3}});
      base.nodes.push_back({VertexKind::Boundary, {}});
      cursor += 3;
    }
    base.nodes.push_back({VertexKind::Boundary, {cursor + 1}});
    base.nodes.push_back({VertexKind::Simple, {cursor}});
    trees.push_back(CodingTree::rational(base));
  }
  bool ok = expect(trees.size() == 10, why, "fixture list must have 10 trees");

  auto f = countable_forest(trees, 12);
  ok &= expect(validate_forest_of_trees(f).ok(), why,
               "countable forest fails validation");
  auto rays = enumerate_rays(f.forest, 11);
  ok &= expect(rays.size() == trees.size(), why,
               "end count differs from the input count");
  for (const auto& ray : rays) {
    int i = f.forest.floor_of(ray.root);  // root floor = input index
    auto limit = limit_tree(f, ray, 11);
    ok &= expect(limit.exact, why, "countable ray lost its source");
    ok &= expect(canonical_form(truncate(limit.tree, 8)) ==
                     canonical_form(truncate(trees[i], 8)),
                 why, "limit tree disagrees at depth 8");
  }
  // the stored vertices really are the prescribed balls
  for (int n = 0; n < f.forest.floor_count(); ++n)
    for (std::size_t s = 0; s < f.forest.floors[n].size(); ++s) {
      int v = f.forest.floors[n][s];
      int radius = 2 * (n - static_cast<int>(s)) + 1;
      ok &= expect(canonical_form(f.tree_at[v]) ==
                       canonical_form(trees[s].ball(radius)),
                   why, "stored ball violates the radius rule");
    }
  return ok;
}

// 7. leaf census fixtures
bool criterion_census(std::string& why) {
  auto ln = leaf_census(countable_forest({loch_ness_tree()}, 7), 6);
  bool ok = expect(ln.marked.size() == 1, why,
                   "one-ray forest must mark exactly one leaf");
  if (ok) {
    const auto& triple = ln.marked[0].triple;
    ok &= expect(triple.genus.is_infinite(), why, "marked genus not infinite");
    ok &= expect(normal_shape(triple.ends).isolated == 1 &&
                     !normal_shape(triple.ends).cantor,
                 why, "marked leaf must have one end");
    ok &= expect(!triple.ends_accumulated.empty(), why,
                 "the single end must be accumulated by genus");
  }
  ok &= expect(ln.generic == "disk", why, "generic entry must be the disk");

  ForestOfCodingTrees empty;
  empty.forest.floors.assign(5, {});
  auto plan = build_tower_plan(empty, 4);
  auto all_disk = census_of_tower(plan, 3);
  ok &= expect(all_disk.census.marked.empty(), why,
               "pure covering plan must mark nothing");
  ok &= expect(all_disk.census.generic == "disk", why,
               "generic entry must be the disk");

  std::vector<CodingTree> five = {loch_ness_tree(), cantor_pants_tree(),
                                  binary_pants_tree(), chain_tree(3),
                                  pants_tree()};
  auto census = leaf_census(countable_forest(five, 9), 8);
  ok &= expect(census.marked.size() == 5, why,
               "five-tree forest must mark five leaves");
  for (std::size_t i = 0; i < five.size() && ok; ++i) {
    auto cmp = triples_equivalent(census.marked[i].triple,
                                  classify_limit(five[i]));
    ok &= expect(cmp.result == TripleMatch::Yes, why,
                 "census triple " + std::to_string(i) +
                     " differs from classify_limit");
  }
  return ok;
}

// 8. certificate arithmetic
bool criterion_certificates(std::string& why) {
  std::mt19937 rng(107);
  std::uniform_real_distribution<double> sys_dist(0.01, 4.0),
      k0_dist(0.05, 14.0);
  bool ok = true;
  for (int i = 0; i < 10000; ++i) {
    double sys = sys_dist(rng), k0 = k0_dist(rng);
    double impl = sys * std::cosh(k0 / 2);
    long double oracle =
        static_cast<long double>(sys) * cosh_oracle(k0 / 2.0L);
    ok &= expect(std::abs(impl - static_cast<double>(oracle)) <=
                     1e-12 * std::abs(static_cast<double>(oracle)),
                 why, "double cosh drifts from the high-precision value");
    bool certified = inj_radius_bound(sys, k0, 1.0).ok();
    long double margin = oracle - k0;
    if (margin > 2e-9)
      ok &= expect(certified, why, "a comfortably true premise was refused");
    if (margin < 0)
      ok &= expect(!certified, why, "a false premise was certified");
  }
  ok &= expect(tube_genus_bound(5).genus == 37, why,
               "tube genus bound at K=5 must be 37");

  std::vector<GluePart> parts{GluePart{"a", 4, true, {4, 4}, {4}, true},
                              GluePart{"b", 4, true, {4}, {4, 4}, true}};
  ok &= expect(glue_systole(parts, 3.5).ok(), why,
               "healthy decomposition refused");
  for (std::size_t p = 0; p < parts.size(); ++p) {
    auto broken = parts;
    broken[p].internal_systole = 3.0;
    ok &= expect(!glue_systole(broken, 3.5).ok(), why,
                 "systole mutation went unnoticed");
    broken = parts;
    broken[p].collar_widths.assign(broken[p].collar_widths.size(), 3.0);
    ok &= expect(!glue_systole(broken, 3.5).ok(), why,
                 "collar mutation went unnoticed");
    broken = parts;
    broken[p].boundary_lengths.assign(broken[p].boundary_lengths.size(), 3.0);
    ok &= expect(!glue_systole(broken, 3.5).ok(), why,
                 "length mutation went unnoticed");
  }
  return ok;
}

// 9. tower plans and their mutations
bool criterion_towers(std::string& why) {
  auto forest = countable_forest({loch_ness_tree()}, 8);
  auto plan = build_tower_plan(forest, 6);
  bool ok = true;
  for (const auto& lvl : plan.levels) {
    if (lvl.floor == 0) continue;
    ok &= expect(lvl.star_systole.value >= lvl.floor, why,
                 "sigma_n >= n fails at a level");
    ok &= expect(lvl.complement_collar.value >= lvl.floor, why,
                 "K_n >= n fails at a level");
  }
  ok &= expect(verify_admissible(plan).ok(), why,
               "freshly built plan fails verification");

  for (int level = 1; level <= 6; ++level) {
    TowerPlan broken = plan;
    broken.steps.erase(
        std::remove_if(broken.steps.begin(), broken.steps.end(),
                       [&](const PlanStep& s) {
                         return s.level == level &&
                                s.kind == PlanStep::Kind::SecondCoveringPass;
                       }),
        broken.steps.end());
    ok &= expect(!verify_admissible(broken).ok(), why,
                 "deleting covering passes went unnoticed");
  }
  for (int level = 1; level <= 6; ++level) {
    TowerPlan broken = plan;
    auto& lifts = broken.levels[level].lift_maps;
    if (lifts.empty()) continue;
    std::swap(lifts.front().inclusion.vertex_map[0],
              lifts.front().inclusion.vertex_map[1]);
    ok &= expect(!verify_admissible(broken).ok(), why,
                 "corrupting a lift map went unnoticed");
  }
  for (int level = 1; level <= 6; ++level) {
    TowerPlan broken = plan;
    broken.levels[level].star_parts[0].internal_systole = 0.25;
    ok &= expect(!verify_admissible(broken).ok(), why,
                 "weakening a glue part went unnoticed");
  }
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"appendix cases, all admissible N <= 10", 5.0, criterion_cases},
      {"three-beta product driver at N = 5", 1.0, criterion_driver},
      {"1000 randomised surgeries", 5.0, criterion_surgery},
      {"10000 random coding trees", 30.0, criterion_trees},
      {"universal forest floors", 60.0, criterion_universal},
      {"countable forest over 10 rational trees", 10.0, criterion_countable},
      {"leaf census fixtures", 10.0, criterion_census},
      {"certificate arithmetic", 5.0, criterion_certificates},
      {"tower plans and mutations", 10.0, criterion_towers},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criteria[i].time_limit_s) {
      ok = false;
      if (why.empty())
        why = "runtime " + std::to_string(elapsed) + "s exceeds " +
              std::to_string(criteria[i].time_limit_s) + "s";
    }
    std::printf("%s criterion %zu: %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name.c_str(), elapsed,
                why.empty() ? "" : " -- ", why.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
