#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lamina/dot_export.hpp"
#include "lamina/json_io.hpp"
#include "lamina/tower.hpp"

using namespace lamina;
using namespace testing_support;

TEST_CASE("coding trees round-trip through their schema") {
  std::mt19937 rng(61);
  for (int i = 0; i < 100; ++i) {
    auto t = random_coding_tree(rng, 12);
    CHECK(coding_tree_from_json(to_json(t)) == t);
  }
  auto rational = loch_ness_tree();
  CHECK(coding_tree_from_json(to_json(rational)) == rational);
  auto approx = CodingTree::depth_limited(truncate(rational, 2), 5);
  CHECK(coding_tree_from_json(to_json(approx)) == approx);
}

TEST_CASE("schema violations carry the offending path") {
  Json j = to_json(pants_tree());
  j.erase("root");
  try {
    coding_tree_from_json(j);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path == "$.root");
  }
  Json bad = to_json(pants_tree());
  bad["vertices"][1]["kind"] = "strange";
  try {
    coding_tree_from_json(bad);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.path == "$.vertices[1].kind");
  }
  Json wrong = to_json(pants_tree());
  wrong["format"] = "codingtree/2";
  CHECK_THROWS_AS(coding_tree_from_json(wrong), SchemaError);
}

TEST_CASE("forests round-trip with their inclusions and sources") {
  auto f = countable_forest({loch_ness_tree(), pants_tree()}, 5);
  auto copy = forest_from_json(to_json(f));
  CHECK(copy.forest == f.forest);
  CHECK(copy.tree_at == f.tree_at);
  CHECK(copy.inclusion_at == f.inclusion_at);
  CHECK(copy.ray_source == f.ray_source);
  CHECK(copy.ray_label == f.ray_label);
}

TEST_CASE("covers round-trip in cycle notation") {
  auto cc = build_case(3, 5);
  auto copy = cover_from_json(to_json(cc.cover));
  CHECK(copy == cc.cover);
}

TEST_CASE("gluing presentations round-trip with certificates") {
  auto p = attach_tube(identity_presentation(), 0, 4.0);
  auto copy = gluing_from_json(to_json(p));
  CHECK(copy == p);
}

TEST_CASE("certificates round-trip with their premises") {
  auto out = glue_systole(
      {GluePart{"a", 4, true, {4}, {4}, true}}, 3.5);
  REQUIRE(out.ok());
  Json j = to_json(*out.bound);
  auto copy = bound_from_json(j);
  CHECK(copy.quantity == out.bound->quantity);
  CHECK(copy.value == out.bound->value);
  CHECK(copy.strict == out.bound->strict);
  REQUIRE(copy.premises.size() == out.bound->premises.size());
  for (std::size_t i = 0; i < copy.premises.size(); ++i) {
    CHECK(copy.premises[i].rule == out.bound->premises[i].rule);
    CHECK(copy.premises[i].detail == out.bound->premises[i].detail);
  }
}

TEST_CASE("tower plans round-trip whole") {
  auto f = countable_forest({loch_ness_tree()}, 4);
  auto plan = build_tower_plan(f, 2);
  auto copy = tower_from_json(to_json(plan));
  CHECK(verify_admissible(copy).ok());
  CHECK(to_json(copy) == to_json(plan));
}

TEST_CASE("census reports round-trip") {
  auto f = countable_forest({loch_ness_tree(), cantor_pants_tree()}, 6);
  auto census = leaf_census(f, 5);
  auto copy = census_from_json(to_json(census));
  CHECK(to_json(copy) == to_json(census));
}

namespace {

// every mutation must either parse or fail with a SchemaError; nothing
// else may escape
template <typename Parser>
void check_mutations(const Json& doc, Parser parse) {
  std::function<void(Json&, Json&)> mutate_all = [&](Json& root, Json& node) {
    if (node.is_object()) {
      std::vector<std::string> keys;
      for (auto it = node.begin(); it != node.end(); ++it)
        keys.push_back(it.key());
      for (const auto& key : keys) {
        Json saved = node[key];
        node.erase(key);
        try {
          parse(root);
        } catch (const SchemaError&) {
        }
        node[key] = "wrong-type";
        try {
          parse(root);
        } catch (const SchemaError&) {
        }
        node[key] = saved;
        mutate_all(root, node[key]);
      }
    } else if (node.is_array()) {
      for (auto& item : node) mutate_all(root, item);
      node.push_back(Json::object());
      try {
        parse(root);
      } catch (const SchemaError&) {
      }
      node.erase(node.size() - 1);
    }
  };
  Json copy = doc;
  mutate_all(copy, copy);
  CHECK(copy == doc);  // mutations were rolled back
}

}  // namespace

TEST_CASE("parsers survive arbitrary key deletion and retyping") {
  check_mutations(to_json(pants_tree()),
                  [](const Json& j) { (void)coding_tree_from_json(j); });
  check_mutations(to_json(loch_ness_tree()),
                  [](const Json& j) { (void)coding_tree_from_json(j); });
  check_mutations(to_json(countable_forest({loch_ness_tree()}, 3)),
                  [](const Json& j) { (void)forest_from_json(j); });
  check_mutations(to_json(build_case(1, 3).cover),
                  [](const Json& j) { (void)cover_from_json(j); });
  check_mutations(to_json(attach_tube(identity_presentation(), 0, 2.0)),
                  [](const Json& j) { (void)gluing_from_json(j); });
  auto bound = glue_systole({GluePart{"a", 3, true, {3}, {3}, true}}, 2.5);
  check_mutations(to_json(*bound.bound),
                  [](const Json& j) { (void)bound_from_json(j); });
  auto plan = build_tower_plan(countable_forest({pants_tree()}, 3), 1);
  check_mutations(to_json(plan),
                  [](const Json& j) { (void)tower_from_json(j); });
  check_mutations(to_json(leaf_census(countable_forest({pants_tree()}, 3), 2)),
                  [](const Json& j) { (void)census_from_json(j); });
}

TEST_CASE("emitted bytes are stable for fixed inputs") {
  auto tree_bytes = dump_canonical(to_json(pants_tree()));
  CHECK(tree_bytes ==
        "{\n"
        "  \"edges\": [\n"
        "    [\n      0,\n      1\n    ],\n"
        "    [\n      0,\n      2\n    ],\n"
        "    [\n      0,\n      3\n    ]\n"
        "  ],\n"
        "  \"format\": \"codingtree/1\",\n"
        "  \"root\": 0,\n"
        "  \"vertices\": [\n"
        "    {\n      \"id\": 0,\n      \"kind\": \"simple\"\n    },\n"
        "    {\n      \"id\": 1,\n      \"kind\": \"boundary\"\n    },\n"
        "    {\n      \"id\": 2,\n      \"kind\": \"boundary\"\n    },\n"
        "    {\n      \"id\": 3,\n      \"kind\": \"boundary\"\n    }\n"
        "  ]\n"
        "}\n");
  CHECK(dump_canonical(to_json(pants_tree())) == tree_bytes);
}

TEST_CASE("case reports are deterministic") {
  auto a = build_case(3, 5).report();
  auto b = build_case(3, 5).report();
  CHECK(a == b);
  CHECK(a.find("sigma(b)=(1 2 6)(3 5)(4)") != std::string::npos);
}

TEST_CASE("dot exports shape-code the vertex kinds") {
  auto dot = to_dot(pants_tree());
  CHECK(dot.find("shape=circle") != std::string::npos);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("v0 -- v1") != std::string::npos);

  auto forest_dot = to_dot(countable_forest({loch_ness_tree()}, 3));
  CHECK(forest_dot.find("rank=same") != std::string::npos);
  CHECK(forest_dot.find("->") != std::string::npos);

  auto gluing_dot = to_dot(attach_tube(identity_presentation(), 0, 2.0));
  CHECK(gluing_dot.find("[tube]") != std::string::npos);
  CHECK(gluing_dot.find("style=bold") != std::string::npos);

  auto plan = build_tower_plan(countable_forest({loch_ness_tree()}, 3), 1);
  auto tower_dot = to_dot(plan);
  CHECK(tower_dot.find("X_1") != std::string::npos);
}
