#include <fstream>
#include <iostream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lamina/dot_export.hpp"
#include "lamina/json_io.hpp"

using namespace lamina;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& path) {
  std::string text = read_input(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("$", std::string("malformed JSON: ") + e.what());
  }
}

struct Output {
  std::string path;  // empty = stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
  }
};

std::string triple_text(const ClassifyingTriple& t) { return t.str(); }

std::string census_text(const LeafCensus& c) {
  std::string out;
  out += "end              triple\n";
  for (const auto& e : c.marked) {
    std::string id = e.end_id;
    if (id.size() < 16) id.resize(16, ' ');
    out += id + " " + triple_text(e.triple);
    if (!e.resolved) out += "  [unresolved cluster]";
    out += "\n";
  }
  out += "generic          " + c.generic + "\n";
  out += std::string("distinct leaves  ") +
         (c.distinct_leaves ? "yes" : "no") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coding trees, forests, covers and certified tower plans"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_path;
  int depth = 8;
  int n_flag = 1;
  double k_flag = 1.0;
  int levels = 1;
  unsigned seed = 0;
  app.add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", out_path);
  app.add_option("--depth", depth);
  app.add_option("--n", n_flag);
  app.add_option("--k", k_flag);
  app.add_option("--levels", levels);
  app.add_option("--seed", seed);

  // ---- tree ----------------------------------------------------------------
  auto* tree = app.add_subcommand("tree", "coding tree operations");
  tree->require_subcommand(1);
  std::string tree_file;
  for (const char* name : {"validate", "info", "truncate", "canon"})
    tree->add_subcommand(name)->add_option("file", tree_file)->required();

  // ---- forest --------------------------------------------------------------
  auto* forest = app.add_subcommand("forest", "forests of coding trees");
  forest->require_subcommand(1);
  std::string forest_file = "-";
  std::vector<std::string> countable_files;
  int budget = enumeration_budget_from_env();
  forest->add_subcommand("validate")->add_option("file", forest_file)->required();
  auto* funiv = forest->add_subcommand("universal");
  funiv->add_option("--budget", budget);
  forest->add_subcommand("countable")
      ->add_option("files", countable_files)
      ->required();
  forest->add_subcommand("ends")->add_option("file", forest_file);
  forest->add_subcommand("census")->add_option("file", forest_file);

  // ---- cover ---------------------------------------------------------------
  auto* cover = app.add_subcommand("cover", "permutation covers and gluings");
  cover->require_subcommand(1);
  std::string cover_file, word_text, cases_text = "1";
  std::vector<std::string> product_files;
  std::string g1_file, g2_file;
  int case_id = 1, e1 = 0, e2 = 0;
  double ratio = -1;
  auto* ceval = cover->add_subcommand("eval");
  ceval->add_option("file", cover_file)->required();
  ceval->add_option("--word", word_text)->required();
  auto* cspec = cover->add_subcommand("spectrum");
  cspec->add_option("file", cover_file)->required();
  cspec->add_option("--word", word_text)->required();
  auto* ccase = cover->add_subcommand("case");
  ccase->add_option("--case", case_id)->required()->check(CLI::Range(1, 4));
  auto* cprod = cover->add_subcommand("product");
  cprod->add_option("files", product_files)->required()->expected(-1);
  auto* csurg = cover->add_subcommand("surgery");
  csurg->add_option("first", g1_file)->required();
  csurg->add_option("second", g2_file)->required();
  csurg->add_option("--e1", e1);
  csurg->add_option("--e2", e2);
  auto* ctube = cover->add_subcommand("tube");
  ctube->add_option("file", g1_file)->required();
  ctube->add_option("--e", e1);
  auto* cdriver = cover->add_subcommand("driver");
  std::string words_text;
  cdriver->add_option("--cases", cases_text)->required();
  cdriver->add_option("--ratio", ratio);
  cdriver->add_option("--words", words_text,
                      "semicolon-separated beta words (default: canonical)");

  // ---- cert ----------------------------------------------------------------
  auto* cert = app.add_subcommand("cert", "certified bound evaluators");
  std::string rule;
  double sigma = 0, l_alpha = 0, sys = 0, k0 = 0;
  std::string parts_file;
  auto* certeval = cert->add_subcommand("eval");
  certeval->add_option("--rule", rule)
      ->required()
      ->check(CLI::IsMember({"half_collar", "inj_radius", "crossing",
                             "tube_genus", "glue_systole"}));
  certeval->add_option("--sigma", sigma);
  certeval->add_option("--l-alpha", l_alpha);
  certeval->add_option("--sys", sys);
  certeval->add_option("--k0", k0);
  certeval->add_option("--parts", parts_file);
  cert->require_subcommand(1);

  // ---- tower ---------------------------------------------------------------
  auto* tower = app.add_subcommand("tower", "admissible tower plans");
  tower->require_subcommand(1);
  std::string tower_file = "-";
  tower->add_subcommand("build")->add_option("file", tower_file);
  tower->add_subcommand("verify")->add_option("file", tower_file);
  tower->add_subcommand("census")->add_option("file", tower_file);

  // global flags may follow the subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out{out_path};
  try {
    // ---- tree ----
    if (tree->parsed()) {
      CodingTree t = coding_tree_from_json(parse_json(tree_file));
      if (tree->got_subcommand("validate")) {
        auto report = validate_coding_tree(t);
        out.write(report.str() + (report.ok() ? "\n" : ""));
        return report.ok() ? kExitOk : kExitValidation;
      }
      if (tree->got_subcommand("info")) {
        auto report = validate_coding_tree(t);
        if (!report.ok()) {
          out.write("invalid tree:\n" + report.str());
          return kExitValidation;
        }
        std::string text;
        if (t.is_finite()) {
          auto sig = surface_of(t);
          text = "genus " + std::to_string(sig.genus) + ", boundary " +
                 std::to_string(sig.boundary_count) +
                 ", chi=" + std::to_string(sig.euler_characteristic) + "\n";
        }
        text += "interior: " + classify_limit(t, depth).str() + "\n";
        out.write(text);
        return kExitOk;
      }
      if (tree->got_subcommand("truncate")) {
        CodingTree ball = truncate(t, n_flag);
        if (format == "dot")
          out.write(to_dot(ball));
        else
          out.write(dump_canonical(to_json(ball)));
        return kExitOk;
      }
      // canon
      if (!t.is_finite()) {
        out.write("finite tree required\n");
        return kExitValidation;
      }
      if (format == "json")
        out.write(dump_canonical(to_json(canonical_relabel(t))));
      else
        out.write(canonical_form(t) + "\n");
      return kExitOk;
    }

    // ---- forest ----
    if (forest->parsed()) {
      if (forest->got_subcommand("universal")) {
        auto result = universal_forest(n_flag, budget);
        if (format == "dot")
          out.write(to_dot(result.forest));
        else
          out.write(dump_canonical(to_json(result.forest)));
        if (result.partial) {
          std::cerr << "partial: built floors 0.."
                    << result.built_floors - 1 << " of requested 0.."
                    << result.requested_floors - 1
                    << " (raise --budget or LAMINA_ENUM_BUDGET)\n";
          return kExitValidation;
        }
        return kExitOk;
      }
      if (forest->got_subcommand("countable")) {
        std::vector<CodingTree> trees;
        for (const auto& file : countable_files)
          trees.push_back(coding_tree_from_json(parse_json(file)));
        int floors = std::max<int>(depth, static_cast<int>(trees.size()));
        auto f = countable_forest(trees, floors);
        if (format == "dot")
          out.write(to_dot(f));
        else
          out.write(dump_canonical(to_json(f)));
        return kExitOk;
      }
      ForestOfCodingTrees f = forest_from_json(parse_json(forest_file));
      if (forest->got_subcommand("validate")) {
        auto report = validate_forest_of_trees(f);
        out.write(report.str() + (report.ok() ? "\n" : ""));
        return report.ok() ? kExitOk : kExitValidation;
      }
      if (forest->got_subcommand("ends")) {
        int top = std::min(depth, f.forest.floor_count() - 1);
        auto rays = enumerate_rays(f.forest, top);
        std::string text;
        for (const auto& r : rays) {
          text += "root " + std::to_string(r.root) + ":";
          int v = r.root;
          text += " " + std::to_string(v);
          for (int e : r.edges) {
            v = f.forest.edges[e].second;
            text += " -> " + std::to_string(v);
          }
          text += "\n";
        }
        text += std::to_string(rays.size()) + " end(s) enumerable to floor " +
                std::to_string(top) + "\n";
        out.write(text);
        return kExitOk;
      }
      // census
      int top = std::min(depth, f.forest.floor_count() - 1);
      auto census = leaf_census(f, top);
      if (format == "json")
        out.write(dump_canonical(to_json(census)));
      else
        out.write(census_text(census));
      return kExitOk;
    }

    // ---- cover ----
    if (cover->parsed()) {
      if (cover->got_subcommand("eval") || cover->got_subcommand("spectrum")) {
        PermCover c = cover_from_json(parse_json(cover_file));
        Word w = Word::parse(word_text);
        if (cover->got_subcommand("eval")) {
          out.write(evaluate_word(c, w).cycle_string() + "\n");
        } else {
          out.write(lift_spectrum(c, w).str() + "\n");
        }
        return kExitOk;
      }
      if (cover->got_subcommand("case")) {
        auto cc = build_case(case_id, n_flag, seed);
        if (format == "json")
          out.write(dump_canonical(to_json(cc.cover)));
        else
          out.write(cc.report());
        return cc.ok() ? kExitOk : kExitValidation;
      }
      if (cover->got_subcommand("product")) {
        std::vector<PermCover> factors;
        for (const auto& file : product_files)
          factors.push_back(cover_from_json(parse_json(file)));
        auto prod = product_cover(factors);
        if (format == "json") {
          out.write(dump_canonical(to_json(prod.product)));
        } else {
          std::string text =
              "degree " + std::to_string(prod.product.degree) + ", " +
              std::to_string(prod.components.size()) + " component(s)\n";
          for (std::size_t i = 0; i < prod.components.size(); ++i)
            text += "  component " + std::to_string(i) + ": " +
                    std::to_string(prod.components[i].size()) + " point(s)" +
                    (static_cast<int>(i) == prod.basepoint_component
                         ? " [basepoint]"
                         : "") +
                    "\n";
          out.write(text);
        }
        return kExitOk;
      }
      if (cover->got_subcommand("surgery")) {
        auto p1 = gluing_from_json(parse_json(g1_file));
        auto p2 = gluing_from_json(parse_json(g2_file));
        auto result = surgery(p1, e1, p2, e2);
        if (format == "dot")
          out.write(to_dot(result));
        else
          out.write(dump_canonical(to_json(result)));
        return kExitOk;
      }
      if (cover->got_subcommand("tube")) {
        auto p = gluing_from_json(parse_json(g1_file));
        auto result = attach_tube(p, e1, k_flag);
        if (format == "dot")
          out.write(to_dot(result));
        else
          out.write(dump_canonical(to_json(result)));
        return kExitOk;
      }
      // driver
      std::vector<DriverBeta> betas;
      {
        std::stringstream ss(cases_text);
        std::string item;
        while (std::getline(ss, item, ','))
          betas.push_back({std::stoi(item), std::nullopt});
      }
      if (!words_text.empty()) {
        std::stringstream ss(words_text);
        std::string item;
        std::size_t slot = 0;
        while (std::getline(ss, item, ';')) {
          if (slot >= betas.size())
            throw std::invalid_argument("more words than cases");
          if (!item.empty()) betas[slot].word = Word::parse(item);
          ++slot;
        }
      }
      std::optional<double> ratio_opt;
      if (ratio >= 0) ratio_opt = ratio;
      auto report = second_systole_driver(betas, n_flag, ratio_opt, seed);
      out.write(report.str());
      return report.ok ? kExitOk : kExitValidation;
    }

    // ---- cert ----
    if (cert->parsed()) {
      BoundOutcome outcome;
      if (rule == "half_collar") {
        outcome = half_collar_bound(sigma, l_alpha);
      } else if (rule == "inj_radius") {
        outcome = inj_radius_bound(sys, k0, sigma);
      } else if (rule == "crossing") {
        outcome = crossing_bound(k0);
      } else if (rule == "tube_genus") {
        auto t = tube_genus_bound(k_flag);
        out.write("genus >= " + std::to_string(t.genus) + " (raw " +
                  std::to_string(t.raw) + ", area >= " +
                  std::to_string(t.area) + ")\n");
        return kExitOk;
      } else {  // glue_systole
        if (parts_file.empty())
          throw std::runtime_error("--parts <file> required for glue_systole");
        Json pj = parse_json(parts_file);
        std::vector<GluePart> parts;
        for (const auto& item : pj) {
          GluePart part;
          part.id = item.value("id", "part");
          part.internal_systole = item.at("internal_systole").get<double>();
          part.collar_widths =
              item.value("collar_widths", std::vector<double>{});
          part.boundary_lengths =
              item.value("boundary_lengths", std::vector<double>{});
          parts.push_back(std::move(part));
        }
        outcome = glue_systole(parts, k_flag);
      }
      if (!outcome.ok()) {
        out.write("no bound derivable: " + outcome.failure + "\n");
        return kExitValidation;
      }
      if (format == "json")
        out.write(dump_canonical(to_json(*outcome.bound)));
      else
        out.write(derivation_text(*outcome.bound));
      return kExitOk;
    }

    // ---- tower ----
    if (tower->parsed()) {
      if (tower->got_subcommand("build")) {
        auto f = forest_from_json(parse_json(tower_file));
        auto plan = build_tower_plan(f, levels);
        if (format == "text")
          out.write(plan.audit_log());
        else if (format == "dot")
          out.write(to_dot(plan));
        else
          out.write(dump_canonical(to_json(plan)));
        return kExitOk;
      }
      auto plan = tower_from_json(parse_json(tower_file));
      if (tower->got_subcommand("verify")) {
        auto report = verify_admissible(plan);
        out.write(report.str() + (report.ok() ? "\n" : ""));
        return report.ok() ? kExitOk : kExitValidation;
      }
      // census
      int top = std::min(depth, plan.forest.forest.floor_count() - 1);
      auto result = census_of_tower(plan, top);
      if (format == "json") {
        Json j = to_json(result.census);
        j["growth_witness"] = result.growth_witness;
        out.write(dump_canonical(j));
      } else {
        std::string text = census_text(result.census);
        text += "growth witness min(sigma_n, K_n/2):";
        for (double g : result.growth_witness)
          text += " " + std::to_string(g);
        text += "\n";
        out.write(text);
      }
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    std::cerr << "schema error at " << e.path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
