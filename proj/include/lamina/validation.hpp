#pragma once

#include <string>
#include <vector>

namespace lamina {

/// One violated axiom, with the ids of the offending vertices or edges.
struct Violation {
  std::string rule;
  std::string detail;
  std::vector<int> ids;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string rule, std::string detail, std::vector<int> ids = {}) {
    violations.push_back({std::move(rule), std::move(detail), std::move(ids)});
  }

  std::string str() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) {
      out += v.rule;
      out += ": ";
      out += v.detail;
      if (!v.ids.empty()) {
        out += " [";
        for (std::size_t i = 0; i < v.ids.size(); ++i) {
          if (i) out += ",";
          out += std::to_string(v.ids[i]);
        }
        out += "]";
      }
      out += "\n";
    }
    return out;
  }
};

}  // namespace lamina
