#include "lamina/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace lamina {

Permutation::Permutation(int degree) : images_(degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<char> hit(images.size(), 0);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || hit[v])
      throw std::invalid_argument("images do not form a permutation");
    hit[v] = 1;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p(degree);
  std::vector<char> seen(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1, b = cyc[(i + 1) % cyc.size()] - 1;
      if (a < 0 || a >= degree || b < 0 || b >= degree)
        throw std::invalid_argument("cycle entry out of range");
      if (seen[a]) throw std::invalid_argument("repeated cycle entry");
      seen[a] = 1;
      p.images_[a] = b;
    }
  }
  return p;
}

std::optional<Permutation> Permutation::parse_cycles(int degree,
                                                     std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (text.substr(i, 2) == "id") {
    i += 2;
    skip_ws();
    if (i == text.size()) return Permutation(degree);
    return std::nullopt;
  }
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') return std::nullopt;
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) return std::nullopt;
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        return std::nullopt;
      int v = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      cyc.push_back(v);
    }
    if (cyc.empty()) return std::nullopt;
    cycles.push_back(std::move(cyc));
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Permutation Permutation::after(const Permutation& first) const {
  if (degree() != first.degree())
    throw std::invalid_argument("degree mismatch");
  std::vector<int> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[i] = images_[first.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int i = start; !seen[i]; i = images_[i]) {
      seen[i] = 1;
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  for (const auto& c : cycles()) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) out.push_back(i);
  return out;
}

std::string Permutation::cycle_string() const {
  if (is_identity()) return "id";
  std::string out;
  for (const auto& cyc : cycles()) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i] + 1);
    }
    out += ')';
  }
  return out;
}

}  // namespace lamina
