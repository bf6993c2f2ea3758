#include "lamina/perm_cover.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lamina {

Word Word::parse(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad word syntax near '" +
                                  std::string(1, c) + "'");
    std::string gen(1, c);
    ++i;
    int exp = 1;
    if (i < text.size() && text[i] == '\'') {
      exp = -1;
      ++i;
    } else if (text.substr(i, 3) == "^-1") {
      exp = -1;
      i += 3;
    } else if (text.substr(i, 2) == "^1") {
      i += 2;
    }
    w.letters.push_back({gen, exp});
  }
  return w;
}

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letters[i].gen;
    if (letters[i].exp < 0) out += "^-1";
  }
  return out;
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.push_back({it->gen, -it->exp});
  return w;
}

Word Word::conjugated_by(const Word& g) const {
  Word w = g;
  w.letters.insert(w.letters.end(), letters.begin(), letters.end());
  Word gi = g.inverse();
  w.letters.insert(w.letters.end(), gi.letters.begin(), gi.letters.end());
  return w;
}

bool PermCover::transitive() const {
  if (degree <= 0) return false;
  std::vector<int> comp(degree);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [gen, perm] : monodromy)
    for (int i = 0; i < degree; ++i) {
      int a = find(i), b = find(perm(i));
      if (a != b) comp[a] = b;
    }
  for (int i = 1; i < degree; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

PermCover make_cover(int degree, std::vector<std::string> alphabet,
                     std::map<std::string, Permutation> monodromy) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  for (const auto& gen : alphabet) {
    auto it = monodromy.find(gen);
    if (it == monodromy.end())
      throw std::invalid_argument("generator '" + gen + "' has no permutation");
    if (it->second.degree() != degree)
      throw std::invalid_argument("permutation degree mismatch for '" + gen +
                                  "'");
  }
  if (monodromy.size() != alphabet.size())
    throw std::invalid_argument("monodromy for unknown generator");
  PermCover c;
  c.degree = degree;
  c.alphabet = std::move(alphabet);
  c.monodromy = std::move(monodromy);
  return c;
}

Permutation evaluate_word(const PermCover& c, const Word& w) {
  Permutation acc(c.degree);
  for (const auto& letter : w.letters) {
    auto it = c.monodromy.find(letter.gen);
    if (it == c.monodromy.end())
      throw std::invalid_argument("unknown generator '" + letter.gen + "'");
    const Permutation& p =
        letter.exp > 0 ? it->second : it->second.inverse();
    acc = p.after(acc);
  }
  return acc;
}

int LiftSpectrum::total() const {
  int t = 0;
  for (int d : degrees) t += d;
  return t;
}

std::string LiftSpectrum::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(degrees[i]);
  }
  return out + "}";
}

LiftSpectrum lift_spectrum(const PermCover& c, const Word& w) {
  return {evaluate_word(c, w).cycle_type()};
}

std::vector<int> ProductCover::tuple_of(int index) const {
  std::vector<int> t(factor_degrees.size());
  for (int i = static_cast<int>(factor_degrees.size()) - 1; i >= 0; --i) {
    t[i] = index % factor_degrees[i];
    index /= factor_degrees[i];
  }
  return t;
}

int ProductCover::index_of(const std::vector<int>& tuple) const {
  int idx = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    idx = idx * factor_degrees[i] + tuple[i];
  return idx;
}

ProductCover product_cover(const std::vector<PermCover>& covers) {
  if (covers.empty()) throw std::invalid_argument("empty cover list");
  for (const auto& c : covers)
    if (c.alphabet != covers.front().alphabet)
      throw std::invalid_argument("alphabet mismatch between factors");

  ProductCover out;
  long total = 1;
  for (const auto& c : covers) {
    out.factor_degrees.push_back(c.degree);
    total *= c.degree;
    if (total > 2000000)
      throw std::invalid_argument("tuple space too large");
  }
  int degree = static_cast<int>(total);

  std::map<std::string, Permutation> mono;
  for (const auto& gen : covers.front().alphabet) {
    std::vector<int> images(degree);
    for (int idx = 0; idx < degree; ++idx) {
      auto t = out.tuple_of(idx);
      for (std::size_t i = 0; i < covers.size(); ++i)
        t[i] = covers[i].monodromy.at(gen)(t[i]);
      images[idx] = out.index_of(t);
    }
    mono.emplace(gen, Permutation::from_images(std::move(images)));
  }
  out.product = make_cover(degree, covers.front().alphabet, std::move(mono));

  // orbit decomposition of the tuple space
  std::vector<int> comp(degree);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [gen, perm] : out.product.monodromy)
    for (int i = 0; i < degree; ++i) {
      int a = find(i), b = find(perm(i));
      if (a != b) comp[a] = b;
    }
  std::map<int, std::vector<int>> orbits;
  for (int i = 0; i < degree; ++i) orbits[find(i)].push_back(i);
  for (auto& [rep, members] : orbits) {
    if (find(0) == rep)
      out.basepoint_component = static_cast<int>(out.components.size());
    out.components.push_back(members);
  }
  return out;
}

bool word_nonseparating_mod2(const Word& w,
                             const std::vector<std::string>& alphabet) {
  for (const auto& gen : alphabet) {
    int sum = 0;
    for (const auto& l : w.letters)
      if (l.gen == gen) sum ^= 1;
    if (sum) return true;
  }
  return false;
}

}  // namespace lamina
