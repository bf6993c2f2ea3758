#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lamina/permutation.hpp"

namespace lamina {

/// Word in the free group over a cover's alphabet.
struct Word {
  struct Letter {
    std::string gen;
    int exp = 1;  // +1 or -1
    bool operator==(const Letter&) const = default;
  };
  std::vector<Letter> letters;

  /// Accepts space separated tokens ("a b a^-1 b^-1") or contiguous single
  /// letters with ' as inverse mark ("aba'b'").
  static Word parse(std::string_view text);
  std::string str() const;
  Word inverse() const;
  Word conjugated_by(const Word& g) const;  // g w g^-1
  bool operator==(const Word&) const = default;
};

/// Finite cover of a bouquet of circles: one permutation per generator,
/// acting on the d sheets. A cover is connected iff the action is
/// transitive.
struct PermCover {
  int degree = 0;
  std::vector<std::string> alphabet;
  std::map<std::string, Permutation> monodromy;

  bool transitive() const;
  bool operator==(const PermCover&) const = default;
};

PermCover make_cover(int degree, std::vector<std::string> alphabet,
                     std::map<std::string, Permutation> monodromy);

/// Composes the monodromy images right-to-left so that the first letter of
/// the word acts first; the empty word maps to the identity.
Permutation evaluate_word(const PermCover& c, const Word& w);

/// Degrees of the lifts of the closed curve spelt by `w`: the multiset of
/// cycle lengths of its monodromy image. Always sums to the cover degree.
struct LiftSpectrum {
  std::vector<int> degrees;  // ascending
  int total() const;
  std::string str() const;
  bool operator==(const LiftSpectrum&) const = default;
};

LiftSpectrum lift_spectrum(const PermCover& c, const Word& w);

/// Product of covers of the same bouquet: monodromy acts coordinatewise on
/// the full tuple space. The fiber product may be disconnected, so the
/// orbit decomposition is returned with it.
struct ProductCover {
  PermCover product;
  std::vector<int> factor_degrees;
  std::vector<std::vector<int>> components;  // tuple orbits, sorted
  int basepoint_component = -1;              // orbit of (1,...,1)

  std::vector<int> tuple_of(int index) const;  // mixed-radix digits
  int index_of(const std::vector<int>& tuple) const;
};

ProductCover product_cover(const std::vector<PermCover>& covers);

/// Nonzero class in first homology mod 2 certifies a non-separating curve.
bool word_nonseparating_mod2(const Word& w,
                             const std::vector<std::string>& alphabet);

}  // namespace lamina
