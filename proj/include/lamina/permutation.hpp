#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lamina {

/// Permutation of {0..d-1}. I/O uses 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity

  static Permutation from_images(std::vector<int> images);
  /// Cycles given 1-based, e.g. {{1},{2,3,4,5}}; fixed points may be omitted.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  /// Parses "(1)(2 3 4 5)" or "id"; entries 1-based, comma or space separated.
  static std::optional<Permutation> parse_cycles(int degree,
                                                 std::string_view text);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }

  /// this after `first`: (a.after(b))(x) = a(b(x)).
  Permutation after(const Permutation& first) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles sorted by least element, fixed points included.
  std::vector<std::vector<int>> cycles() const;
  /// Multiset of cycle lengths, ascending.
  std::vector<int> cycle_type() const;
  std::vector<int> fixed_points() const;
  std::string cycle_string() const;  // 1-based

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  const std::vector<int>& images() const { return images_; }

 private:
  std::vector<int> images_;
};

}  // namespace lamina
