#pragma once

#include <compare>
#include <string>
#include <vector>

namespace svtab {

/// One-line notation over 1..m.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int m);
  /// Space-separated one-line notation, e.g. "3 5 1 2".
  static Permutation parse(const std::string& text);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  int operator[](int i) const { return word_[i]; }

  bool avoids_321() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

}  // namespace svtab
