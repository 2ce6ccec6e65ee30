#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "svtab/partition.hpp"
#include "svtab/tableau.hpp"

namespace svtab {

/// Bit set over poset elements (element i is bit i).
using ElementMask = std::uint64_t;

/// Finite naturally labeled poset on at most 64 elements. Element i carries
/// label i + 1, and x < y in the order implies label(x) < label(y).
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  Poset() = default;

  /// Covers as 1-based label pairs (x, y) meaning x is covered by y.
  /// Throws InvalidArgument if some pair has x >= y (not natural).
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                           std::string name = {});
  static Poset chain(int n);
  static Poset antichain(int n);
  /// Cells of the diagram in row-major order; u <= v iff u is weakly
  /// northwest of v.
  static Poset young(const SkewShape& shape);

  int size() const { return n_; }
  const std::string& name() const { return name_; }
  ElementMask below(int e) const { return below_[e]; }
  ElementMask above(int e) const { return above_[e]; }
  bool less(int x, int y) const { return (below_[y] >> x) & 1u; }
  ElementMask all() const { return n_ == 64 ? ~ElementMask(0) : (ElementMask(1) << n_) - 1; }

  bool is_ideal(ElementMask ideal) const;
  /// Maximal elements of an order ideal.
  ElementMask maximal(ElementMask ideal) const;
  /// Number of maximal elements (down-degree) of an order ideal.
  int ddeg(ElementMask ideal) const { return std::popcount(maximal(ideal)); }

  /// Cover pairs (1-based labels), sorted.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.below_ == b.below_;
  }

 private:
  int n_ = 0;
  std::string name_;
  std::vector<ElementMask> below_;  // strictly smaller elements
  std::vector<ElementMask> above_;  // strictly larger elements
};

/// order[j] is the element at position j + 1.
struct LinearExtension {
  std::vector<int> order;
  friend bool operator==(const LinearExtension&, const LinearExtension&) = default;
  friend auto operator<=>(const LinearExtension&, const LinearExtension&) = default;
};

/// sets[e] is the sorted image of element e.
struct SetValuedLinearExtension {
  std::vector<CellSet> sets;
  int k = 0;

  int size() const { return static_cast<int>(sets.size()); }
  int entry_count() const { return size() + k; }
  /// owner_word()[x - 1] is the element whose set holds x.
  std::vector<int> owner_word() const;
  std::string to_string() const;

  friend bool operator==(const SetValuedLinearExtension&, const SetValuedLinearExtension&) = default;
  friend auto operator<=>(const SetValuedLinearExtension&, const SetValuedLinearExtension&) = default;
};

/// Validates the four defining conditions; errors as validate_svsyt.
SetValuedLinearExtension validate_svle(const Poset& p, std::vector<CellSet> sets);
SetValuedLinearExtension svle_from_word(const std::vector<int>& owner_word, int n);

bool is_linear_extension(const Poset& p, const std::vector<int>& order);

/// Row-major correspondence between fillings of a shape and set-valued
/// linear extensions of Poset::young(shape).
SetValuedLinearExtension tableau_to_svle(const SetValuedTableau& t);
SetValuedTableau svle_to_tableau(const SetValuedLinearExtension& s, const SkewShape& shape);
SetValuedTableau tableau_from_word(const std::vector<int>& owner_word, const SkewShape& shape);

/// Visits every linear extension in lexicographic order of `order`.
void for_each_linear_extension(const Poset& p,
                               const std::function<void(const std::vector<int>& order)>& visit);

/// Depth-first engine behind every set-valued enumeration: entries
/// 1, 2, ..., n+k are placed in turn, either opening an element whose lower
/// covers are all open or joining an open element none of whose upper
/// elements is open yet. Words come out in lexicographic order, each exactly
/// once. `visit` receives the owner word (0-based elements).
template <class Visit>
void for_each_sv_word(const Poset& p, int k, Visit&& visit) {
  const int n = p.size();
  const int total = n + k;
  std::vector<int> word(total);
  if (k < 0) return;
  if (n == 0) {
    if (k == 0) visit(word);
    return;
  }
  auto rec = [&](auto&& self, int pos, ElementMask open, int extras) -> void {
    if (pos == total) {
      visit(word);
      return;
    }
    const int unopened = n - std::popcount(open);
    const bool may_open = unopened > 0;
    const bool may_extend = extras < k && open != 0;
    for (int e = 0; e < n; ++e) {
      const ElementMask bit = ElementMask(1) << e;
      if (open & bit) {
        if (!may_extend || (p.above(e) & open)) continue;
        word[pos] = e;
        self(self, pos + 1, open, extras + 1);
      } else {
        if (!may_open || (p.below(e) & ~open)) continue;
        word[pos] = e;
        self(self, pos + 1, open | bit, extras);
      }
    }
  };
  rec(rec, 0, ElementMask(0), 0);
}

/// Materializing visitor over Lin^{+k}(P), lexicographic in the owner word.
void for_each_sv_linear_extension(const Poset& p, int k,
                                  const std::function<void(const SetValuedLinearExtension&)>& visit);

}  // namespace svtab
