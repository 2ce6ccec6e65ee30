#pragma once

#include <compare>
#include <string>
#include <vector>

namespace svtab {

/// Integer partition with positive, weakly decreasing parts. The empty
/// partition is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Two-row shape (top, bottom); a zero bottom row yields a one-row partition.
  static Partition two_row(int top, int bottom);
  static Partition rectangle(int rows, int cols);
  /// Parses "3,1" (empty string gives the empty partition).
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Row length, zero beyond the last row.
  int operator[](int row) const;

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// outer / inner. Straight shapes have an empty inner partition.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});
  SkewShape(const std::vector<int>& outer) : SkewShape(Partition(outer)) {}
  SkewShape(std::initializer_list<int> outer) : SkewShape(Partition(outer)) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_straight() const { return inner_.empty(); }
  int rows() const { return outer_.length(); }
  int row_begin(int row) const { return inner_[row]; }
  int row_end(int row) const { return outer_[row]; }
  int row_length(int row) const { return outer_[row] - inner_[row]; }
  int size() const { return outer_.size() - inner_.size(); }
  bool contains(Cell cell) const;

  /// Cells in row-major order; the index of a cell in this list is its
  /// natural label minus one.
  std::vector<Cell> cells() const;
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

}  // namespace svtab
