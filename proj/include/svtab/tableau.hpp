#pragma once

#include <compare>
#include <string>
#include <vector>

#include "svtab/partition.hpp"

namespace svtab {

/// Strictly increasing entries of one cell.
using CellSet = std::vector<int>;

/// Row-major cell contents; row r holds the cells of columns
/// [inner[r], outer[r]) in order.
using TableauRows = std::vector<std::vector<CellSet>>;

/// Set-valued standard Young tableau of a (possibly skew) shape. Instances are
/// only produced by validate_svsyt, so every object satisfies the
/// partition-of-[n+k] and northwest-order invariants.
class SetValuedTableau {
 public:
  const SkewShape& shape() const { return shape_; }
  const TableauRows& rows() const { return rows_; }
  const CellSet& at(Cell cell) const;
  int k() const { return k_; }
  int cell_count() const { return shape_.size(); }
  int entry_count() const { return shape_.size() + k_; }
  bool is_standard() const { return k_ == 0; }

  /// Cell holding each entry, indexed 1..entry_count() (slot 0 unused).
  std::vector<Cell> owners() const;
  /// Sorted entries of a row.
  std::vector<int> row_entries(int row) const;

  /// "[{1,2},{3} / {4}]"; skew cells left of the shape print as "_".
  std::string to_string() const;

  friend bool operator==(const SetValuedTableau&, const SetValuedTableau&) = default;
  friend auto operator<=>(const SetValuedTableau&, const SetValuedTableau&) = default;

 private:
  friend SetValuedTableau validate_svsyt(TableauRows rows, const SkewShape& shape);
  SetValuedTableau(SkewShape shape, TableauRows rows, int k)
      : shape_(std::move(shape)), rows_(std::move(rows)), k_(k) {}

  SkewShape shape_;
  TableauRows rows_;
  int k_ = 0;
};

/// Checks a raw filling against a shape. Cell sets are sorted on the way in.
/// Errors: ShapeMismatch (rows do not match the shape), EmptyCell,
/// NotAPartitionOfRange, OrderViolation (message names the offending pair).
SetValuedTableau validate_svsyt(TableauRows rows, const SkewShape& shape);

/// Straight-shape convenience: the shape is read off the row lengths.
SetValuedTableau make_tableau(TableauRows rows);

}  // namespace svtab
