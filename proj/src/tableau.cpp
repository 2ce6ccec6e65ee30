#include "svtab/tableau.hpp"

#include <algorithm>

#include "svtab/error.hpp"

namespace svtab {

namespace {

std::string cell_name(Cell c) {
  return "(" + std::to_string(c.row + 1) + "," + std::to_string(c.col + 1) + ")";
}

std::string set_string(const CellSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  return out + "}";
}

}  // namespace

const CellSet& SetValuedTableau::at(Cell cell) const {
  if (!shape_.contains(cell)) {
    throw Error(Errc::OutOfRange, "cell " + cell_name(cell) + " not in shape");
  }
  return rows_[cell.row][cell.col - shape_.row_begin(cell.row)];
}

std::vector<Cell> SetValuedTableau::owners() const {
  std::vector<Cell> owner(entry_count() + 1);
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = shape_.row_begin(r); c < shape_.row_end(r); ++c) {
      for (int x : rows_[r][c - shape_.row_begin(r)]) owner[x] = {r, c};
    }
  }
  return owner;
}

std::vector<int> SetValuedTableau::row_entries(int row) const {
  std::vector<int> out;
  if (row < 0 || row >= shape_.rows()) return out;
  for (const CellSet& set : rows_[row]) out.insert(out.end(), set.begin(), set.end());
  return out;
}

std::string SetValuedTableau::to_string() const {
  std::string out = "[";
  for (int r = 0; r < shape_.rows(); ++r) {
    if (r) out += " / ";
    for (int c = 0; c < shape_.row_end(r); ++c) {
      if (c) out += ',';
      out += c < shape_.row_begin(r) ? "_" : set_string(rows_[r][c - shape_.row_begin(r)]);
    }
  }
  return out + "]";
}

SetValuedTableau validate_svsyt(TableauRows rows, const SkewShape& shape) {
  if (static_cast<int>(rows.size()) != shape.rows()) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(shape.rows()) + " rows, got " +
                                         std::to_string(rows.size()));
  }
  int entries = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape.row_length(r)) {
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(r + 1) + " has " +
                                           std::to_string(rows[r].size()) + " cells, shape " +
                                           shape.to_string() + " wants " +
                                           std::to_string(shape.row_length(r)));
    }
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      CellSet& set = rows[r][i];
      if (set.empty()) {
        throw Error(Errc::EmptyCell,
                    "cell " + cell_name({r, shape.row_begin(r) + static_cast<int>(i)}) + " is empty");
      }
      std::sort(set.begin(), set.end());
      entries += static_cast<int>(set.size());
    }
  }

  std::vector<char> seen(entries + 1, 0);
  for (const auto& row : rows) {
    for (const CellSet& set : row) {
      for (int x : set) {
        if (x < 1 || x > entries || seen[x]) {
          throw Error(Errc::NotAPartitionOfRange,
                      "entries do not form a set partition of [1.." + std::to_string(entries) + "]");
        }
        seen[x] = 1;
      }
    }
  }

  // Right and lower neighbours suffice: a northwest pair in a skew shape is
  // joined by a right-then-down chain of cells inside the shape.
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = shape.row_begin(r); c < shape.row_end(r); ++c) {
      const CellSet& here = rows[r][c - shape.row_begin(r)];
      for (Cell next : {Cell{r, c + 1}, Cell{r + 1, c}}) {
        if (!shape.contains(next)) continue;
        const CellSet& there = rows[next.row][next.col - shape.row_begin(next.row)];
        if (here.back() >= there.front()) {
          throw Error(Errc::OrderViolation, "max of cell " + cell_name({r, c}) +
                                                " is not below min of cell " + cell_name(next));
        }
      }
    }
  }
  const int k = entries - shape.size();
  return SetValuedTableau(shape, std::move(rows), k);
}

SetValuedTableau make_tableau(TableauRows rows) {
  std::vector<int> lengths;
  for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
  while (!lengths.empty() && lengths.back() == 0) {
    lengths.pop_back();
    rows.pop_back();
  }
  return validate_svsyt(std::move(rows), SkewShape(Partition(lengths)));
}

}  // namespace svtab
