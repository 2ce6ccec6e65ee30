#include "svtab/partition.hpp"

#include <numeric>
#include <sstream>

#include "svtab/error.hpp"

namespace svtab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw Error(Errc::InvalidArgument, "partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw Error(Errc::InvalidArgument, "partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::two_row(int top, int bottom) {
  if (bottom < 0 || top < bottom) {
    throw Error(Errc::InvalidArgument, "two-row shape needs top >= bottom >= 0");
  }
  std::vector<int> parts;
  if (top > 0) parts.push_back(top);
  if (bottom > 0) parts.push_back(bottom);
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) throw Error(Errc::InvalidArgument, "negative rectangle");
  if (cols == 0) return Partition();
  return Partition(std::vector<int>(rows, cols));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(value);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "bad partition part '" + item + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int row) const {
  if (row < 0 || row >= length()) return 0;
  return parts_[row];
}

Partition Partition::conjugate() const {
  std::vector<int> result;
  if (parts_.empty()) return Partition();
  for (int col = 0; col < parts_.front(); ++col) {
    int height = 0;
    while (height < length() && parts_[height] > col) ++height;
    result.push_back(height);
  }
  return Partition(std::move(result));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > (*this)[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  if (n < 0) return out;
  partitions_rec(n, n, current, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) {
    throw Error(Errc::InvalidArgument,
                "inner shape " + inner_.to_string() + " does not fit in " + outer_.to_string());
  }
}

bool SkewShape::contains(Cell cell) const {
  return cell.row >= 0 && cell.row < rows() && cell.col >= row_begin(cell.row) &&
         cell.col < row_end(cell.row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(size());
  for (int r = 0; r < rows(); ++r) {
    for (int c = row_begin(r); c < row_end(r); ++c) out.push_back({r, c});
  }
  return out;
}

std::string SkewShape::to_string() const {
  if (is_straight()) return "(" + outer_.to_string() + ")";
  return "(" + outer_.to_string() + ")/(" + inner_.to_string() + ")";
}

}  // namespace svtab
