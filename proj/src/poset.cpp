#include "svtab/poset.hpp"

#include <algorithm>

#include "svtab/error.hpp"

namespace svtab {

namespace {

void check_size(int n) {
  if (n < 0 || n > Poset::kMaxElements) {
    throw Error(Errc::OutOfRange, "posets hold 0.." + std::to_string(Poset::kMaxElements) +
                                      " elements, got " + std::to_string(n));
  }
}

}  // namespace

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers, std::string name) {
  check_size(n);
  Poset p;
  p.n_ = n;
  p.name_ = std::move(name);
  p.below_.assign(n, 0);
  p.above_.assign(n, 0);
  for (auto [x, y] : covers) {
    if (x < 1 || y > n || x >= y) {
      throw Error(Errc::InvalidArgument, "relation " + std::to_string(x) + " < " +
                                             std::to_string(y) + " is not naturally labeled");
    }
    p.below_[y - 1] |= ElementMask(1) << (x - 1);
  }
  // Labels are a linear extension, so one pass in label order closes
  // everything transitively.
  for (int y = 0; y < n; ++y) {
    ElementMask closure = p.below_[y];
    for (int x = 0; x < y; ++x) {
      if ((p.below_[y] >> x) & 1u) closure |= p.below_[x];
    }
    p.below_[y] = closure;
  }
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if ((p.below_[y] >> x) & 1u) p.above_[x] |= ElementMask(1) << y;
    }
  }
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers, "chain" + std::to_string(n));
}

Poset Poset::antichain(int n) { return from_covers(n, {}, "antichain" + std::to_string(n)); }

Poset Poset::young(const SkewShape& shape) {
  const auto cells = shape.cells();
  const int n = static_cast<int>(cells.size());
  check_size(n);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cell a = cells[i], b = cells[j];
      const bool right = a.row == b.row && a.col + 1 == b.col;
      const bool down = a.col == b.col && a.row + 1 == b.row;
      if (right || down) covers.emplace_back(i + 1, j + 1);
    }
  }
  return from_covers(n, covers, "young" + shape.to_string());
}

bool Poset::is_ideal(ElementMask ideal) const {
  for (int e = 0; e < n_; ++e) {
    if (((ideal >> e) & 1u) && (below_[e] & ~ideal)) return false;
  }
  return true;
}

ElementMask Poset::maximal(ElementMask ideal) const {
  ElementMask out = 0;
  for (int e = 0; e < n_; ++e) {
    if (((ideal >> e) & 1u) && !(above_[e] & ideal)) out |= ElementMask(1) << e;
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < y; ++x) {
      if (!less(x, y)) continue;
      // x is covered by y unless some z sits strictly between them.
      if (above_[x] & below_[y]) continue;
      out.emplace_back(x + 1, y + 1);
    }
  }
  return out;
}

std::vector<int> SetValuedLinearExtension::owner_word() const {
  std::vector<int> word(entry_count());
  for (int e = 0; e < size(); ++e) {
    for (int x : sets[e]) word[x - 1] = e;
  }
  return word;
}

std::string SetValuedLinearExtension::to_string() const {
  std::string out;
  for (int e = 0; e < size(); ++e) {
    if (e) out += ' ';
    out += std::to_string(e + 1) + ":{";
    for (std::size_t i = 0; i < sets[e].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(sets[e][i]);
    }
    out += '}';
  }
  return out;
}

SetValuedLinearExtension validate_svle(const Poset& p, std::vector<CellSet> sets) {
  if (static_cast<int>(sets.size()) != p.size()) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(p.size()) + " sets, got " +
                                         std::to_string(sets.size()));
  }
  int entries = 0;
  for (int e = 0; e < p.size(); ++e) {
    if (sets[e].empty()) {
      throw Error(Errc::EmptyCell, "element " + std::to_string(e + 1) + " has an empty set");
    }
    std::sort(sets[e].begin(), sets[e].end());
    entries += static_cast<int>(sets[e].size());
  }
  std::vector<char> seen(entries + 1, 0);
  for (const auto& set : sets) {
    for (int x : set) {
      if (x < 1 || x > entries || seen[x]) {
        throw Error(Errc::NotAPartitionOfRange,
                    "sets do not partition [1.." + std::to_string(entries) + "]");
      }
      seen[x] = 1;
    }
  }
  for (int y = 0; y < p.size(); ++y) {
    for (int x = 0; x < p.size(); ++x) {
      if (p.less(x, y) && sets[x].back() >= sets[y].front()) {
        throw Error(Errc::OrderViolation, "max of element " + std::to_string(x + 1) +
                                              " is not below min of element " +
                                              std::to_string(y + 1));
      }
    }
  }
  const int k = entries - p.size();
  return {std::move(sets), k};
}

SetValuedLinearExtension svle_from_word(const std::vector<int>& owner_word, int n) {
  SetValuedLinearExtension s;
  s.sets.resize(n);
  for (std::size_t x = 0; x < owner_word.size(); ++x) {
    s.sets[owner_word[x]].push_back(static_cast<int>(x) + 1);
  }
  s.k = static_cast<int>(owner_word.size()) - n;
  return s;
}

bool is_linear_extension(const Poset& p, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != p.size()) return false;
  ElementMask placed = 0;
  for (int e : order) {
    if (e < 0 || e >= p.size()) return false;
    const ElementMask bit = ElementMask(1) << e;
    if ((placed & bit) || (p.below(e) & ~placed)) return false;
    placed |= bit;
  }
  return true;
}

SetValuedLinearExtension tableau_to_svle(const SetValuedTableau& t) {
  SetValuedLinearExtension s;
  for (Cell c : t.shape().cells()) s.sets.push_back(t.at(c));
  s.k = t.k();
  return s;
}

SetValuedTableau svle_to_tableau(const SetValuedLinearExtension& s, const SkewShape& shape) {
  if (s.size() != shape.size()) {
    throw Error(Errc::ShapeMismatch, "extension has " + std::to_string(s.size()) +
                                         " elements, shape has " + std::to_string(shape.size()));
  }
  TableauRows rows(shape.rows());
  int e = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.row_length(r); ++c) rows[r].push_back(s.sets[e++]);
  }
  return validate_svsyt(std::move(rows), shape);
}

SetValuedTableau tableau_from_word(const std::vector<int>& owner_word, const SkewShape& shape) {
  return svle_to_tableau(svle_from_word(owner_word, shape.size()), shape);
}

void for_each_linear_extension(const Poset& p,
                               const std::function<void(const std::vector<int>& order)>& visit) {
  const int n = p.size();
  std::vector<int> order(n);
  auto rec = [&](auto&& self, int pos, ElementMask placed) -> void {
    if (pos == n) {
      visit(order);
      return;
    }
    for (int e = 0; e < n; ++e) {
      const ElementMask bit = ElementMask(1) << e;
      if ((placed & bit) || (p.below(e) & ~placed)) continue;
      order[pos] = e;
      self(self, pos + 1, placed | bit);
    }
  };
  rec(rec, 0, ElementMask(0));
}

void for_each_sv_linear_extension(
    const Poset& p, int k, const std::function<void(const SetValuedLinearExtension&)>& visit) {
  for_each_sv_word(p, k, [&](const std::vector<int>& word) { visit(svle_from_word(word, p.size())); });
}

}  // namespace svtab
