#include "svtab/biject.hpp"

#include <algorithm>

#include "svtab/error.hpp"

namespace svtab {

namespace {

int rectangle_width(const SetValuedTableau& t) {
  const SkewShape& s = t.shape();
  if (!s.is_straight() || s.rows() != 2 || s.row_length(0) != s.row_length(1)) {
    throw Error(Errc::ShapeNotTwoRowRectangular, "shape " + s.to_string() + " is not 2 x b");
  }
  return s.row_length(0);
}

}  // namespace

Permutation alpha(const SetValuedTableau& t) {
  const int b = rectangle_width(t);
  const int n = t.entry_count();
  std::vector<int> word;
  word.reserve(n - 1);
  for (int c = 0; c < b; ++c) {
    const CellSet& top = t.at({0, c});
    const CellSet& bottom = t.at({1, c});
    word.insert(word.end(), top.begin(), top.end() - 1);
    for (int x : bottom) {
      if (x != n) word.push_back(x);
    }
    word.push_back(top.back());
  }
  return Permutation(std::move(word));
}

SetValuedTableau alpha_inv(const Permutation& pi) {
  if (!pi.avoids_321()) throw Error(Errc::Not321Avoiding, pi.to_string() + " contains 321");
  const int m = pi.size();
  if (m == 0) throw Error(Errc::InvalidArgument, "alpha_inv needs a nonempty permutation");
  std::vector<char> rl_min(m, 0);
  int suffix_min = m + 1;
  for (int j = m - 1; j >= 0; --j) {
    if (pi[j] < suffix_min) {
      rl_min[j] = 1;
      suffix_min = pi[j];
    }
  }
  TableauRows rows(2);
  CellSet top, bottom;
  for (int j = 0; j < m; ++j) {
    (rl_min[j] ? top : bottom).push_back(pi[j]);
    const bool valley = j > 0 && j < m - 1 && pi[j - 1] > pi[j] && pi[j] < pi[j + 1];
    if (valley || j == m - 1) {
      if (j == m - 1) bottom.push_back(m + 1);
      rows[0].push_back(std::move(top));
      rows[1].push_back(std::move(bottom));
      top.clear();
      bottom.clear();
    }
  }
  const int b = static_cast<int>(rows[0].size());
  return validate_svsyt(std::move(rows), Partition::rectangle(2, b));
}

ColoredPath beta_two_row(const SetValuedTableau& t) {
  const SkewShape& s = t.shape();
  if (!s.is_straight() || s.rows() > 2) {
    throw Error(Errc::ShapeMismatch, "shape " + s.to_string() + " has more than two rows");
  }
  std::vector<Step> steps(t.entry_count());
  for (int r = 0; r < s.rows(); ++r) {
    for (const CellSet& cell : t.rows()[r]) {
      for (std::size_t i = 0; i < cell.size(); ++i) {
        const bool minimal = i == 0;
        steps[cell[i] - 1] = r == 0 ? (minimal ? Step::U : Step::u) : (minimal ? Step::D : Step::d);
      }
    }
  }
  return ColoredPath(std::move(steps));
}

ColoredPath beta(const SetValuedTableau& t) {
  rectangle_width(t);
  return beta_two_row(t);
}

SetValuedTableau beta_inv_ballotlike(const ColoredPath& p) {
  if (!in_family(p, PathFamily::ballotlike)) {
    throw Error(Errc::InvalidArgument, p.to_string() + " is not ballotlike");
  }
  TableauRows rows(2);
  for (int j = 0; j < p.length(); ++j) {
    const int x = j + 1;
    switch (p[j]) {
      case Step::U: rows[0].push_back({x}); break;
      case Step::u: rows[0].back().push_back(x); break;
      case Step::D: rows[1].push_back({x}); break;
      case Step::d: rows[1].back().push_back(x); break;
    }
  }
  const int top = static_cast<int>(rows[0].size());
  const int bottom = static_cast<int>(rows[1].size());
  if (bottom == 0) rows.pop_back();
  if (top == 0) rows.pop_back();
  return validate_svsyt(std::move(rows), Partition::two_row(top, bottom));
}

SetValuedTableau beta_inv(const ColoredPath& p) {
  if (!in_family(p, PathFamily::motzET) || p.length() < 2) {
    throw Error(Errc::NotInMotzET, "'" + p.to_string() + "' is not in motzET");
  }
  return beta_inv_ballotlike(p);
}

ColoredPath phi(const ColoredPath& p) {
  if (!in_family(p, PathFamily::motzT) || p.length() < 1) {
    throw Error(Errc::NotInMotzT, "'" + p.to_string() + "' is not in motzT");
  }
  std::vector<Step> steps = p.steps();
  auto first_down = std::find(steps.begin(), steps.end(), Step::D);
  if (first_down == steps.end()) {
    steps.pop_back();  // all u
    return ColoredPath(std::move(steps));
  }
  const auto i = first_down - steps.begin();
  const Step before = steps[i - 1];
  if (before != Step::U && before != Step::u) {
    throw Error(Errc::NotInMotzT, "step before the first D is neither U nor u");
  }
  steps[i - 1] = before == Step::u ? Step::D : Step::d;
  steps.erase(steps.begin() + i);
  return ColoredPath(std::move(steps));
}

ColoredPath phi_inv(const ColoredPath& p) {
  if (p.final_height() != 0) {
    throw Error(Errc::InvalidArgument, "'" + p.to_string() + "' is not a Motzkin path");
  }
  std::vector<Step> steps = p.steps();
  auto it = std::find_if(steps.begin(), steps.end(),
                         [](Step s) { return s == Step::D || s == Step::d; });
  if (it == steps.end()) {
    steps.push_back(Step::u);
  } else if (*it == Step::D) {
    it = steps.insert(it, Step::u);
  } else {
    *it = Step::D;
    steps.insert(it, Step::U);
  }
  return ColoredPath(std::move(steps));
}

Triple decompose(const Poset& p, const SetValuedLinearExtension& s) {
  std::vector<CellSet> sets = s.sets;
  const int k = s.k;
  Triple out;
  out.cuts.assign(k, 0);
  out.picks.assign(k, 0);
  for (int i = k; i >= 1; --i) {
    int owner = -1, x = 0;
    for (int e = 0; e < p.size(); ++e) {
      if (sets[e].size() > 1 && sets[e].back() > x) {
        x = sets[e].back();
        owner = e;
      }
    }
    sets[owner].pop_back();
    for (auto& set : sets) {
      for (int& y : set) {
        if (y > x) --y;
      }
    }
    out.cuts[i - 1] = x - i;
    out.picks[i - 1] = owner;
  }
  out.T.order.assign(p.size(), 0);
  for (int e = 0; e < p.size(); ++e) out.T.order[sets[e].front() - 1] = e;
  return out;
}

std::vector<int> compose_word(const std::vector<int>& order, const std::vector<int>& cuts,
                              const std::vector<int>& picks) {
  std::vector<int> word = order;
  word.reserve(order.size() + cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    // Value t_i + i (1-based i) goes to the pick; larger values shift up.
    word.insert(word.begin() + cuts[i] + static_cast<int>(i), picks[i]);
  }
  return word;
}

SetValuedLinearExtension compose(const Poset& p, const Triple& triple) {
  const int n = p.size();
  if (!is_linear_extension(p, triple.T.order)) {
    throw Error(Errc::InvalidArgument, "T is not a linear extension");
  }
  if (triple.cuts.size() != triple.picks.size()) {
    throw Error(Errc::InvalidArgument, "cut and pick vectors differ in length");
  }
  int previous = 1;
  for (std::size_t i = 0; i < triple.cuts.size(); ++i) {
    const int t = triple.cuts[i];
    if (t < previous || t > n) {
      throw Error(Errc::InvalidArgument, "cuts must satisfy 1 <= t_1 <= ... <= t_k <= n");
    }
    previous = t;
    ElementMask ideal = 0;
    for (int j = 0; j < t; ++j) ideal |= ElementMask(1) << triple.T.order[j];
    const int pick = triple.picks[i];
    if (pick < 0 || pick >= n || !((p.maximal(ideal) >> pick) & 1u)) {
      throw Error(Errc::InvalidPick, "pick " + std::to_string(pick + 1) +
                                         " is not maximal among the first " + std::to_string(t) +
                                         " elements of T");
    }
  }
  const auto word = compose_word(triple.T.order, triple.cuts, triple.picks);
  return validate_svle(p, svle_from_word(word, n).sets);
}

TableauTriple decompose(const SetValuedTableau& s) {
  const SkewShape& shape = s.shape();
  const Poset p = Poset::young(shape);
  const Triple triple = decompose(p, tableau_to_svle(s));
  const auto cells = shape.cells();
  std::vector<CellSet> singles(p.size());
  for (int j = 0; j < p.size(); ++j) singles[triple.T.order[j]] = {j + 1};
  TableauTriple out{svle_to_tableau({singles, 0}, shape), triple.cuts, {}};
  for (int e : triple.picks) out.picks.push_back(cells[e]);
  return out;
}

SetValuedTableau compose(const TableauTriple& triple) {
  const SkewShape& shape = triple.T.shape();
  if (!triple.T.is_standard()) throw Error(Errc::InvalidArgument, "T must be standard");
  const Poset p = Poset::young(shape);
  const auto cells = shape.cells();
  Triple raw;
  raw.cuts = triple.cuts;
  raw.T.order.assign(p.size(), 0);
  const auto sets = tableau_to_svle(triple.T).sets;
  for (int e = 0; e < p.size(); ++e) raw.T.order[sets[e].front() - 1] = e;
  for (Cell c : triple.picks) {
    auto it = std::find(cells.begin(), cells.end(), c);
    if (it == cells.end()) throw Error(Errc::InvalidPick, "picked cell is outside the shape");
    raw.picks.push_back(static_cast<int>(it - cells.begin()));
  }
  return svle_to_tableau(compose(p, raw), shape);
}

std::vector<Partition> chain_shapes(const TableauTriple& triple) {
  const SkewShape& shape = triple.T.shape();
  if (!shape.is_straight()) throw Error(Errc::ShapeMismatch, "chain shapes need a straight shape");
  std::vector<Partition> out;
  for (int t : triple.cuts) {
    std::vector<int> parts;
    for (int r = 0; r < shape.rows(); ++r) {
      int len = 0;
      for (const CellSet& cell : triple.T.rows()[r]) len += cell.front() <= t;
      if (len > 0) parts.push_back(len);
    }
    out.emplace_back(parts);
  }
  return out;
}

SetValuedTableau rotate_complement(const SetValuedTableau& t) {
  const SkewShape& s = t.shape();
  const int total = t.entry_count();
  auto flip = [&](const CellSet& cell) {
    CellSet out;
    for (auto it = cell.rbegin(); it != cell.rend(); ++it) out.push_back(total + 1 - *it);
    return out;
  };
  if (s.is_straight() && s.rows() >= 1 && s.rows() <= 2 && s.outer()[0] == s.outer()[1] + 1) {
    const int b = s.outer()[1];
    TableauRows rows(2);
    for (int c = b - 1; c >= 0; --c) rows[0].push_back(flip(t.at({1, c})));
    for (int c = b; c >= 0; --c) rows[1].push_back(flip(t.at({0, c})));
    return validate_svsyt(std::move(rows), SkewShape(Partition{b + 1, b + 1}, Partition{1}));
  }
  if (s.rows() == 2 && s.inner() == Partition{1} && s.outer()[0] == s.outer()[1]) {
    const int b = s.outer()[0] - 1;
    TableauRows rows(2);
    for (int c = b; c >= 0; --c) rows[0].push_back(flip(t.at({1, c})));
    for (int c = b; c >= 1; --c) rows[1].push_back(flip(t.at({0, c})));
    if (b == 0) rows.pop_back();
    return validate_svsyt(std::move(rows), Partition::two_row(b + 1, b));
  }
  throw Error(Errc::ShapeMismatch, "rotation needs shape (b+1,b) or (b+1,b+1)/(1), got " + s.to_string());
}

}  // namespace svtab
