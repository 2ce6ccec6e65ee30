#include "svtab/stats.hpp"

#include "svtab/error.hpp"

namespace svtab {

namespace {

std::vector<char> extra_flags(const std::vector<int>& word, int n) {
  std::vector<char> extra(word.size() + 2, 0);
  std::vector<char> seen(n, 0);
  for (std::size_t x = 0; x < word.size(); ++x) {
    if (seen[word[x]]) extra[x + 1] = 1;
    seen[word[x]] = 1;
  }
  return extra;
}

std::vector<int> tableau_word(const SetValuedTableau& t) {
  return tableau_to_svle(t).owner_word();
}

}  // namespace

DescentData descent_data(const std::vector<int>& owner_word, int n) {
  const int total = static_cast<int>(owner_word.size());
  const auto extra = extra_flags(owner_word, n);
  DescentData out;
  int first = 1;
  for (int j = 1; j <= total; ++j) {
    if (extra[j]) {
      out.extras.push_back(j);
      out.pieces.emplace_back(first, j - 1);
      first = j;
    }
    const bool split_after = j < total && extra[j + 1];
    const bool natural = j < total && !split_after && owner_word[j] < owner_word[j - 1];
    if (extra[j] || natural) out.descents.push_back(j);
  }
  out.pieces.emplace_back(first, total);
  return out;
}

std::vector<int> descent_set_plus_k(const std::vector<int>& owner_word, int n) {
  return descent_data(owner_word, n).descents;
}

int comaj_plus_k(const std::vector<int>& owner_word, int n) {
  const int total = static_cast<int>(owner_word.size());
  const auto extra = extra_flags(owner_word, n);
  int sum = 0;
  for (int j = 1; j <= total; ++j) {
    if (extra[j] || (j < total && !extra[j + 1] && owner_word[j] < owner_word[j - 1])) {
      sum += total - j;
    }
  }
  return sum;
}

std::vector<int> descent_set_plus_k(const SetValuedTableau& t) {
  return descent_set_plus_k(tableau_word(t), t.cell_count());
}

std::vector<int> descent_set_plus_k(const SetValuedLinearExtension& s) {
  return descent_set_plus_k(s.owner_word(), s.size());
}

int comaj_plus_k(const SetValuedTableau& t) { return comaj_plus_k(tableau_word(t), t.cell_count()); }

int comaj_plus_k(const SetValuedLinearExtension& s) { return comaj_plus_k(s.owner_word(), s.size()); }

std::vector<int> descent_set(const LinearExtension& t) {
  std::vector<int> out;
  for (std::size_t j = 1; j < t.order.size(); ++j) {
    if (t.order[j] < t.order[j - 1]) out.push_back(static_cast<int>(j));
  }
  return out;
}

int comaj(const LinearExtension& t) {
  const int n = static_cast<int>(t.order.size());
  int sum = 0;
  for (int j : descent_set(t)) sum += n - j;
  return sum;
}

std::vector<int> inner_valleys(const Permutation& pi) {
  std::vector<int> out;
  for (int j = 1; j + 1 < pi.size(); ++j) {
    if (pi[j - 1] > pi[j] && pi[j] < pi[j + 1]) out.push_back(j + 1);
  }
  return out;
}

std::vector<int> inner_peaks(const Permutation& pi) {
  std::vector<int> out;
  for (int j = 1; j + 1 < pi.size(); ++j) {
    if (pi[j - 1] < pi[j] && pi[j] > pi[j + 1]) out.push_back(j + 1);
  }
  return out;
}

std::vector<int> rl_minima(const Permutation& pi) {
  std::vector<int> out;
  int suffix_min = pi.size() + 1;
  for (int j = pi.size() - 1; j >= 0; --j) {
    if (pi[j] < suffix_min) {
      suffix_min = pi[j];
      out.push_back(pi[j]);
    }
  }
  return {out.rbegin(), out.rend()};
}

DyckType dyck_type_of_top_row(const std::vector<int>& top, int n) {
  DyckType out;
  out.m = static_cast<int>(top.size());
  out.mu.assign(n + 1, 0);
  for (std::size_t i = 0; i < top.size(); ++i) {
    const int next = i + 1 < top.size() ? top[i + 1] : n;
    const int c = next - top[i];
    if (c < 1 || c > n) throw Error(Errc::InvalidArgument, "top row is not increasing below n");
    out.composition.push_back(c);
    ++out.mu[c];
  }
  return out;
}

DyckType dyck_type(const SetValuedTableau& t) {
  if (t.shape().rows() != 2 || !t.shape().is_straight()) {
    throw Error(Errc::ShapeNotTwoRowRectangular, "dyck_type needs a two-row tableau");
  }
  return dyck_type_of_top_row(t.row_entries(0), t.entry_count());
}

std::vector<QPoly> q_narayana_row(int n) {
  std::vector<ExponentTally> by_m(n + 2);
  const int total = n + 1;
  for (int b = 1; 2 * b <= total; ++b) {
    const Poset p = Poset::young(Partition::rectangle(2, b));
    for_each_sv_word(p, total - 2 * b, [&](const std::vector<int>& word) {
      int top = 0;
      for (int e : word) top += e < b;
      by_m[top].add(comaj_plus_k(word, 2 * b));
    });
  }
  std::vector<QPoly> out;
  for (const auto& tally : by_m) out.push_back(tally.to_qpoly());
  return out;
}

QPoly q_narayana_tilde(int n, int m) {
  if (n < 1) throw Error(Errc::OutOfRange, "q_narayana_tilde needs n >= 1");
  const auto row = q_narayana_row(n);
  if (m < 0 || m >= static_cast<int>(row.size())) return {};
  return row[m];
}

QPoly q_catalan_tilde(int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "q_catalan_tilde needs n >= 1");
  QPoly sum;
  for (const QPoly& p : q_narayana_row(n)) sum += p;
  return sum;
}

int ddeg(const Poset& p, ElementMask ideal) {
  if (!p.is_ideal(ideal)) throw Error(Errc::InvalidArgument, "not an order ideal");
  return p.ddeg(ideal);
}

}  // namespace svtab
