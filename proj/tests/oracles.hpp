#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// algorithms; each family is produced by exhaustive filtering of a larger,
// trivially complete search space.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  u64 r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

inline u64 catalan(int n) {
  std::vector<u64> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = 0; j < m; ++j) c[m] += c[j] * c[m - 1 - j];
  }
  return c[n];
}

// Visits every word of the given length over {0, ..., letters-1}.
inline void for_each_word(int letters, int length, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> w(length, 0);
  while (true) {
    visit(w);
    int j = length - 1;
    while (j >= 0 && w[j] == letters - 1) w[j--] = 0;
    if (j < 0) return;
    ++w[j];
  }
}

// ---- set-valued fillings of a straight shape ----

struct Cell {
  int row, col;
};

inline std::vector<Cell> cells_of(const std::vector<int>& shape, const std::vector<int>& inner = {}) {
  std::vector<Cell> out;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
    const int from = r < static_cast<int>(inner.size()) ? inner[r] : 0;
    for (int c = from; c < shape[r]; ++c) out.push_back({r, c});
  }
  return out;
}

// owner[x-1] = index (into cells) of the cell holding x. Valid when every
// cell is used and max(u) < min(v) for u weakly northwest of v.
inline bool valid_filling(const std::vector<Cell>& cells, const std::vector<int>& owner) {
  const int m = static_cast<int>(cells.size());
  std::vector<int> lo(m, 1 << 30), hi(m, -1);
  for (int x = 0; x < static_cast<int>(owner.size()); ++x) {
    lo[owner[x]] = std::min(lo[owner[x]], x + 1);
    hi[owner[x]] = std::max(hi[owner[x]], x + 1);
  }
  for (int a = 0; a < m; ++a) {
    if (hi[a] < 0) return false;
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (cells[a].row <= cells[b].row && cells[a].col <= cells[b].col && hi[a] > lo[b]) return false;
    }
  }
  return true;
}

// Rows of cell sets in row-major order, the same nesting as TableauRows.
using Rows = std::vector<std::vector<std::vector<int>>>;

inline Rows rows_of(const std::vector<int>& shape, const std::vector<Cell>& cells, const std::vector<int>& owner,
                    const std::vector<int>& inner = {}) {
  Rows rows(shape.size());
  for (int r = 0; r < static_cast<int>(shape.size()); ++r) {
    const int from = r < static_cast<int>(inner.size()) ? inner[r] : 0;
    rows[r].resize(shape[r] - from);
  }
  for (int x = 0; x < static_cast<int>(owner.size()); ++x) {
    const Cell c = cells[owner[x]];
    const int from = c.row < static_cast<int>(inner.size()) ? inner[c.row] : 0;
    rows[c.row][c.col - from].push_back(x + 1);
  }
  return rows;
}

// Every set-valued standard filling of shape/inner with k extra entries.
inline std::vector<Rows> svsyt(const std::vector<int>& shape, int k, const std::vector<int>& inner = {}) {
  const auto cells = cells_of(shape, inner);
  std::vector<Rows> out;
  const int m = static_cast<int>(cells.size());
  if (m == 0) {
    if (k == 0) out.push_back(Rows(shape.size()));
    return out;
  }
  for_each_word(m, m + k, [&](const std::vector<int>& owner) {
    if (valid_filling(cells, owner)) out.push_back(rows_of(shape, cells, owner, inner));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 count_svsyt(const std::vector<int>& shape, int k, const std::vector<int>& inner = {}) {
  return svsyt(shape, k, inner).size();
}

// Natural-label descent set of a filling of a straight shape: within the
// pieces cut at the non-minimal entries, j is a descent when j+1 sits in a
// cell of smaller row-major label. The non-minimal entries are descents too.
inline std::set<int> descent_set(const Rows& rows) {
  std::map<int, int> label;  // entry -> row-major cell label
  std::set<int> non_minimal;
  int next = 0, total = 0;
  for (const auto& row : rows) {
    for (const auto& cell : row) {
      for (std::size_t j = 0; j < cell.size(); ++j) {
        label[cell[j]] = next;
        if (j > 0) non_minimal.insert(cell[j]);
        ++total;
      }
      ++next;
    }
  }
  std::set<int> des(non_minimal);
  for (int j = 1; j < total; ++j) {
    // j and j+1 lie in the same piece unless j+1 is a cut point
    if (non_minimal.count(j + 1)) continue;
    if (label[j + 1] < label[j]) des.insert(j);
  }
  return des;
}

inline int comaj(const Rows& rows) {
  int total = 0;
  for (const auto& row : rows) {
    for (const auto& cell : row) total += static_cast<int>(cell.size());
  }
  int s = 0;
  for (int j : descent_set(rows)) s += total - j;
  return s;
}

// q-polynomial as a coefficient vector, low degree first.
using Poly = std::vector<long long>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly tally_to_poly(const std::map<int, long long>& t) {
  Poly p;
  for (const auto& [e, c] : t) {
    if (static_cast<int>(p.size()) <= e) p.resize(e + 1, 0);
    p[e] += c;
  }
  trim(p);
  return p;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// [n choose k]_q as the generating function of partitions in a k x (n-k) box.
inline Poly q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  std::map<int, long long> t;
  std::function<void(int, int, int)> rec = [&](int parts, int maxpart, int sum) {
    if (parts == k) {
      ++t[sum];
      return;
    }
    for (int p = 0; p <= maxpart; ++p) rec(parts + 1, p, sum + p);
  };
  rec(0, n - k, 0);
  return tally_to_poly(t);
}

// ---- permutations ----

inline bool avoids_321(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (w[a] > w[b] && w[b] > w[c]) return false;
      }
    }
  }
  return true;
}

inline std::vector<std::vector<int>> avoiders(int m) {
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    if (avoids_321(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int inner_peaks(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t j = 1; j + 1 < w.size(); ++j) c += w[j - 1] < w[j] && w[j] > w[j + 1];
  return c;
}

inline int inner_valleys(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t j = 1; j + 1 < w.size(); ++j) c += w[j - 1] > w[j] && w[j] < w[j + 1];
  return c;
}

// ---- paths over U D u d ----

inline std::vector<std::string> all_words(int n) {
  static const char* letters = "UDud";
  std::vector<std::string> out;
  for_each_word(4, n, [&](const std::vector<int>& w) {
    std::string s;
    for (int x : w) s += letters[x];
    out.push_back(s);
  });
  return out;
}

struct Tags {
  bool path = false;       // height never negative
  bool motz = false;       // ends at height 0
  bool no_u_on_axis = false;
  bool no_d_early = false;
  int end = 0;
};

inline Tags tags(const std::string& w) {
  Tags t;
  int h = 0;
  bool ok = true, r1 = true, r2 = true, seen_down = false;
  for (char c : w) {
    if (c == 'u' && h == 0) r1 = false;
    if (c == 'd' && !seen_down) r2 = false;
    if (c == 'U') ++h;
    if (c == 'D') {
      --h;
      seen_down = true;
    }
    if (h < 0) ok = false;
  }
  t.path = ok;
  t.end = h;
  t.motz = ok && h == 0;
  t.no_u_on_axis = r1;
  t.no_d_early = r2;
  return t;
}

inline bool in_motz(const std::string& w) { return tags(w).motz; }
inline bool in_motzE(const std::string& w) { auto t = tags(w); return t.motz && t.no_u_on_axis; }
inline bool in_motzT(const std::string& w) { auto t = tags(w); return t.motz && t.no_d_early; }
inline bool in_motzET(const std::string& w) { auto t = tags(w); return t.motz && t.no_u_on_axis && t.no_d_early; }
inline bool in_ballotlike(const std::string& w, int end) {
  auto t = tags(w);
  return t.path && t.end == end && t.no_u_on_axis && t.no_d_early;
}

inline std::vector<std::string> paths(int n, bool (*member)(const std::string&)) {
  std::vector<std::string> out;
  for (const auto& w : all_words(n)) {
    if (member(w)) out.push_back(w);
  }
  return out;
}

// ---- Dyck paths (Narayana / Kreweras) ----

// Dyck paths of semilength n tallied by (peaks, sorted multiset of ascent
// run lengths).
inline std::map<std::pair<int, std::vector<int>>, u64> dyck_types(int n) {
  std::map<std::pair<int, std::vector<int>>, u64> out;
  for (u64 mask = 0; mask < (u64(1) << (2 * n)); ++mask) {
    int h = 0;
    bool ok = true;
    int ones = 0;
    for (int j = 0; j < 2 * n; ++j) {
      const bool up = (mask >> j) & 1u;
      ones += up;
      h += up ? 1 : -1;
      if (h < 0) ok = false;
    }
    if (!ok || h != 0 || ones != n) continue;
    std::vector<int> runs;
    int run = 0;
    for (int j = 0; j < 2 * n; ++j) {
      const bool up = (mask >> j) & 1u;
      if (up) {
        ++run;
      } else if (run) {
        runs.push_back(run);
        run = 0;
      }
    }
    std::sort(runs.begin(), runs.end());
    ++out[{static_cast<int>(runs.size()), runs}];
  }
  return out;
}

// ---- posets ----

// Order given as a strict relation matrix less[x][y] (0-based, natural).
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> less;
};

inline Poset closure(int n, const std::vector<std::pair<int, int>>& relations) {
  Poset p{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (auto [x, y] : relations) p.less[x - 1][y - 1] = true;
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (p.less[x][z] && p.less[z][y]) p.less[x][y] = true;
      }
    }
  }
  return p;
}

inline Poset diagram(const std::vector<int>& shape) {
  const auto cells = cells_of(shape);
  const int n = static_cast<int>(cells.size());
  Poset p{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      p.less[a][b] = a != b && cells[a].row <= cells[b].row && cells[a].col <= cells[b].col;
    }
  }
  return p;
}

// Set-valued linear extensions as owner words (owner[x-1] = element).
inline std::vector<std::vector<int>> sv_extensions(const Poset& p, int k) {
  std::vector<std::vector<int>> out;
  if (p.n == 0) {
    if (k == 0) out.push_back({});
    return out;
  }
  for_each_word(p.n, p.n + k, [&](const std::vector<int>& owner) {
    std::vector<int> lo(p.n, 1 << 30), hi(p.n, -1);
    for (int x = 0; x < static_cast<int>(owner.size()); ++x) {
      lo[owner[x]] = std::min(lo[owner[x]], x);
      hi[owner[x]] = std::max(hi[owner[x]], x);
    }
    for (int a = 0; a < p.n; ++a) {
      if (hi[a] < 0) return;
      for (int b = 0; b < p.n; ++b) {
        if (p.less[a][b] && hi[a] > lo[b]) return;
      }
    }
    out.push_back(owner);
  });
  return out;
}

inline std::vector<std::vector<int>> linear_extensions(const Poset& p) { return sv_extensions(p, 0); }

// Des and comaj of a set-valued owner word under the natural labels.
inline std::set<int> descent_set(const std::vector<int>& owner) {
  const int total = static_cast<int>(owner.size());
  std::set<int> seen, non_minimal;
  for (int x = 0; x < total; ++x) {
    if (!seen.insert(owner[x]).second) non_minimal.insert(x + 1);
  }
  std::set<int> des(non_minimal);
  for (int j = 1; j < total; ++j) {
    if (!non_minimal.count(j + 1) && owner[j] < owner[j - 1]) des.insert(j);
  }
  return des;
}

inline int comaj(const std::vector<int>& owner) {
  int s = 0;
  for (int j : descent_set(owner)) s += static_cast<int>(owner.size()) - j;
  return s;
}

inline int ddeg(const Poset& p, const std::vector<bool>& ideal) {
  int c = 0;
  for (int x = 0; x < p.n; ++x) {
    if (!ideal[x]) continue;
    bool maximal = true;
    for (int y = 0; y < p.n; ++y) {
      if (ideal[y] && p.less[x][y]) maximal = false;
    }
    c += maximal;
  }
  return c;
}

}  // namespace oracle
