#include "svtab/enumerate.hpp"

#include "svtab/error.hpp"
#include "svtab/poset.hpp"

namespace svtab {

void for_each_svsyt(const SkewShape& shape, int k,
                    const std::function<void(const SetValuedTableau&)>& visit) {
  const Poset p = Poset::young(shape);
  for_each_sv_word(p, k, [&](const std::vector<int>& word) { visit(tableau_from_word(word, shape)); });
}

std::vector<SetValuedTableau> gen_svsyt(const SkewShape& shape, int k) {
  std::vector<SetValuedTableau> out;
  for_each_svsyt(shape, k, [&](const SetValuedTableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_svsyt(const SkewShape& shape, int k) {
  std::uint64_t count = 0;
  for_each_sv_word(Poset::young(shape), k, [&](const std::vector<int>&) { ++count; });
  return count;
}

void for_each_two_row_union(int n, const std::function<void(const SetValuedTableau&)>& visit) {
  for (int b = 1; 2 * b <= n; ++b) {
    for_each_svsyt(Partition::rectangle(2, b), n - 2 * b, visit);
  }
}

std::vector<SetValuedTableau> gen_two_row_union(int n) {
  std::vector<SetValuedTableau> out;
  for_each_two_row_union(n, [&](const SetValuedTableau& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_two_row_union(int n) {
  std::uint64_t count = 0;
  for (int b = 1; 2 * b <= n; ++b) count += count_svsyt(Partition::rectangle(2, b), n - 2 * b);
  return count;
}

void for_each_ballot_tableau(int n, int i,
                             const std::function<void(const SetValuedTableau&)>& visit) {
  // k = n + i - 2b >= 0 and b >= i.
  for (int b = i; 2 * b <= n + i; ++b) {
    for_each_svsyt(Partition::two_row(b, b - i), n + i - 2 * b, visit);
  }
}

std::uint64_t count_ballot_tableaux(int n, int i) {
  std::uint64_t count = 0;
  for (int b = i; 2 * b <= n + i; ++b) count += count_svsyt(Partition::two_row(b, b - i), n + i - 2 * b);
  return count;
}

namespace {

// Visits words of [m] avoiding 321. A new value x completes a 321 exactly
// when some earlier inversion a > b has b > x.
template <class Visit>
void avoid321_words(int m, Visit&& visit) {
  std::vector<int> word(m);
  std::vector<char> used(m + 1, 0);
  auto rec = [&](auto&& self, int pos, int prefix_max, int largest_inverted) -> void {
    if (pos == m) {
      visit(word);
      return;
    }
    for (int x = largest_inverted + 1; x <= m; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      word[pos] = x;
      if (x > prefix_max) {
        self(self, pos + 1, x, largest_inverted);
      } else {
        self(self, pos + 1, prefix_max, x);
      }
      used[x] = 0;
    }
  };
  rec(rec, 0, 0, 0);
}

struct PathWalk {
  PathFamily family;
  int n;
  int end_height;  // -1: any
  std::vector<Step> steps;

  bool restriction1() const {
    return family == PathFamily::motzE || family == PathFamily::motzET ||
           family == PathFamily::ballotlike;
  }
  bool restriction2() const {
    return family == PathFamily::motzT || family == PathFamily::motzET ||
           family == PathFamily::ballotlike;
  }

  template <class Visit>
  void run(Visit&& visit) {
    steps.assign(n, Step::U);
    rec(0, 0, false, visit);
  }

  template <class Visit>
  void rec(int pos, int height, bool seen_down, Visit& visit) {
    const int remaining = n - pos;
    if (end_height >= 0 && std::abs(height - end_height) > remaining) return;
    if (pos == n) {
      visit(steps);
      return;
    }
    for (Step s : {Step::U, Step::D, Step::u, Step::d}) {
      int next = height;
      if (s == Step::U) ++next;
      if (s == Step::D) --next;
      if (next < 0) continue;
      if (s == Step::u && height == 0 && restriction1()) continue;
      if (s == Step::d && !seen_down && restriction2()) continue;
      steps[pos] = s;
      rec(pos + 1, next, seen_down || s == Step::D, visit);
    }
  }
};

int family_end_height(PathFamily family) { return family == PathFamily::ballotlike ? -1 : 0; }

}  // namespace

void for_each_avoid321(int m, const std::function<void(const Permutation&)>& visit) {
  if (m < 0) throw Error(Errc::InvalidArgument, "negative permutation length");
  avoid321_words(m, [&](const std::vector<int>& w) { visit(Permutation(w)); });
}

std::vector<Permutation> gen_avoid321(int m) {
  std::vector<Permutation> out;
  for_each_avoid321(m, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_avoid321(int m) {
  if (m < 0) throw Error(Errc::InvalidArgument, "negative permutation length");
  std::uint64_t count = 0;
  avoid321_words(m, [&](const std::vector<int>&) { ++count; });
  return count;
}

void for_each_path(PathFamily family, int n, const std::function<void(const ColoredPath&)>& visit) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative path length");
  PathWalk walk{family, n, family_end_height(family), {}};
  walk.run([&](const std::vector<Step>& s) { visit(ColoredPath(s)); });
}

std::vector<ColoredPath> gen_paths(PathFamily family, int n) {
  std::vector<ColoredPath> out;
  for_each_path(family, n, [&](const ColoredPath& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_paths(PathFamily family, int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "negative path length");
  std::uint64_t count = 0;
  PathWalk walk{family, n, family_end_height(family), {}};
  walk.run([&](const std::vector<Step>&) { ++count; });
  return count;
}

void for_each_ballotlike(int n, int i, const std::function<void(const ColoredPath&)>& visit) {
  if (i < 0 || i > n) throw Error(Errc::OutOfRange, "need 0 <= i <= n");
  PathWalk walk{PathFamily::ballotlike, n, i, {}};
  walk.run([&](const std::vector<Step>& s) { visit(ColoredPath(s)); });
}

std::vector<ColoredPath> gen_ballotlike(int n, int i) {
  std::vector<ColoredPath> out;
  for_each_ballotlike(n, i, [&](const ColoredPath& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_ballotlike(int n, int i) {
  if (i < 0 || i > n) throw Error(Errc::OutOfRange, "need 0 <= i <= n");
  std::uint64_t count = 0;
  PathWalk walk{PathFamily::ballotlike, n, i, {}};
  walk.run([&](const std::vector<Step>&) { ++count; });
  return count;
}

MultiPoly step_polynomial(PathFamily family, int n) {
  std::map<Exponent, std::uint64_t> tally;
  PathWalk walk{family, n, family_end_height(family), {}};
  walk.run([&](const std::vector<Step>& steps) {
    Exponent e{0, 0, 0, 0};
    for (Step s : steps) ++e[static_cast<int>(s)];
    ++tally[e];
  });
  MultiPoly out;
  for (const auto& [e, c] : tally) out += MultiPoly::monomial(e, Integer(c));
  return out;
}

}  // namespace svtab
