#include "svtab/posets.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "svtab/biject.hpp"
#include "svtab/stats.hpp"

namespace svtab {

int pi_perm(std::uint64_t X, int n, int t) {
  if (t < 0 || t > n) throw Error(Errc::OutOfRange, "pi_perm needs 0 <= t <= n");
  int below = std::popcount(X & ((std::uint64_t(1) << t) - 1));
  return below + (((X >> t) & 1u) ? 0 : n - t);
}

namespace {

std::uint64_t descent_mask(const LinearExtension& T) {
  std::uint64_t mask = 0;
  for (int j : descent_set(T)) mask |= std::uint64_t(1) << j;
  return mask;
}

}  // namespace

int vartheta(const LinearExtension& T, const std::vector<int>& cuts) {
  const int n = static_cast<int>(T.order.size());
  const int k = static_cast<int>(cuts.size());
  int e = k * (k - 1) / 2;
  for (int t : cuts) e += n - t;
  for (int v : descent_set(T)) {
    if (std::find(cuts.begin(), cuts.end(), v) != cuts.end()) continue;
    e += n - v;
    for (int t : cuts) e += t > v;
  }
  return e;
}

int vartheta_product_form(const LinearExtension& T, const std::vector<int>& cuts) {
  const int n = static_cast<int>(T.order.size());
  const int k = static_cast<int>(cuts.size());
  const std::uint64_t X = descent_mask(T);
  int e = comaj(T) + k * (k - 1) / 2;
  for (int t : cuts) e += pi_perm(X, n, t);
  return e;
}

void for_each_cut_vector(int k, int lo, int hi,
                         const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> cuts(k);
  auto rec = [&](auto&& self, int i, int from) -> void {
    if (i == k) {
      visit(cuts);
      return;
    }
    for (int t = from; t <= hi; ++t) {
      cuts[i] = t;
      self(self, i + 1, t);
    }
  };
  rec(rec, 0, lo);
}

namespace {

std::vector<LinearExtension> linear_extensions(const Poset& p) {
  std::vector<LinearExtension> out;
  for_each_linear_extension(p, [&](const std::vector<int>& order) { out.push_back({order}); });
  return out;
}

QPoly comaj_sum(const std::vector<LinearExtension>& exts) {
  ExponentTally tally;
  for (const auto& T : exts) tally.add(comaj(T));
  return tally.to_qpoly();
}

IdentitySides sum_identity(const Poset& p, int k, int (*weight)(const LinearExtension&, const std::vector<int>&)) {
  const int n = p.size();
  const auto exts = linear_extensions(p);
  ExponentTally lhs;
  for (const auto& T : exts) {
    for_each_cut_vector(k, 0, n, [&](const std::vector<int>& cuts) { lhs.add(weight(T, cuts)); });
  }
  QPoly rhs = (q_binomial(n + k, k) * comaj_sum(exts)).shifted(k * (k - 1) / 2);
  return {lhs.to_qpoly(), rhs};
}

}  // namespace

IdentitySides sum_identity_check(const Poset& p, int k) { return sum_identity(p, k, vartheta); }

IdentitySides sum_identity_check_product_form(const Poset& p, int k) {
  return sum_identity(p, k, vartheta_product_form);
}

ExpectedDdeg expected_ddeg(const Poset& p, int k) {
  const int n = p.size();
  const auto exts = linear_extensions(p);
  ExponentTally weighted, plain;
  for (const auto& T : exts) {
    std::vector<ElementMask> prefix(n + 1, 0);
    for (int j = 0; j < n; ++j) prefix[j + 1] = prefix[j] | (ElementMask(1) << T.order[j]);
    for_each_cut_vector(k, 0, n, [&](const std::vector<int>& cuts) {
      const int e = vartheta(T, cuts);
      plain.add(e);
      std::int64_t product = 1;
      for (int t : cuts) product *= p.ddeg(prefix[t]);
      if (product) weighted.add(e, product);
    });
  }
  ExponentTally sv;
  for_each_sv_word(p, k, [&](const std::vector<int>& word) { sv.add(comaj_plus_k(word, n)); });
  ExpectedDdeg out;
  out.lhs_num = weighted.to_qpoly();
  out.lhs_den = plain.to_qpoly();
  out.rhs_num = sv.to_qpoly();
  out.rhs_den = (q_binomial(n + k, n) * comaj_sum(exts)).shifted(k * (k - 1) / 2);
  return out;
}

namespace {

std::string encode(const std::vector<int>& word) {
  return std::string(word.begin(), word.end());
}

}  // namespace

TwoRoutes sv_linear_extensions_two_ways(const Poset& p, int k) {
  const int n = p.size();
  TwoRoutes out;
  for_each_sv_word(p, k, [&](const std::vector<int>& word) { out.direct.push_back(encode(word)); });
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    std::vector<ElementMask> maximal(n + 1, 0);
    ElementMask ideal = 0;
    for (int j = 0; j < n; ++j) {
      ideal |= ElementMask(1) << order[j];
      maximal[j + 1] = p.maximal(ideal);
    }
    std::vector<int> picks(k);
    for_each_cut_vector(k, 1, n, [&](const std::vector<int>& cuts) {
      auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
          out.via_triples.push_back(encode(compose_word(order, cuts, picks)));
          return;
        }
        for (ElementMask m = maximal[cuts[i]]; m; m &= m - 1) {
          picks[i] = std::countr_zero(m);
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    });
  });
  std::sort(out.direct.begin(), out.direct.end());
  std::sort(out.via_triples.begin(), out.via_triples.end());
  return out;
}

int multichain_fiber_mismatches(const Poset& p, int k) {
  const int n = p.size();
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> fibers;
  for_each_sv_word(p, k, [&](const std::vector<int>& word) {
    const Triple t = decompose(p, svle_from_word(word, n));
    ++fibers[{t.T.order, t.cuts}];
  });
  int mismatches = 0;
  for_each_linear_extension(p, [&](const std::vector<int>& order) {
    std::vector<ElementMask> prefix(n + 1, 0);
    for (int j = 0; j < n; ++j) prefix[j + 1] = prefix[j] | (ElementMask(1) << order[j]);
    for_each_cut_vector(k, 1, n, [&](const std::vector<int>& cuts) {
      std::int64_t product = 1;
      for (int t : cuts) product *= p.ddeg(prefix[t]);
      auto it = fibers.find({order, cuts});
      const std::int64_t seen = it == fibers.end() ? 0 : it->second;
      if (seen != product) ++mismatches;
    });
  });
  return mismatches;
}

Equidistribution equidistribution_check(const Partition& lambda, int k) {
  auto tally = [k](const Partition& shape) {
    std::map<std::uint64_t, std::uint64_t> out;
    const Poset p = Poset::young(shape);
    for_each_sv_word(p, k, [&](const std::vector<int>& word) {
      std::uint64_t mask = 0;
      for (int j : descent_set_plus_k(word, p.size())) mask |= std::uint64_t(1) << j;
      ++out[mask];
    });
    return out;
  };
  return {tally(lambda), tally(lambda.conjugate())};
}

Poset relabel(const Poset& p, const std::vector<int>& order, std::string name) {
  std::vector<int> label(p.size());
  for (int j = 0; j < p.size(); ++j) label[order[j]] = j + 1;
  std::vector<std::pair<int, int>> covers;
  for (auto [x, y] : p.covers()) covers.emplace_back(label[x - 1], label[y - 1]);
  return Poset::from_covers(p.size(), covers, std::move(name));
}

std::vector<Poset> poset_catalog(int max_elements) {
  std::vector<Poset> out;
  std::set<std::vector<std::pair<int, int>>> seen;
  auto add = [&](Poset p) {
    auto key = p.covers();
    key.insert(key.begin(), {p.size(), 0});
    if (seen.insert(key).second) out.push_back(std::move(p));
  };
  for (int n = 1; n <= max_elements; ++n) {
    add(Poset::chain(n));
    add(Poset::antichain(n));
  }
  for (int n = 1; n <= max_elements; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const Poset base = Poset::young(lambda);
      add(base);
      int index = 0;
      for_each_linear_extension(base, [&](const std::vector<int>& order) {
        add(relabel(base, order, base.name() + "#" + std::to_string(index++)));
      });
    }
  }
  // Random naturally labeled posets: each pair x < y becomes a relation
  // with probability 1/3.
  std::mt19937 rng(20240611u);
  for (int r = 0; r < 12; ++r) {
    const int n = std::max(1, max_elements - static_cast<int>(rng() % 2));
    std::vector<std::pair<int, int>> covers;
    for (int y = 2; y <= n; ++y) {
      for (int x = 1; x < y; ++x) {
        if (rng() % 3 == 0) covers.emplace_back(x, y);
      }
    }
    add(Poset::from_covers(n, covers, "random" + std::to_string(r)));
  }
  return out;
}

}  // namespace svtab
