#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "svtab/partition.hpp"
#include "svtab/poset.hpp"
#include "svtab/qpoly.hpp"

namespace svtab {

/// pi(X, t) = #{j in X : j < t} + (n - t if t not in X, else 0), with X a
/// bit set over {0, ..., n}.
int pi_perm(std::uint64_t X, int n, int t);

/// Exponent of the weight of (T, t_1 <= ... <= t_k) with 0 <= t_i <= n:
/// C(k,2) + sum_i (n - t_i) + sum over descents v of T not among the cuts
/// of (n - v + #{i : t_i > v}). Equals comaj^{+k} of every set-valued
/// extension composed from (T, cuts, picks).
int vartheta(const LinearExtension& T, const std::vector<int>& cuts);
/// comaj(T) + C(k,2) + sum_i pi(Des(T), t_i).
int vartheta_product_form(const LinearExtension& T, const std::vector<int>& cuts);

/// Visits every weakly increasing vector of length k over [lo, hi].
void for_each_cut_vector(int k, int lo, int hi, const std::function<void(const std::vector<int>&)>& visit);

struct IdentitySides {
  QPoly lhs, rhs;
  bool holds() const { return lhs == rhs; }
};

/// Sum over T and 0 <= t_1 <= ... <= t_k <= n of q^vartheta, against
/// q^{C(k,2)} [n+k choose k]_q sum_T q^{comaj(T)}.
IdentitySides sum_identity_check(const Poset& p, int k);
IdentitySides sum_identity_check_product_form(const Poset& p, int k);

/// Both sides of the expected down-degree identity as fractions:
/// lhs = (sum_T sum_cuts q^vartheta prod_j ddeg(I_j)) / (sum_T sum_cuts q^vartheta),
/// rhs = (sum_S q^{comaj^{+k}(S)}) / (q^{C(k,2)} [n+k choose n]_q sum_T q^{comaj(T)}).
struct ExpectedDdeg {
  QPoly lhs_num, lhs_den, rhs_num, rhs_den;
  bool holds() const { return lhs_num * rhs_den == rhs_num * lhs_den; }
};
ExpectedDdeg expected_ddeg(const Poset& p, int k);

/// Sorted owner words of Lin^{+k}(P), produced directly and by composing
/// every triple.
struct TwoRoutes {
  std::vector<std::string> direct, via_triples;
  bool agree() const { return direct == via_triples; }
};
TwoRoutes sv_linear_extensions_two_ways(const Poset& p, int k);

/// For each (T, cuts) with cuts >= 1, the number of S in Lin^{+k}(P) that
/// decompose to it, checked against prod_j ddeg(I_j). Returns the number of
/// mismatching (T, cuts).
int multichain_fiber_mismatches(const Poset& p, int k);

/// Descent-set tallies of SYT^{+k}(lambda) and SYT^{+k}(lambda'), keyed by
/// the descent set as a bit set over [n+k].
struct Equidistribution {
  std::map<std::uint64_t, std::uint64_t> lambda, conjugate;
  bool equal() const { return lambda == conjugate; }
};
Equidistribution equidistribution_check(const Partition& lambda, int k);

/// Deterministic catalog: chains and antichains up to max_elements, the
/// diagram poset of every partition of size <= max_elements under every
/// natural labeling (deduplicated), and a few seeded random posets.
std::vector<Poset> poset_catalog(int max_elements);
/// Relabels p so that the element in position j of `order` gets label j+1.
Poset relabel(const Poset& p, const std::vector<int>& order, std::string name);

}  // namespace svtab
