#pragma once

#include <utility>
#include <vector>

#include "svtab/integer.hpp"

namespace svtab {

/// Pascal rows up to a fixed size, built once and read-only afterwards;
/// larger arguments are computed directly.
class BinomTable {
 public:
  explicit BinomTable(int max_row);
  static const BinomTable& shared();

  /// binom(m, j) = m(m-1)...(m-j+1)/j! for j >= 0 (any integer m), 0 for j < 0.
  Integer binom(long long m, long long j) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

Integer binom(long long m, long long j);
/// (x)_a = x(x-1)...(x-a+1), (x)_0 = 1.
Integer falling(long long x, int a);
Integer factorial(int n);

Integer catalan(int n);
/// N_{n,m} = binom(n, m-1) binom(n-1, m-1) / m; OutOfRange unless 1 <= m <= n.
Integer narayana(int n, int m);
/// Dyck paths of semilength n with m peaks whose ascent lengths have type
/// mu (mu[j-1] parts equal to j): n! / ((n-m+1)! prod mu_j!).
/// InconsistentType unless sum mu_j = m and sum j mu_j = n.
Integer kreweras(int n, int m, const std::vector<int>& mu);
/// n(n-1)...(n-m+1) / prod mu_j!, which is (n-m+1) times kreweras.
Integer kreweras_uncorrected(int n, int m, const std::vector<int>& mu);

Integer ballot_count(int n, int i);
Integer e_count(int n, int i);
/// Closed form of f_{n,i}.
Integer f_count(int n, int i);
/// f_{n,i} from the path recursion (memoized per call).
Integer f_count_recursive(int n, int i);
/// Table f[n][i] for 0 <= i <= n <= max_n from the recursion.
std::vector<std::vector<Integer>> f_table_recursive(int max_n);
/// (sum_i e_{n,i}, sum_i f_{n,i}) from the closed forms 2^{n-1} and
/// binom(2n-2, n-1) - 2^{n-2}; valid for n >= 2.
std::pair<Integer, Integer> row_sums(int n);

/// Hook-length count of SYT of a partition.
Integer hook_length_count(const std::vector<int>& shape);
/// f^{(a,b)} = (a+b)! (a-b+1) / (b! (a+1)!), zero unless a >= b >= 0.
Integer two_row_syt_count(long long a, long long b);

/// #SYT^{+k}(2 x b) via the falling-factorial sum divided by k!.
Integer act_count(int b, int k);
/// The binomial sum over c with summands evaluated exactly in rationals.
Integer peaks_count(int b, int k);

/// (cat(n) - cat(n-1), cat(n) - 2cat(n-1) + cat(n-2)).
std::pair<Integer, Integer> more_shapes_counts(int n);
/// 3/(n+1) binom(2n-2, n), asserted integral.
Integer more_shapes_binomial_form(int n);

}  // namespace svtab
