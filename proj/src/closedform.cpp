#include "svtab/closedform.hpp"

#include <map>
#include <numeric>

namespace svtab {

BinomTable::BinomTable(int max_row) : rows_(max_row + 1) {
  for (int m = 0; m <= max_row; ++m) {
    rows_[m].assign(m + 1, Integer(1));
    for (int j = 1; j < m; ++j) rows_[m][j] = rows_[m - 1][j - 1] + rows_[m - 1][j];
  }
}

const BinomTable& BinomTable::shared() {
  static const BinomTable table(128);
  return table;
}

Integer BinomTable::binom(long long m, long long j) const {
  if (j < 0) return 0;
  if (m >= 0 && j > m) return 0;
  if (m >= 0 && m < static_cast<long long>(rows_.size())) return rows_[m][j];
  if (m < 0) {
    // binom(m, j) = (-1)^j binom(j - m - 1, j)
    Integer v = binom(j - m - 1, j);
    return (j % 2) ? Integer(-v) : v;
  }
  return divide_exact(falling(m, static_cast<int>(j)), factorial(static_cast<int>(j)));
}

Integer binom(long long m, long long j) { return BinomTable::shared().binom(m, j); }

Integer falling(long long x, int a) {
  Integer r = 1;
  for (int i = 0; i < a; ++i) r *= Integer(x - i);
  return r;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer catalan(int n) {
  if (n < 0) throw Error(Errc::OutOfRange, "catalan needs n >= 0");
  return divide_exact(binom(2 * n, n), Integer(n + 1));
}

Integer narayana(int n, int m) {
  if (m < 1 || m > n) throw Error(Errc::OutOfRange, "narayana needs 1 <= m <= n");
  return divide_exact(binom(n, m - 1) * binom(n - 1, m - 1), Integer(m));
}

namespace {

Integer mu_factorials(int n, int m, const std::vector<int>& mu) {
  long long parts = 0, weight = 0;
  Integer product = 1;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] < 0) throw Error(Errc::InconsistentType, "negative multiplicity");
    parts += mu[j];
    weight += static_cast<long long>(j + 1) * mu[j];
    product *= factorial(mu[j]);
  }
  if (parts != m || weight != n) {
    throw Error(Errc::InconsistentType, "type has " + std::to_string(parts) + " parts of total " +
                                            std::to_string(weight) + ", expected " +
                                            std::to_string(m) + " and " + std::to_string(n));
  }
  return product;
}

}  // namespace

Integer kreweras(int n, int m, const std::vector<int>& mu) {
  const Integer denom = mu_factorials(n, m, mu);
  if (m < 1 || m > n) throw Error(Errc::InconsistentType, "need 1 <= m <= n");
  return divide_exact(factorial(n), factorial(n - m + 1) * denom);
}

Integer kreweras_uncorrected(int n, int m, const std::vector<int>& mu) {
  const Integer denom = mu_factorials(n, m, mu);
  return divide_exact(falling(n, m), denom);
}

Integer ballot_count(int n, int i) {
  if (i < 0 || i > n) throw Error(Errc::OutOfRange, "ballot_count needs 0 <= i <= n");
  return binom(2 * n - 2, n - i - 1) - binom(2 * n - 2, n - i - 2) + binom(n - 2, n - i);
}

Integer e_count(int n, int i) {
  if (i < 0 || i > n) throw Error(Errc::OutOfRange, "e_count needs 0 <= i <= n");
  if (n == 0) return 1;
  if (i == 0) return 0;
  return binom(n - 1, i - 1);
}

Integer f_count(int n, int i) {
  if (i < 0 || i > n) throw Error(Errc::OutOfRange, "f_count needs 0 <= i <= n");
  return binom(2 * n - 2, n - i - 1) - binom(2 * n - 2, n - i - 2) - binom(n - 2, n - i - 1);
}

std::vector<std::vector<Integer>> f_table_recursive(int max_n) {
  std::vector<std::vector<Integer>> f(max_n + 1);
  auto at = [&](int n, int i) -> Integer {
    if (i < 0 || i > n) return 0;
    return f[n][i];
  };
  auto e = [](int n, int i) -> Integer { return (i < 0 || i > n) ? Integer(0) : e_count(n, i); };
  for (int n = 0; n <= max_n; ++n) {
    f[n].assign(n + 1, Integer(0));
    for (int i = 0; i <= n; ++i) {
      if (n <= 1 || i == n) continue;  // f_{0,0} = f_{1,0} = f_{1,1} = 0, f_{n,n} = 0
      if (i == 0) {
        f[n][0] = at(n - 1, 0) + at(n - 1, 1) + e(n - 1, 1);
      } else {
        f[n][i] = at(n - 1, i - 1) + 2 * at(n - 1, i) + at(n - 1, i + 1) + e(n - 1, i + 1);
      }
    }
  }
  return f;
}

Integer f_count_recursive(int n, int i) {
  if (i < 0 || i > n) throw Error(Errc::OutOfRange, "f_count needs 0 <= i <= n");
  return f_table_recursive(n)[n][i];
}

std::pair<Integer, Integer> row_sums(int n) {
  if (n < 2) throw Error(Errc::OutOfRange, "row sum formulas hold for n >= 2");
  Integer two_n1 = Integer(1) << (n - 1);
  Integer two_n2 = Integer(1) << (n - 2);
  return {two_n1, binom(2 * n - 2, n - 1) - two_n2};
}

Integer hook_length_count(const std::vector<int>& shape) {
  int n = 0;
  for (int p : shape) n += p;
  Integer hooks = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      int below = 0;
      for (std::size_t s = r + 1; s < shape.size() && shape[s] > c; ++s) ++below;
      hooks *= shape[r] - c - 1 + below + 1;
    }
  }
  return divide_exact(factorial(n), hooks);
}

Integer two_row_syt_count(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  return divide_exact(factorial(static_cast<int>(a + b)) * Integer(a - b + 1),
                      factorial(static_cast<int>(b)) * factorial(static_cast<int>(a + 1)));
}

Integer act_count(int b, int k) {
  if (b < 1 || k < 0) throw Error(Errc::OutOfRange, "act_count needs b >= 1, k >= 0");
  Integer sum = 0;
  for (int c = 0; c <= k / 2; ++c) {
    sum += two_row_syt_count(k - c, c) * two_row_syt_count(b + k - c, b + c) *
           falling(b + k - c - 1, k - c) * falling(b + c - 2, c);
  }
  return divide_exact(sum, factorial(k));
}

Integer peaks_count(int b, int k) {
  if (b < 1 || k < 0) throw Error(Errc::OutOfRange, "peaks_count needs b >= 1, k >= 0");
  Rational sum = 0;
  for (int c = 0; c <= k / 2; ++c) {
    Rational coeff(Integer(k - 2 * c + 1) * (k - 2 * c + 1),
                   Integer(k - c + 1) * (b + k - c + 1));
    sum += coeff * Rational(binom(b + c - 2, c) * binom(b + k - c - 1, b - 1) * binom(2 * b + k, b + c));
  }
  return require_integral(sum);
}

std::pair<Integer, Integer> more_shapes_counts(int n) {
  if (n < 3) throw Error(Errc::OutOfRange, "more_shapes_counts needs n >= 3");
  return {catalan(n) - catalan(n - 1), catalan(n) - 2 * catalan(n - 1) + catalan(n - 2)};
}

Integer more_shapes_binomial_form(int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "needs n >= 1");
  return require_integral(Rational(3 * binom(2 * n - 2, n), Integer(n + 1)));
}

}  // namespace svtab
