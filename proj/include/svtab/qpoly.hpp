#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svtab/integer.hpp"

namespace svtab {

/// Polynomial in q with exact integer coefficients; coeffs()[i] is the
/// coefficient of q^i. The zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Integer> coeffs);
  QPoly(long long constant);

  static QPoly monomial(int exponent, Integer coeff = 1);
  /// [m]_q = 1 + q + ... + q^{m-1}.
  static QPoly q_integer(int m);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  Integer eval_at_one() const;

  /// Multiply by q^k.
  QPoly shifted(int k) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// Exact quotient; throws DivisionNotExact on a nonzero remainder.
  QPoly divide_exact(const QPoly& divisor) const;

  /// "q^3 + 2q^2 + q + 1", highest degree first; "0" for zero.
  std::string to_string() const;
  /// Coefficients low to high, comma separated.
  std::string to_csv() const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

QPoly q_factorial(int m);
/// Gaussian binomial [a choose b]_q via q-factorials and exact division.
QPoly q_binomial(int a, int b);

/// Fast accumulator for sums of monomials q^e with small multiplicities.
class ExponentTally {
 public:
  void add(int exponent, std::int64_t times = 1);
  void merge(const ExponentTally& other);
  std::int64_t total() const;
  QPoly to_qpoly() const;

 private:
  std::vector<std::int64_t> counts_;
};

}  // namespace svtab
