#pragma once

#include <functional>
#include <string>
#include <vector>

#include "svtab/multipoly.hpp"

namespace svtab {

/// Power series in t truncated after t^N, with MultiPoly coefficients.
/// Every operation discards degrees above the (smaller) operand order.
class TSeries {
 public:
  explicit TSeries(int order = 0);
  TSeries(int order, std::vector<MultiPoly> coeffs);

  static TSeries constant(int order, const MultiPoly& c);
  /// c * t^degree.
  static TSeries monomial(int order, int degree, const MultiPoly& c);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const MultiPoly& operator[](int n) const { return coeffs_[n]; }
  MultiPoly& operator[](int n) { return coeffs_[n]; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  TSeries truncated(int order) const;
  /// Multiply by t^k (k >= 0).
  TSeries shifted(int k) const;
  /// Divide by t^k; the low coefficients must vanish. Order drops by k.
  TSeries divide_by_t(int k) const;
  TSeries map(const std::function<MultiPoly(const MultiPoly&)>& f) const;

  /// 1/s for a constant term of +1 or -1; NonInvertibleDenominator otherwise.
  TSeries inverse() const;
  /// The square root with constant term 1 (the radicand must have constant
  /// term 1). Newton steps s <- (s + r/s)/2 with doubling precision; every
  /// halving is checked to be exact.
  TSeries sqrt() const;

  TSeries& operator+=(const TSeries& other);
  TSeries& operator-=(const TSeries& other);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(const MultiPoly& c, const TSeries& s);
  friend bool operator==(const TSeries&, const TSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<MultiPoly> coeffs_;
};

}  // namespace svtab
