#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "svtab/integer.hpp"

namespace svtab {

/// The four step markers; the enumerator doubles as the exponent slot.
enum class Marker : std::uint8_t { U = 0, D = 1, u = 2, d = 3 };

char marker_char(Marker m);
Marker parse_marker(std::string_view name);

/// Exponents of (U, D, u, d).
using Exponent = std::array<int, 4>;

/// Polynomial in U, D, u, d with exact integer coefficients. Zero
/// coefficients are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  MultiPoly() = default;
  MultiPoly(long long constant);
  MultiPoly(const Integer& constant);

  static MultiPoly monomial(const Exponent& exponent, Integer coeff = 1);
  static MultiPoly variable(Marker m);
  /// Accepts sums of products with implicit multiplication, integer
  /// coefficients, powers and parentheses, e.g. "U(d^2+ud+2UD+u^2)D".
  static MultiPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coeff(const Exponent& exponent) const;
  Integer constant_term() const { return coeff({0, 0, 0, 0}); }
  /// Value with every marker set to 1.
  Integer eval_ones() const;

  MultiPoly derivative(Marker m) const;
  MultiPoly swapped(Marker a, Marker b) const;
  /// Exact division by c * monomial(exponent); throws DivisionNotExact.
  MultiPoly divide_exact(const Exponent& exponent, const Integer& c) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Terms by decreasing total degree, then decreasing exponent tuple;
  /// e.g. "U^2D^2 + UDu^2 - 3".
  std::string to_string() const;

 private:
  void add_term(const Exponent& exponent, const Integer& coeff);
  Terms terms_;
};

}  // namespace svtab
