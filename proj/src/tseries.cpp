#include "svtab/tseries.hpp"

#include <algorithm>

namespace svtab {

TSeries::TSeries(int order) : coeffs_(std::max(order, 0) + 1) {
  if (order < 0) throw Error(Errc::InvalidArgument, "negative truncation order");
}

TSeries::TSeries(int order, std::vector<MultiPoly> coeffs) : TSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) {
    coeffs_[i] = std::move(coeffs[i]);
  }
}

TSeries TSeries::constant(int order, const MultiPoly& c) { return monomial(order, 0, c); }

TSeries TSeries::monomial(int order, int degree, const MultiPoly& c) {
  TSeries s(order);
  if (degree <= order) s.coeffs_[degree] = c;
  return s;
}

bool TSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& c) { return c.is_zero(); });
}

TSeries TSeries::truncated(int order) const {
  TSeries s(order);
  for (int i = 0; i <= std::min(order, this->order()); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

TSeries TSeries::shifted(int k) const {
  TSeries s(order());
  for (int i = 0; i + k <= order(); ++i) s.coeffs_[i + k] = coeffs_[i];
  return s;
}

TSeries TSeries::divide_by_t(int k) const {
  if (k > order()) throw Error(Errc::DivisionNotExact, "not enough terms to divide by t^k");
  for (int i = 0; i < k; ++i) {
    if (!coeffs_[i].is_zero()) {
      throw Error(Errc::DivisionNotExact, "coefficient of t^" + std::to_string(i) + " is nonzero");
    }
  }
  TSeries s(order() - k);
  for (int i = k; i <= order(); ++i) s.coeffs_[i - k] = coeffs_[i];
  return s;
}

TSeries TSeries::map(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  TSeries s(order());
  for (int i = 0; i <= order(); ++i) s.coeffs_[i] = f(coeffs_[i]);
  return s;
}

TSeries& TSeries::operator+=(const TSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (int i = 0; i <= order(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (int i = 0; i <= order(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const int n = std::min(a.order(), b.order());
  TSeries s(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      s.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return s;
}

TSeries operator*(const MultiPoly& c, const TSeries& s) {
  TSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out.coeffs_[i] = c * s.coeffs_[i];
  return out;
}

// Coefficient recurrence for a unit constant term c0:
// b_0 = 1/c0, b_n = -(1/c0) * sum_{i=1..n} a_i b_{n-i}.
TSeries TSeries::inverse() const {
  const MultiPoly& c0 = coeffs_[0];
  Integer unit = c0.constant_term();
  if (c0 != MultiPoly(unit) || (unit != 1 && unit != -1)) {
    throw Error(Errc::NonInvertibleDenominator,
                "constant term " + c0.to_string() + " is not a unit");
  }
  MultiPoly inv0(unit);
  TSeries b(order());
  b.coeffs_[0] = inv0;
  for (int n = 1; n <= order(); ++n) {
    MultiPoly acc;
    for (int i = 1; i <= n; ++i) {
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * b.coeffs_[n - i];
    }
    b.coeffs_[n] = -(inv0 * acc);
  }
  return b;
}

TSeries TSeries::sqrt() const {
  if (coeffs_[0] != MultiPoly(1)) {
    throw Error(Errc::InvalidArgument, "square root needs constant term 1");
  }
  TSeries s = constant(0, MultiPoly(1));
  int precision = 1;  // s is exact modulo t^precision
  while (precision <= order()) {
    precision = std::min(2 * precision, order() + 1);
    TSeries r = truncated(precision - 1);
    TSeries s_ext = s.truncated(precision - 1);
    TSeries twice = s_ext + r * s_ext.inverse();
    s = twice.map([](const MultiPoly& c) { return c.divide_exact({0, 0, 0, 0}, 2); });
  }
  return s.truncated(order());
}

std::string TSeries::to_string() const {
  std::string out;
  for (int i = 0; i <= order(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = coeffs_[i].to_string();
    bool compound = coeffs_[i].terms().size() > 1;
    if (i == 0) {
      out += c;
      continue;
    }
    if (compound) {
      out += "(" + c + ")";
    } else if (c != "1") {
      out += c;
    }
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace svtab
