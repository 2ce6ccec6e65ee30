#include "svtab/qpoly.hpp"

#include <algorithm>

namespace svtab {

QPoly::QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(long long constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::monomial(int exponent, Integer coeff) {
  if (exponent < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  std::vector<Integer> c(exponent + 1);
  c[exponent] = std::move(coeff);
  return QPoly(std::move(c));
}

QPoly QPoly::q_integer(int m) {
  return QPoly(std::vector<Integer>(std::max(m, 0), Integer(1)));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer QPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[exponent];
}

Integer QPoly::eval_at_one() const {
  Integer sum = 0;
  for (const Integer& c : coeffs_) sum += c;
  return sum;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<Integer> c(k, Integer(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(c));
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::divide_exact(const QPoly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::DivisionNotExact, "division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw Error(Errc::DivisionNotExact, to_string() + " is not divisible by " + divisor.to_string());
  }
  std::vector<Integer> rem = coeffs_;
  std::vector<Integer> quot(degree() - divisor.degree() + 1);
  const Integer& lead = divisor.coeffs_.back();
  for (int i = degree() - divisor.degree(); i >= 0; --i) {
    Integer top = rem[i + divisor.degree()];
    if (top == 0) continue;
    Integer factor;
    try {
      factor = svtab::divide_exact(top, lead);
    } catch (const Error&) {
      throw Error(Errc::DivisionNotExact, to_string() + " is not divisible by " + divisor.to_string());
    }
    quot[i] = factor;
    for (int j = 0; j <= divisor.degree(); ++j) rem[i + j] -= factor * divisor.coeffs_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& x) { return x != 0; })) {
    throw Error(Errc::DivisionNotExact, to_string() + " is not divisible by " + divisor.to_string());
  }
  return QPoly(std::move(quot));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const Integer& c = coeffs_[e];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0 || mag != 1) out += mag.str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

std::string QPoly::to_csv() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

QPoly q_factorial(int m) {
  QPoly result(1);
  for (int i = 1; i <= m; ++i) result = result * QPoly::q_integer(i);
  return result;
}

QPoly q_binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return {};
  return q_factorial(a).divide_exact(q_factorial(b) * q_factorial(a - b));
}

void ExponentTally::add(int exponent, std::int64_t times) {
  if (exponent < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (static_cast<std::size_t>(exponent) >= counts_.size()) counts_.resize(exponent + 1, 0);
  counts_[exponent] += times;
}

void ExponentTally::merge(const ExponentTally& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::int64_t ExponentTally::total() const {
  std::int64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

QPoly ExponentTally::to_qpoly() const {
  std::vector<Integer> c(counts_.begin(), counts_.end());
  return QPoly(std::move(c));
}

}  // namespace svtab
