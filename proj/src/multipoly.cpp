#include "svtab/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace svtab {

char marker_char(Marker m) {
  static constexpr char names[] = {'U', 'D', 'u', 'd'};
  return names[static_cast<int>(m)];
}

Marker parse_marker(std::string_view name) {
  if (name == "U") return Marker::U;
  if (name == "D") return Marker::D;
  if (name == "u") return Marker::u;
  if (name == "d") return Marker::d;
  throw Error(Errc::ParseError, "unknown marker '" + std::string(name) + "'");
}

MultiPoly::MultiPoly(long long constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0, 0, 0}, constant);
}

MultiPoly::MultiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0, 0, 0}, constant);
}

MultiPoly MultiPoly::monomial(const Exponent& exponent, Integer coeff) {
  MultiPoly p;
  p.add_term(exponent, coeff);
  return p;
}

MultiPoly MultiPoly::variable(Marker m) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<int>(m)] = 1;
  return monomial(e);
}

void MultiPoly::add_term(const Exponent& exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MultiPoly::coeff(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer MultiPoly::eval_ones() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

MultiPoly MultiPoly::derivative(Marker m) const {
  const int slot = static_cast<int>(m);
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponent f = e;
    --f[slot];
    out.add_term(f, c * e[slot]);
  }
  return out;
}

MultiPoly MultiPoly::swapped(Marker a, Marker b) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    std::swap(f[static_cast<int>(a)], f[static_cast<int>(b)]);
    out.add_term(f, c);
  }
  return out;
}

MultiPoly MultiPoly::divide_exact(const Exponent& exponent, const Integer& c) const {
  MultiPoly out;
  for (const auto& [e, coeff] : terms_) {
    Exponent f = e;
    for (int i = 0; i < 4; ++i) {
      f[i] -= exponent[i];
      if (f[i] < 0) {
        throw Error(Errc::DivisionNotExact, to_string() + " is not divisible by the monomial");
      }
    }
    out.add_term(f, svtab::divide_exact(coeff, c));
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    }
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = x.first[0] + x.first[1] + x.first[2] + x.first[3];
    int dy = y.first[0] + y.first[1] + y.first[2] + y.first[3];
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    const bool constant = e == Exponent{0, 0, 0, 0};
    Integer mag = c < 0 ? Integer(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (constant || mag != 1) out += mag.str();
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      out += marker_char(static_cast<Marker>(i));
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip();
    return pos_ < text_.size() && text_[pos_] == ch;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::ParseError, what + " at offset " + std::to_string(pos_));
  }

  MultiPoly expr() {
    MultiPoly sum;
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    for (;;) {
      MultiPoly t = term();
      sum += negate ? -t : t;
      if (peek('+')) {
        negate = false;
      } else if (peek('-')) {
        negate = true;
      } else {
        break;
      }
      ++pos_;
    }
    return sum;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char ch = text_[pos_];
    return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)) || ch == 'U' || ch == 'D' ||
           ch == 'u' || ch == 'd';
  }

  MultiPoly term() {
    if (!starts_factor()) fail("expected a factor");
    MultiPoly product = factor();
    for (;;) {
      if (peek('*')) ++pos_;
      if (!starts_factor()) break;
      product = product * factor();
    }
    return product;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      int power = std::stoi(std::string(text_.substr(start, pos_ - start)));
      MultiPoly result(1);
      for (int i = 0; i < power; ++i) result = result * base;
      return result;
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    ++pos_;
    return MultiPoly::variable(parse_marker(std::string_view(&text_[pos_ - 1], 1)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace svtab
