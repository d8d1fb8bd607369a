#include "jpt/expr.hpp"

#include <cctype>
#include <sstream>

namespace jpt {

Rat Poly::eval(long long n) const {
  Rat v = 0;
  for (size_t k = c_.size(); k-- > 0;) v = v * n + c_[k];
  return v;
}

long long Poly::eval_int(long long n) const {
  Rat v = eval(n);
  if (boost::multiprecision::denominator(v) != 1)
    fail("expression '" + str() + "' is not integral at n=" +
         std::to_string(n));
  return to_ll(boost::multiprecision::numerator(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly Poly::divided_by(const Rat& d) const {
  if (d == 0) bad_input("division by zero in expression");
  std::vector<Rat> c = c_;
  for (Rat& x : c) x /= d;
  return Poly(std::move(c));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const Rat& a = c_[k];
    if (a == 0) continue;
    if (!first && a > 0) os << "+";
    first = false;
    if (k == 0) {
      os << a.str();
      continue;
    }
    if (a == -1)
      os << "-";
    else if (!(a == 1))
      os << a.str();
    os << "n";
    if (k >= 2) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size())
      bad_input("trailing characters in expression '" + s_ + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p = p + term();
      } else if (c == '-') {
        ++pos_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * factor();
      } else if (c == '/') {
        ++pos_;
        Poly d = factor();
        if (!d.is_constant())
          bad_input("division by a non-constant in '" + s_ + "'");
        p = p.divided_by(d.constant_value());
      } else if (c == '(' || c == 'n' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        p = p * factor();  // juxtaposition multiplies
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    if (peek() == '-') {
      ++pos_;
      return Poly(Rat(-1)) * factor();
    }
    Poly a = atom();
    if (peek() == '^') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        bad_input("missing exponent in '" + s_ + "'");
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      int e = std::stoi(s_.substr(start, pos_ - start));
      Poly r{Rat(1)};
      for (int i = 0; i < e; ++i) r = r * a;
      return r;
    }
    return a;
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (peek() != ')') bad_input("missing ')' in expression '" + s_ + "'");
      ++pos_;
      return p;
    }
    if (c == 'n') {
      ++pos_;
      return Poly::variable();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return Poly(Rat(Int(s_.substr(start, pos_ - start))));
    }
    bad_input("unexpected character in expression '" + s_ + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(const std::string& text) { return Parser(text).parse(); }

}  // namespace jpt
