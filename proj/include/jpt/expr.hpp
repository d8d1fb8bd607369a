// Tiny exact expression language for the n-parametrized family entries of
// the catalog: polynomials in one variable n with rational coefficients.
// Grammar (juxtaposition multiplies):
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor | factor)*     // division by constants
//   factor := '-'? atom
//   atom   := integer | 'n' | '(' expr ')'
//
// e.g. "3n+15", "(n+6)(n+5)/2", "-2/3".

#pragma once

#include "jpt/numeric.hpp"

#include <string>
#include <vector>

namespace jpt {

class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant) : c_{std::move(constant)} { trim(); }

  static Poly variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
  static Poly parse(const std::string& text);

  bool is_constant() const { return c_.size() <= 1; }
  bool is_zero() const { return c_.empty(); }
  Rat constant_value() const { return c_.empty() ? Rat(0) : c_[0]; }

  Rat eval(long long n) const;
  // Evaluation that must land on an integer.
  long long eval_int(long long n) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly divided_by(const Rat& d) const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.c_ == b.c_;
  }

  // Canonical rendering ("3n+15", "n(...)" is expanded: "1/2n^2+11/2n+15").
  std::string str() const;

 private:
  explicit Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[k] multiplies n^k
};

}  // namespace jpt
