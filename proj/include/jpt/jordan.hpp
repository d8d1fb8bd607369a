// Rank-3 Euclidean Jordan algebras with exact arithmetic:
//
//   * simple:     H3(A), Hermitian 3x3 matrices over a composition
//                 algebra A, product X.Y = (XY + YX)/2;
//   * semisimple: R (+) Gamma(p,q), a scalar plus a spin factor with a
//                 signature-(p,q) bilinear form.
//
// Hermitian layout (frozen -- the cubic norm below depends on it):
//
//       [ a1   x3   x2~ ]
//   X = [ x3~  a2   x1  ]     xi~ = conj(xi)
//       [ x2   x1~  a3  ]
//
//   N(X) = a1 a2 a3 - sum_i ai n(xi) + t((x1 x2) x3)
//
// The sharp map is realized through the generic characteristic relation
// X^# = X^2 - T(X) X + S(X) I with S = (T^2 - T(X^2))/2, which keeps all
// coefficients integral for integral X; the defining polarization
// identity T(X,X,Y) = 2 tr(X^#, Y) and the adjoint identity
// (X^#)^# = N(X) X are what the test suites check against.

#pragma once

#include "jpt/composition.hpp"
#include "jpt/numeric.hpp"

#include <array>
#include <string>
#include <type_traits>
#include <vector>

namespace jpt {

class JordanAlgebra {
 public:
  enum class Kind { simple, spin };

  static JordanAlgebra simple(const CompositionAlgebra& A) {
    JordanAlgebra j;
    j.kind_ = Kind::simple;
    j.comp_ = &A;
    return j;
  }
  // R (+) Gamma(p,q); for J3^{m,n} take (p,q) = (m-1, n-1).
  static JordanAlgebra spin_factor(int p, int q) {
    if (p < 0 || q < 0) bad_input("spin factor signature must be >= 0");
    JordanAlgebra j;
    j.kind_ = Kind::spin;
    j.p_ = p;
    j.q_ = q;
    return j;
  }

  Kind kind() const { return kind_; }
  bool is_simple() const { return kind_ == Kind::simple; }
  const CompositionAlgebra& composition() const { return *comp_; }
  int p() const { return p_; }
  int q() const { return q_; }

  int dimension() const {
    return is_simple() ? 3 * comp_->dim() + 3 : 2 + p_ + q_;
  }
  // The (3q+3)-dimensional representation content: equals dimension() for
  // the simple algebras and m+n-1 = dimension()-1 for R (+) Gamma.
  int effective_dimension() const {
    return is_simple() ? dimension() : 1 + p_ + q_;
  }

  std::string name() const {
    if (is_simple()) return "H3(" + comp_->name() + ")";
    return "R+Gamma(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
  }

  friend bool operator==(const JordanAlgebra& a, const JordanAlgebra& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::simple) return a.comp_ == b.comp_;
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  JordanAlgebra() = default;
  Kind kind_ = Kind::simple;
  const CompositionAlgebra* comp_ = nullptr;
  int p_ = 0, q_ = 0;
};

template <class K>
class JordanElement {
 public:
  JordanElement() = default;
  explicit JordanElement(const JordanAlgebra& j) : alg_(j) {
    if (j.is_simple()) {
      diag_.fill(K(0));
      for (auto& x : off_) x = AlgebraElement<K>(j.composition());
    } else {
      lam_ = K(0);
      s_ = K(0);
      v_.assign(j.p() + j.q(), K(0));
    }
  }

  static JordanElement identity(const JordanAlgebra& j) {
    JordanElement x(j);
    if (j.is_simple())
      x.diag_ = {K(1), K(1), K(1)};
    else {
      x.lam_ = 1;
      x.s_ = 1;
    }
    return x;
  }
  static JordanElement diagonal(const JordanAlgebra& j, K a, K b, K c) {
    if (!j.is_simple()) bad_input("diagonal() needs a simple algebra");
    JordanElement x(j);
    x.diag_ = {std::move(a), std::move(b), std::move(c)};
    return x;
  }

  const JordanAlgebra& algebra() const { return alg_; }

  // Simple access.
  K& diag(int i) { return diag_[i]; }
  const K& diag(int i) const { return diag_[i]; }
  AlgebraElement<K>& off(int i) { return off_[i]; }
  const AlgebraElement<K>& off(int i) const { return off_[i]; }

  // Spin-factor access.
  K& lam() { return lam_; }
  const K& lam() const { return lam_; }
  K& spin_s() { return s_; }
  const K& spin_s() const { return s_; }
  std::vector<K>& spin_v() { return v_; }
  const std::vector<K>& spin_v() const { return v_; }

  bool is_zero() const {
    if (alg_.is_simple()) {
      for (int i = 0; i < 3; ++i)
        if (diag_[i] != 0 || !off_[i].is_zero()) return false;
      return true;
    }
    if (lam_ != 0 || s_ != 0) return false;
    for (const K& x : v_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const JordanElement& a, const JordanElement& b) {
    if (!(a.alg_ == b.alg_)) return false;
    if (a.alg_.is_simple())
      return a.diag_ == b.diag_ && a.off_ == b.off_;
    return a.lam_ == b.lam_ && a.s_ == b.s_ && a.v_ == b.v_;
  }

  friend JordanElement operator+(const JordanElement& a,
                                 const JordanElement& b) {
    a.check_same(b);
    JordanElement r(a.alg_);
    if (a.alg_.is_simple()) {
      for (int i = 0; i < 3; ++i) {
        r.diag_[i] = a.diag_[i] + b.diag_[i];
        r.off_[i] = a.off_[i] + b.off_[i];
      }
    } else {
      r.lam_ = a.lam_ + b.lam_;
      r.s_ = a.s_ + b.s_;
      for (size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = a.v_[i] + b.v_[i];
    }
    return r;
  }
  friend JordanElement operator-(const JordanElement& a,
                                 const JordanElement& b) {
    return a + (K(-1) * b);
  }
  friend JordanElement operator*(const K& t, const JordanElement& a) {
    JordanElement r(a.alg_);
    if (a.alg_.is_simple()) {
      for (int i = 0; i < 3; ++i) {
        r.diag_[i] = t * a.diag_[i];
        r.off_[i] = t * a.off_[i];
      }
    } else {
      r.lam_ = t * a.lam_;
      r.s_ = t * a.s_;
      for (size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = t * a.v_[i];
    }
    return r;
  }

  void check_same(const JordanElement& b) const {
    if (!(alg_ == b.alg_))
      bad_input("elements belong to different Jordan algebras");
  }

 private:
  JordanAlgebra alg_ = JordanAlgebra::spin_factor(0, 0);
  // simple
  std::array<K, 3> diag_{};
  std::array<AlgebraElement<K>, 3> off_{};
  // spin factor
  K lam_{};
  K s_{};
  std::vector<K> v_{};
};

namespace detail {

template <class K>
using Mat3 = std::array<std::array<AlgebraElement<K>, 3>, 3>;

template <class K>
Mat3<K> to_matrix(const JordanElement<K>& X) {
  const CompositionAlgebra& A = X.algebra().composition();
  Mat3<K> m;
  auto scal = [&](const K& t) {
    AlgebraElement<K> e(A);
    e[0] = t;
    return e;
  };
  m[0][0] = scal(X.diag(0));
  m[1][1] = scal(X.diag(1));
  m[2][2] = scal(X.diag(2));
  m[0][1] = X.off(2);
  m[1][0] = conjugate(X.off(2));
  m[1][2] = X.off(0);
  m[2][1] = conjugate(X.off(0));
  m[2][0] = X.off(1);
  m[0][2] = conjugate(X.off(1));
  return m;
}

template <class K>
Mat3<K> mat_mul(const Mat3<K>& a, const Mat3<K>& b) {
  Mat3<K> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      r[i][j] = cd_multiply(a[i][0], b[0][j]);
      r[i][j] = r[i][j] + cd_multiply(a[i][1], b[1][j]);
      r[i][j] = r[i][j] + cd_multiply(a[i][2], b[2][j]);
    }
  return r;
}

// Projects a Hermitian matrix back onto the structural representation,
// verifying hermiticity on the way.
template <class K>
JordanElement<K> from_hermitian(const JordanAlgebra& j, const Mat3<K>& m) {
  JordanElement<K> X(j);
  for (int i = 0; i < 3; ++i) {
    for (int k = 1; k < m[i][i].dim(); ++k)
      if (m[i][i][k] != 0) fail("matrix is not Hermitian (diagonal)");
    X.diag(i) = m[i][i][0];
  }
  if (!(m[1][0] == conjugate(m[0][1])) || !(m[2][1] == conjugate(m[1][2])) ||
      !(m[0][2] == conjugate(m[2][0])))
    fail("matrix is not Hermitian (off-diagonal)");
  X.off(2) = m[0][1];
  X.off(0) = m[1][2];
  X.off(1) = m[2][0];
  return X;
}

template <class K>
K spin_inner(const JordanAlgebra& j, const std::vector<K>& v,
             const std::vector<K>& w) {
  K r = 0;
  for (int i = 0; i < j.p() + j.q(); ++i) {
    K t = v[i] * w[i];
    if (i < j.p())
      r += t;
    else
      r -= t;
  }
  return r;
}

}  // namespace detail

// XY + YX: twice the Jordan product, defined over any coefficient ring.
template <class K>
JordanElement<K> jordan_product_doubled(const JordanElement<K>& X,
                                        const JordanElement<K>& Y) {
  X.check_same(Y);
  const JordanAlgebra& j = X.algebra();
  if (j.is_simple()) {
    auto a = detail::to_matrix(X), b = detail::to_matrix(Y);
    auto ab = detail::mat_mul(a, b), ba = detail::mat_mul(b, a);
    detail::Mat3<K> s;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) s[i][k] = ab[i][k] + ba[i][k];
    return detail::from_hermitian(j, s);
  }
  JordanElement<K> r(j);
  r.lam() = K(2) * X.lam() * Y.lam();
  r.spin_s() =
      K(2) * (X.spin_s() * Y.spin_s() +
              detail::spin_inner(j, X.spin_v(), Y.spin_v()));
  for (size_t i = 0; i < r.spin_v().size(); ++i)
    r.spin_v()[i] = K(2) * (X.spin_s() * Y.spin_v()[i] +
                            Y.spin_s() * X.spin_v()[i]);
  return r;
}

// X.Y = (XY + YX)/2.  Needs a field scalar; use the doubled form over Int.
template <class K>
JordanElement<K> jordan_product(const JordanElement<K>& X,
                                const JordanElement<K>& Y) {
  static_assert(std::is_same_v<K, Rat>,
                "jordan_product divides by 2; use jordan_product_doubled "
                "over integer coefficients");
  return K(Rat(1, 2)) * jordan_product_doubled(X, Y);
}

// X.X; integral for integral X (the halving cancels).
template <class K>
JordanElement<K> jordan_square(const JordanElement<K>& X) {
  const JordanAlgebra& j = X.algebra();
  if (j.is_simple()) {
    auto m = detail::to_matrix(X);
    return detail::from_hermitian(j, detail::mat_mul(m, m));
  }
  JordanElement<K> r(j);
  r.lam() = X.lam() * X.lam();
  r.spin_s() = X.spin_s() * X.spin_s() +
               detail::spin_inner(j, X.spin_v(), X.spin_v());
  for (size_t i = 0; i < r.spin_v().size(); ++i)
    r.spin_v()[i] = K(2) * X.spin_s() * X.spin_v()[i];
  return r;
}

// Generic linear trace: sum of the diagonal, resp. lam + 2s.
template <class K>
K linear_trace(const JordanElement<K>& X) {
  if (X.algebra().is_simple()) return X.diag(0) + X.diag(1) + X.diag(2);
  return X.lam() + K(2) * X.spin_s();
}

template <class K>
K cubic_norm(const JordanElement<K>& X) {
  const JordanAlgebra& j = X.algebra();
  if (j.is_simple()) {
    K n = X.diag(0) * X.diag(1) * X.diag(2);
    for (int i = 0; i < 3; ++i) n -= X.diag(i) * norm_form(X.off(i));
    n += trace(cd_multiply(cd_multiply(X.off(0), X.off(1)), X.off(2)));
    return n;
  }
  return X.lam() * (X.spin_s() * X.spin_s() -
                    detail::spin_inner(j, X.spin_v(), X.spin_v()));
}

// Full polarization of N, normalized so that T(X,X,X) = 6 N(X).
template <class K>
K trilinear_form(const JordanElement<K>& X, const JordanElement<K>& Y,
                 const JordanElement<K>& Z) {
  X.check_same(Y);
  X.check_same(Z);
  return cubic_norm(X + Y + Z) - cubic_norm(X + Y) - cubic_norm(X + Z) -
         cubic_norm(Y + Z) + cubic_norm(X) + cubic_norm(Y) + cubic_norm(Z);
}

// Generic trace bilinear form tr(X,Y) = T(X.Y).  Over integer coefficients
// work with 2 tr(X,Y) = T(XY + YX) instead.
template <class K>
K trace_form(const JordanElement<K>& X, const JordanElement<K>& Y) {
  static_assert(std::is_same_v<K, Rat>,
                "trace_form divides by 2; pair linear_trace with "
                "jordan_product_doubled over integer coefficients");
  return K(Rat(1, 2)) * linear_trace(jordan_product_doubled(X, Y));
}

template <class K>
K trace_form_doubled(const JordanElement<K>& X, const JordanElement<K>& Y) {
  return linear_trace(jordan_product_doubled(X, Y));
}

// Second characteristic coefficient S(X) = (T(X)^2 - T(X^2))/2; always an
// integer for integral X.
template <class K>
K quadratic_trace(const JordanElement<K>& X) {
  K t = linear_trace(X);
  K num = t * t - linear_trace(jordan_square(X));
  if constexpr (std::is_same_v<K, Int>)
    return exact_div(num, 2);
  else
    return num / 2;
}

// X^# = X^2 - T(X) X + S(X) I.  Satisfies T(X,X,Y) = 2 tr(X^#, Y) and
// (X^#)^# = N(X) X.
template <class K>
JordanElement<K> sharp(const JordanElement<K>& X) {
  const JordanAlgebra& j = X.algebra();
  JordanElement<K> r = jordan_square(X) - linear_trace(X) * X;
  return r + quadratic_trace(X) * JordanElement<K>::identity(j);
}

}  // namespace jpt
