// Hurwitz-type composition algebras of dimension 1, 2, 4 and 8, built by
// iterated Cayley-Dickson doubling with per-level signs gamma = +/-1.
//
// Convention (frozen; the golden tables in data/cdtables depend on it):
//   (a,b)(c,d) = (ac + gamma * conj(d) b,  da + b conj(c))
//
// All gammas = -1 gives the division algebra (R, C, H, O); flipping the
// last level to +1 gives the canonical split form (Cs, Hs, Os).  Basis
// products e_i e_j are always a single signed basis unit, so the product
// is driven by a precomputed (sign, index) table.

#pragma once

#include "jpt/numeric.hpp"

#include <array>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace jpt {

class CompositionAlgebra {
 public:
  CompositionAlgebra(std::string name, std::vector<int> gammas)
      : name_(std::move(name)), gammas_(std::move(gammas)) {
    dim_ = 1 << gammas_.size();
    if (dim_ > 8) bad_input("composition algebra dimension must be <= 8");
    for (int g : gammas_)
      if (g != 1 && g != -1) bad_input("gamma signs must be +1 or -1");
    build_table();
  }

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  const std::vector<int>& gammas() const { return gammas_; }
  bool is_division() const {
    for (int g : gammas_)
      if (g != -1) return false;
    return true;
  }

  // e_i e_j = table_sign(i,j) * e_{table_index(i,j)}
  int table_sign(int i, int j) const { return sign_[i * dim_ + j]; }
  int table_index(int i, int j) const { return index_[i * dim_ + j]; }

  // Quadratic norm of the basis unit e_i (all cross terms vanish, so the
  // norm form is diagonal on this basis).
  int unit_norm(int i) const { return unit_norm_[i]; }

  // (#positive, #negative) of the norm form.
  std::pair<int, int> signature() const {
    int pos = 0, neg = 0;
    for (int i = 0; i < dim_; ++i) (unit_norm_[i] > 0 ? pos : neg)++;
    return {pos, neg};
  }

  // Plain-text sign-matrix: row i, column j holds the signed basis index
  // of e_i e_j (0-based; "+3" means +e_3).
  std::string table_text() const {
    std::ostringstream os;
    os << "# Cayley-Dickson multiplication table: " << name_ << "\n";
    os << "dim " << dim_ << "\n";
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        if (j) os << ' ';
        os << (table_sign(i, j) > 0 ? '+' : '-') << table_index(i, j);
      }
      os << "\n";
    }
    return os.str();
  }

  // Parses the format produced by table_text (comments allowed).
  // Returns the (sign, index) matrix row-major.
  static std::vector<std::pair<int, int>> parse_table_text(std::istream& in,
                                                           int* dim_out) {
    std::string line;
    int dim = -1;
    std::vector<std::pair<int, int>> entries;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string tok;
      if (!(ls >> tok)) continue;
      if (tok == "dim") {
        if (!(ls >> dim) || dim < 1) bad_input("bad dim line in table file");
        continue;
      }
      do {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
          bad_input("bad table entry '" + tok + "'");
        entries.emplace_back(tok[0] == '+' ? 1 : -1,
                             std::stoi(tok.substr(1)));
      } while (ls >> tok);
    }
    if (dim < 0 || static_cast<int>(entries.size()) != dim * dim)
      bad_input("table file does not hold a dim x dim matrix");
    if (dim_out) *dim_out = dim;
    return entries;
  }

  bool matches_table(const std::vector<std::pair<int, int>>& entries) const {
    if (static_cast<int>(entries.size()) != dim_ * dim_) return false;
    for (int k = 0; k < dim_ * dim_; ++k)
      if (entries[k] != std::make_pair(int(sign_[k]), int(index_[k])))
        return false;
    return true;
  }

  // The seven algebras used by the catalog.
  static const CompositionAlgebra& reals();
  static const CompositionAlgebra& complexes();
  static const CompositionAlgebra& split_complexes();
  static const CompositionAlgebra& quaternions();
  static const CompositionAlgebra& split_quaternions();
  static const CompositionAlgebra& octonions();
  static const CompositionAlgebra& split_octonions();
  static const CompositionAlgebra& by_name(const std::string& name);
  static const std::vector<const CompositionAlgebra*>& all();

 private:
  // Multiplies basis units of the level-l doubling (dimension 2^l)
  // recursively; returns (sign, index).
  std::pair<int, int> mul_units(int level, int i, int j) const {
    if (level == 0) return {1, 0};
    int half = 1 << (level - 1);
    int g = gammas_[level - 1];
    bool ih = i >= half, jh = j >= half;
    int il = i & (half - 1), jl = j & (half - 1);
    // (a,0)(c,0) = (ac,0); (a,0)(0,d) = (0,da); (0,b)(c,0) = (0,b conj(c));
    // (0,b)(0,d) = (gamma conj(d) b, 0)
    if (!ih && !jh) return mul_units(level - 1, il, jl);
    if (!ih && jh) {
      auto [s, k] = mul_units(level - 1, jl, il);
      return {s, k + half};
    }
    if (ih && !jh) {
      auto [cs, c] = conj_unit(level - 1, jl);
      auto [s, k] = mul_units(level - 1, il, c);
      return {cs * s, k + half};
    }
    auto [cs, c] = conj_unit(level - 1, jl);
    auto [s, k] = mul_units(level - 1, c, il);
    return {g * cs * s, k};
  }

  static std::pair<int, int> conj_unit(int /*level*/, int i) {
    return {i == 0 ? 1 : -1, i};
  }

  void build_table() {
    int levels = static_cast<int>(gammas_.size());
    sign_.resize(dim_ * dim_);
    index_.resize(dim_ * dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) {
        auto [s, k] = mul_units(levels, i, j);
        sign_[i * dim_ + j] = static_cast<signed char>(s);
        index_[i * dim_ + j] = static_cast<signed char>(k);
      }
    // n(e_i) = e_i conj(e_i): the coefficient of e_0 in e_i e_i, negated
    // for imaginary units.
    unit_norm_.resize(dim_);
    for (int i = 0; i < dim_; ++i) {
      int s = table_sign(i, i);
      if (table_index(i, i) != 0) fail("basis unit square not scalar");
      unit_norm_[i] = (i == 0) ? s : -s;
    }
  }

  std::string name_;
  std::vector<int> gammas_;
  int dim_;
  std::vector<signed char> sign_;
  std::vector<signed char> index_;
  std::vector<int> unit_norm_;
};

inline const CompositionAlgebra& CompositionAlgebra::reals() {
  static const CompositionAlgebra a("R", {});
  return a;
}
inline const CompositionAlgebra& CompositionAlgebra::complexes() {
  static const CompositionAlgebra a("C", {-1});
  return a;
}
inline const CompositionAlgebra& CompositionAlgebra::split_complexes() {
  static const CompositionAlgebra a("Cs", {+1});
  return a;
}
inline const CompositionAlgebra& CompositionAlgebra::quaternions() {
  static const CompositionAlgebra a("H", {-1, -1});
  return a;
}
inline const CompositionAlgebra& CompositionAlgebra::split_quaternions() {
  static const CompositionAlgebra a("Hs", {-1, +1});
  return a;
}
inline const CompositionAlgebra& CompositionAlgebra::octonions() {
  static const CompositionAlgebra a("O", {-1, -1, -1});
  return a;
}
inline const CompositionAlgebra& CompositionAlgebra::split_octonions() {
  static const CompositionAlgebra a("Os", {-1, -1, +1});
  return a;
}
inline const std::vector<const CompositionAlgebra*>& CompositionAlgebra::all() {
  static const std::vector<const CompositionAlgebra*> v = {
      &reals(),       &complexes(),  &split_complexes(), &quaternions(),
      &split_quaternions(), &octonions(), &split_octonions()};
  return v;
}
inline const CompositionAlgebra& CompositionAlgebra::by_name(
    const std::string& name) {
  for (const auto* a : all())
    if (a->name() == name) return *a;
  bad_input("unknown composition algebra '" + name + "'");
}

// An element with exact coefficients on the Cayley-Dickson basis.
// K is Rat for the public API; Int is used by the property suites after
// clearing denominators (every identity tested is homogeneous).
template <class K>
class AlgebraElement {
 public:
  AlgebraElement() : alg_(nullptr) {}
  explicit AlgebraElement(const CompositionAlgebra& alg)
      : alg_(&alg), c_(alg.dim()) {}
  AlgebraElement(const CompositionAlgebra& alg, std::vector<K> coeffs)
      : alg_(&alg), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != alg.dim())
      bad_input("coefficient count does not match algebra dimension");
  }

  static AlgebraElement unit(const CompositionAlgebra& alg, int i) {
    AlgebraElement x(alg);
    x.c_[i] = 1;
    return x;
  }
  static AlgebraElement one(const CompositionAlgebra& alg) {
    return unit(alg, 0);
  }

  const CompositionAlgebra& algebra() const { return *alg_; }
  const std::vector<K>& coeffs() const { return c_; }
  K& operator[](int i) { return c_[i]; }
  const K& operator[](int i) const { return c_[i]; }
  int dim() const { return alg_->dim(); }
  bool is_zero() const {
    for (const K& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.alg_ == b.alg_ && a.c_ == b.c_;
  }

  AlgebraElement operator-() const {
    AlgebraElement r(*alg_);
    for (int i = 0; i < dim(); ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend AlgebraElement operator+(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    a.check_same(b);
    AlgebraElement r(*a.alg_);
    for (int i = 0; i < a.dim(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend AlgebraElement operator-(const AlgebraElement& a,
                                  const AlgebraElement& b) {
    a.check_same(b);
    AlgebraElement r(*a.alg_);
    for (int i = 0; i < a.dim(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend AlgebraElement operator*(const K& s, const AlgebraElement& a) {
    AlgebraElement r(*a.alg_);
    for (int i = 0; i < a.dim(); ++i) r.c_[i] = s * a.c_[i];
    return r;
  }

  void check_same(const AlgebraElement& b) const {
    if (alg_ != b.alg_)
      bad_input("elements belong to different composition algebras");
  }

 private:
  const CompositionAlgebra* alg_;
  std::vector<K> c_;
};

// Cayley-Dickson product, via the cached basis table.
template <class K>
AlgebraElement<K> cd_multiply(const AlgebraElement<K>& x,
                              const AlgebraElement<K>& y) {
  x.check_same(y);
  const CompositionAlgebra& A = x.algebra();
  AlgebraElement<K> z(A);
  const int n = A.dim();
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      K t = x[i] * y[j];
      if (A.table_sign(i, j) < 0)
        z[A.table_index(i, j)] -= t;
      else
        z[A.table_index(i, j)] += t;
    }
  }
  return z;
}

template <class K>
AlgebraElement<K> conjugate(const AlgebraElement<K>& x) {
  AlgebraElement<K> r(x.algebra());
  r[0] = x[0];
  for (int i = 1; i < x.dim(); ++i) r[i] = -x[i];
  return r;
}

// t(x) = x + conj(x), read as a scalar.
template <class K>
K trace(const AlgebraElement<K>& x) {
  return x[0] + x[0];
}

// n(x) = x conj(x); diagonal on the basis, signature (dim,0) for division
// forms and (dim/2, dim/2) for the split ones.
template <class K>
K norm_form(const AlgebraElement<K>& x) {
  K n = 0;
  for (int i = 0; i < x.dim(); ++i)
    n += K(x.algebra().unit_norm(i)) * x[i] * x[i];
  return n;
}

// Polar form b(x,y) = n(x+y) - n(x) - n(y), computed directly.
template <class K>
K norm_polar(const AlgebraElement<K>& x, const AlgebraElement<K>& y) {
  x.check_same(y);
  K b = 0;
  for (int i = 0; i < x.dim(); ++i)
    b += K(2) * K(x.algebra().unit_norm(i)) * x[i] * y[i];
  return b;
}

// Associator [x,y,z] = (xy)z - x(yz).
template <class K>
AlgebraElement<K> associator(const AlgebraElement<K>& x,
                             const AlgebraElement<K>& y,
                             const AlgebraElement<K>& z) {
  return cd_multiply(cd_multiply(x, y), z) -
         cd_multiply(x, cd_multiply(y, z));
}

using RatAlgebraElement = AlgebraElement<Rat>;
using IntAlgebraElement = AlgebraElement<Int>;

}  // namespace jpt
