#include "doctest.h"

#include "jpt/jordan.hpp"
#include "test_util.hpp"

#include <vector>

using namespace jpt;

namespace {

const int kSamples = 100;  // the verify runner reruns the suites at >= 1000

std::vector<JordanAlgebra> catalog_algebras() {
  std::vector<JordanAlgebra> v;
  for (const auto* A : CompositionAlgebra::all())
    v.push_back(JordanAlgebra::simple(*A));
  v.push_back(JordanAlgebra::spin_factor(1, 1));
  v.push_back(JordanAlgebra::spin_factor(1, 5));
  v.push_back(JordanAlgebra::spin_factor(5, 1));
  for (int n = 3; n <= 8; ++n)
    v.push_back(JordanAlgebra::spin_factor(1, n - 1));
  return v;
}

// Determinant of the Hermitian matrix by cofactor expansion, valid over
// the associative and commutative algebras R and C; independent of the
// cubic-norm formula.
Rat cofactor_determinant(const JordanElement<Rat>& X) {
  auto m = detail::to_matrix(X);
  auto mul = [](const RatAlgebraElement& a, const RatAlgebraElement& b) {
    return cd_multiply(a, b);
  };
  RatAlgebraElement det =
      mul(m[0][0], mul(m[1][1], m[2][2]) - mul(m[1][2], m[2][1])) -
      mul(m[0][1], mul(m[1][0], m[2][2]) - mul(m[1][2], m[2][0])) +
      mul(m[0][2], mul(m[1][0], m[2][1]) - mul(m[1][1], m[2][0]));
  for (int k = 1; k < det.dim(); ++k) CHECK(det[k] == 0);
  return det[0];
}

}  // namespace

TEST_CASE("descriptor dimensions") {
  for (const auto* A : CompositionAlgebra::all()) {
    auto J = JordanAlgebra::simple(*A);
    CHECK(J.dimension() == 3 * A->dim() + 3);
    CHECK(J.effective_dimension() == J.dimension());
  }
  // J3^{m,n} = R + Gamma(m-1, n-1) has dim m+n and effective dim m+n-1.
  for (int m : {2, 6})
    for (int n = 1; n <= 8; ++n) {
      auto J = JordanAlgebra::spin_factor(m - 1, n - 1);
      CHECK(J.dimension() == m + n);
      CHECK(J.effective_dimension() == m + n - 1);
    }
}

TEST_CASE("identity element and commutativity") {
  Rng rng(23);
  for (const auto& J : catalog_algebras()) {
    auto I = JordanElement<Rat>::identity(J);
    CHECK(cubic_norm(I) == 1);
    CHECK(linear_trace(I) == 3);
    for (int s = 0; s < 20; ++s) {
      auto X = testutil::random_jordan<Rat>(J, rng);
      auto Y = testutil::random_jordan<Rat>(J, rng);
      CHECK(jordan_product(I, X) == X);
      CHECK(jordan_product(X, Y) == jordan_product(Y, X));
    }
  }
}

TEST_CASE("jordan identity, exact (integer fast path)") {
  Rng rng(29);
  for (const auto& J : catalog_algebras()) {
    for (int s = 0; s < kSamples; ++s) {
      auto X = testutil::random_jordan<Int>(J, rng);
      auto Y = testutil::random_jordan<Int>(J, rng);
      // With P(A,B) = AB + BA, the Jordan identity scales to
      // P(P(X,X), P(X,Y)) = P(X, P(P(X,X), Y)).
      auto XX = jordan_product_doubled(X, X);
      CHECK(jordan_product_doubled(XX, jordan_product_doubled(X, Y)) ==
            jordan_product_doubled(X, jordan_product_doubled(XX, Y)));
    }
  }
}

TEST_CASE("jordan identity over rationals (spot check)") {
  Rng rng(31);
  auto J = JordanAlgebra::simple(CompositionAlgebra::split_octonions());
  for (int s = 0; s < 10; ++s) {
    auto X = testutil::random_jordan<Rat>(J, rng);
    auto Y = testutil::random_jordan<Rat>(J, rng);
    auto X2 = jordan_product(X, X);
    CHECK(jordan_product(X2, jordan_product(X, Y)) ==
          jordan_product(X, jordan_product(X2, Y)));
  }
}

TEST_CASE("cubic norm: diagonal case and homogeneity") {
  Rng rng(37);
  for (const auto* A : CompositionAlgebra::all()) {
    auto J = JordanAlgebra::simple(*A);
    auto D = JordanElement<Rat>::diagonal(J, Rat(2), Rat(-3), Rat(5));
    CHECK(cubic_norm(D) == Rat(-30));
    CHECK(sharp(D) == JordanElement<Rat>::diagonal(J, Rat(-15), Rat(10),
                                                   Rat(-6)));
    for (int s = 0; s < 25; ++s) {
      auto X = testutil::random_jordan<Rat>(J, rng);
      Rat lam = rng.small_rat();
      CHECK(cubic_norm(lam * X) == lam * lam * lam * cubic_norm(X));
    }
  }
  for (const auto& J : catalog_algebras()) {
    if (J.is_simple()) continue;
    for (int s = 0; s < 25; ++s) {
      auto X = testutil::random_jordan<Rat>(J, rng);
      Rat lam = rng.small_rat();
      CHECK(cubic_norm(lam * X) == lam * lam * lam * cubic_norm(X));
    }
  }
}

TEST_CASE("cubic norm equals the determinant over R and C") {
  Rng rng(41);
  for (const auto* A : {&CompositionAlgebra::reals(),
                        &CompositionAlgebra::complexes()}) {
    auto J = JordanAlgebra::simple(*A);
    for (int s = 0; s < kSamples; ++s) {
      auto X = testutil::random_jordan<Rat>(J, rng);
      CHECK(cubic_norm(X) == cofactor_determinant(X));
    }
  }
}

TEST_CASE("octonionic triple trace term is cyclic") {
  Rng rng(43);
  for (const auto* A : CompositionAlgebra::all()) {
    for (int s = 0; s < 50; ++s) {
      auto a = testutil::random_element<Rat>(*A, rng);
      auto b = testutil::random_element<Rat>(*A, rng);
      auto c = testutil::random_element<Rat>(*A, rng);
      Rat t1 = trace(cd_multiply(cd_multiply(a, b), c));
      Rat t2 = trace(cd_multiply(cd_multiply(b, c), a));
      Rat t3 = trace(cd_multiply(cd_multiply(c, a), b));
      CHECK(t1 == t2);
      CHECK(t2 == t3);
    }
  }
}

TEST_CASE("trilinear form: normalization, symmetry, derivative oracle") {
  Rng rng(47);
  for (const auto& J : catalog_algebras()) {
    auto I = JordanElement<Rat>::identity(J);
    CHECK(trilinear_form(I, I, I) == 6 * cubic_norm(I));
    for (int s = 0; s < 25; ++s) {
      auto X = testutil::random_jordan<Rat>(J, rng);
      auto Y = testutil::random_jordan<Rat>(J, rng);
      auto Z = testutil::random_jordan<Rat>(J, rng);
      Rat t = trilinear_form(X, Y, Z);
      CHECK(t == trilinear_form(Y, X, Z));
      CHECK(t == trilinear_form(X, Z, Y));
      CHECK(trilinear_form(X, X, X) == 6 * cubic_norm(X));
      // N(X + tY) = N(X) + t/2 T(X,X,Y) + O(t^2): extract the linear
      // coefficient from exact evaluations of N alone.
      Rat linear = (cubic_norm(X + Y) - cubic_norm(X - Y)) / 2 -
                   cubic_norm(Y);
      CHECK(linear == trilinear_form(X, X, Y) / 2);
    }
  }
}

TEST_CASE("sharp: defining polarization and adjoint identity") {
  Rng rng(53);
  for (const auto& J : catalog_algebras()) {
    auto I = JordanElement<Rat>::identity(J);
    CHECK(sharp(I) == I);
    for (int s = 0; s < kSamples / 2; ++s) {
      auto X = testutil::random_jordan<Int>(J, rng);
      auto Y = testutil::random_jordan<Int>(J, rng);
      auto Xs = sharp(X);
      // T(X,X,Y) = 2 tr(X^#, Y) = T(X^# Y + Y X^#)
      CHECK(trilinear_form(X, X, Y) == trace_form_doubled(Xs, Y));
      CHECK(sharp(Xs) == cubic_norm(X) * X);
    }
    // and over rationals
    for (int s = 0; s < 5; ++s) {
      auto X = testutil::random_jordan<Rat>(J, rng);
      auto Y = testutil::random_jordan<Rat>(J, rng);
      CHECK(trilinear_form(X, X, Y) == 2 * trace_form(sharp(X), Y));
      CHECK(sharp(sharp(X)) == cubic_norm(X) * X);
    }
  }
}

TEST_CASE("spin factor product matches the stated formula") {
  auto J = JordanAlgebra::spin_factor(1, 5);
  Rng rng(59);
  for (int s = 0; s < 50; ++s) {
    auto X = testutil::random_jordan<Rat>(J, rng);
    auto Y = testutil::random_jordan<Rat>(J, rng);
    auto Z = jordan_product(X, Y);
    CHECK(Z.lam() == X.lam() * Y.lam());
    Rat inner = X.spin_v()[0] * Y.spin_v()[0];
    for (int i = 1; i < 6; ++i) inner -= X.spin_v()[i] * Y.spin_v()[i];
    CHECK(Z.spin_s() == X.spin_s() * Y.spin_s() + inner);
    for (int i = 0; i < 6; ++i)
      CHECK(Z.spin_v()[i] ==
            X.spin_s() * Y.spin_v()[i] + Y.spin_s() * X.spin_v()[i]);
    // N(lam, s, v) = lam (s^2 - <v,v>)
    Rat vv = X.spin_v()[0] * X.spin_v()[0];
    for (int i = 1; i < 6; ++i) vv -= X.spin_v()[i] * X.spin_v()[i];
    CHECK(cubic_norm(X) == X.lam() * (X.spin_s() * X.spin_s() - vv));
  }
}

TEST_CASE("mismatched descriptors are rejected") {
  auto J1 = JordanAlgebra::simple(CompositionAlgebra::octonions());
  auto J2 = JordanAlgebra::spin_factor(1, 1);
  auto X = JordanElement<Rat>::identity(J1);
  auto Y = JordanElement<Rat>::identity(J2);
  CHECK_THROWS_AS(jordan_product(X, Y), std::invalid_argument);
}
