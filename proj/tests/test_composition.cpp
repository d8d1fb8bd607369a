#include "doctest.h"

#include "jpt/composition.hpp"
#include "test_util.hpp"

#include <fstream>

using namespace jpt;

namespace {
const int kSamples = 200;  // the verify runner reruns these at >= 1000

std::string table_path(const std::string& name) {
  return std::string(JPT_DATA_DIR) + "/cdtables/" + name + ".txt";
}
}  // namespace

TEST_CASE("basis and unit element") {
  for (const auto* A : CompositionAlgebra::all()) {
    auto one = RatAlgebraElement::one(*A);
    Rng rng(7);
    auto x = testutil::random_element<Rat>(*A, rng);
    CHECK(cd_multiply(one, x) == x);
    CHECK(cd_multiply(x, one) == x);
    CHECK(conjugate(one) == one);
    CHECK(trace(one) == Rat(2));
    CHECK(norm_form(one) == Rat(1));
  }
}

TEST_CASE("quaternion and octonion sign conventions") {
  const auto& H = CompositionAlgebra::quaternions();
  auto e = [&](int i) { return RatAlgebraElement::unit(H, i); };
  CHECK(cd_multiply(e(1), e(2)) == e(3));
  CHECK(cd_multiply(e(2), e(1)) == -e(3));
  CHECK(cd_multiply(e(1), e(1)) == -e(0));

  const auto& O = CompositionAlgebra::octonions();
  auto f = [&](int i) { return RatAlgebraElement::unit(O, i); };
  CHECK(cd_multiply(f(1), f(2)) == f(3));
  for (int i = 1; i < 8; ++i) CHECK(cd_multiply(f(i), f(i)) == -f(0));
}

TEST_CASE("descriptor mismatch is rejected") {
  auto x = RatAlgebraElement::one(CompositionAlgebra::octonions());
  auto y = RatAlgebraElement::one(CompositionAlgebra::quaternions());
  CHECK_THROWS_AS(cd_multiply(x, y), std::invalid_argument);
  CHECK_THROWS_AS(
      RatAlgebraElement(CompositionAlgebra::octonions(), {Rat(1), Rat(2)}),
      std::invalid_argument);
}

TEST_CASE("composition law, exact") {
  Rng rng(11);
  for (const auto* A : CompositionAlgebra::all()) {
    for (int s = 0; s < kSamples; ++s) {
      auto x = testutil::random_element<Rat>(*A, rng);
      auto y = testutil::random_element<Rat>(*A, rng);
      CHECK(norm_form(cd_multiply(x, y)) == norm_form(x) * norm_form(y));
    }
  }
}

TEST_CASE("conjugation is an anti-automorphism") {
  Rng rng(13);
  for (const auto* A : CompositionAlgebra::all()) {
    for (int s = 0; s < kSamples; ++s) {
      auto x = testutil::random_element<Rat>(*A, rng);
      auto y = testutil::random_element<Rat>(*A, rng);
      CHECK(conjugate(cd_multiply(x, y)) ==
            cd_multiply(conjugate(y), conjugate(x)));
    }
  }
}

TEST_CASE("alternativity in dimension 8, associativity below") {
  Rng rng(17);
  for (const auto* A : CompositionAlgebra::all()) {
    for (int s = 0; s < kSamples / 2; ++s) {
      auto x = testutil::random_element<Rat>(*A, rng);
      auto y = testutil::random_element<Rat>(*A, rng);
      CHECK(associator(x, x, y).is_zero());
      CHECK(associator(x, y, y).is_zero());
      if (A->dim() <= 4) {
        auto z = testutil::random_element<Rat>(*A, rng);
        CHECK(associator(x, y, z).is_zero());
      }
    }
  }
}

TEST_CASE("division forms are anisotropic, split forms have null vectors") {
  Rng rng(19);
  for (const auto* A : CompositionAlgebra::all()) {
    if (A->is_division()) {
      for (int s = 0; s < kSamples; ++s) {
        auto x = testutil::random_element<Rat>(*A, rng);
        if (!x.is_zero()) CHECK(norm_form(x) > 0);
      }
    } else {
      // Scan the basis for a unit of norm -1; e0 + e_k is then null.
      int k = -1;
      for (int i = 1; i < A->dim(); ++i)
        if (A->unit_norm(i) == -1) k = i;
      REQUIRE(k >= 0);
      auto x = RatAlgebraElement::one(*A) + RatAlgebraElement::unit(*A, k);
      CHECK(!x.is_zero());
      CHECK(norm_form(x) == 0);
    }
  }
}

TEST_CASE("norm form signatures") {
  CHECK(CompositionAlgebra::octonions().signature() == std::pair{8, 0});
  CHECK(CompositionAlgebra::split_octonions().signature() == std::pair{4, 4});
  CHECK(CompositionAlgebra::split_quaternions().signature() ==
        std::pair{2, 2});
  CHECK(CompositionAlgebra::split_complexes().signature() == std::pair{1, 1});
  CHECK(CompositionAlgebra::reals().signature() == std::pair{1, 0});
  // cross terms of the polar form vanish on the basis
  const auto& Os = CompositionAlgebra::split_octonions();
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      CHECK(norm_polar(RatAlgebraElement::unit(Os, i),
                       RatAlgebraElement::unit(Os, j)) == 0);
}

TEST_CASE("golden multiplication tables round-trip and match") {
  for (const auto* A : CompositionAlgebra::all()) {
    // serialize -> parse is lossless
    std::istringstream ss(A->table_text());
    int dim = 0;
    auto entries = CompositionAlgebra::parse_table_text(ss, &dim);
    CHECK(dim == A->dim());
    CHECK(A->matches_table(entries));

    std::ifstream in(table_path(A->name()));
    REQUIRE_MESSAGE(in.good(), "missing golden table for " << A->name());
    auto golden = CompositionAlgebra::parse_table_text(in, &dim);
    CHECK_MESSAGE(A->matches_table(golden),
                  "golden table mismatch for " << A->name());
  }
}
