#pragma once

#include "jpt/composition.hpp"
#include "jpt/jordan.hpp"
#include "jpt/numeric.hpp"

namespace jpt::testutil {

template <class K>
K draw(Rng& rng);
template <>
inline Rat draw<Rat>(Rng& rng) { return rng.small_rat(); }
template <>
inline Int draw<Int>(Rng& rng) { return rng.small_int(); }

template <class K>
AlgebraElement<K> random_element(const CompositionAlgebra& A, Rng& rng) {
  AlgebraElement<K> x(A);
  for (int i = 0; i < A.dim(); ++i) x[i] = draw<K>(rng);
  return x;
}

template <class K>
JordanElement<K> random_jordan(const JordanAlgebra& J, Rng& rng) {
  JordanElement<K> X(J);
  if (J.is_simple()) {
    for (int i = 0; i < 3; ++i) {
      X.diag(i) = draw<K>(rng);
      X.off(i) = random_element<K>(J.composition(), rng);
    }
  } else {
    X.lam() = draw<K>(rng);
    X.spin_s() = draw<K>(rng);
    for (auto& c : X.spin_v()) c = draw<K>(rng);
  }
  return X;
}

}  // namespace jpt::testutil
