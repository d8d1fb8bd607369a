// Massless D=5 spectrum assembly.  Each supersymmetric case carries the
// decomposition of its D=3 scalar-coset representation; the only computed
// steps are diagonal SU(2) folds (Clebsch-Gordan ladders), after which
// states are tallied by SU(2)_J spin:
//
//   bosons:   1 -> scalar, 3 -> vector (or 2-form), 5 -> graviton
//   fermions: 2 -> spin-1/2, 4 -> spin-3/2

#pragma once

#include "jpt/catalog.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jpt {

// Product of two su(2) irreps by dimension: |a-b|+1, |a-b|+3, ..., a+b-1.
std::vector<int> cg_su2(int a, int b);

struct SpinContent {
  std::map<std::string, long long> counts;

  static int su2_dim(const std::string& tag);
  long long states() const;
  long long get(const std::string& tag) const;
  std::string str() const;
  friend bool operator==(const SpinContent& a, const SpinContent& b) {
    return a.counts == b.counts;
  }
};

struct SpectrumReport {
  std::string case_id;
  std::optional<long long> n;
  RepSum bosons, fermions;  // after all folds
  SpinContent boson_content, fermion_content;
  long long boson_states = 0, fermion_states = 0;
  std::string twin_partner;

  std::string text() const;
};

// Folds the su(2) factors at 1-based positions a and b of every term into
// their Clebsch-Gordan ladder (both factors must be A1 irreps).
RepSum fold_su2(const RepSum& sum, int a, int b);

// Replays the recorded chain for a supersymmetric case; throws on any
// mismatch with the recorded data or tallies.  Families need the value
// of n; concrete cases ignore it.
SpectrumReport assemble_spectrum(const Catalog& cat, const TheoryCase& c,
                                 long long n = 0);

struct CosetCharacter {
  long long c = 0, nc = 0, dim_hat = 0;
  bool consistent() const { return c == nc && nc == dim_hat; }
};

// c(M) = c(G3) - c(G5) - 3, nc(M) = nc(G3) - nc(G5) - 5, and the
// dimension of the compact coset from the mcs data independently.
CosetCharacter coset_character(const Catalog& cat, const TheoryCase& c,
                               long long n = 0);

struct TwinComparison {
  bool bosons_match = false;      // tag-for-tag after the 2-form map
  bool states_match = false;
  bool fermions_differ = false;   // different supersymmetrizations
  bool hyper_split = false;       // exactly one side carries SU(2)'
  SpinContent bosons_a, bosons_b;
  std::string detail;

  bool pass() const {
    return bosons_match && states_match && fermions_differ && hyper_split;
  }
};

// The bosonic sectors of twin partners must coincide, with the N=4 2-form
// matching the N=2 dilatonic vector (both SU(2)_J triplets).
TwinComparison twin_compare(const Catalog& cat, const TheoryCase& a,
                            const TheoryCase& b);

}  // namespace jpt
