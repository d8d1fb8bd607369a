// Real forms of the (semi)simple Lie algebras as bookkeeping records:
// dimension, maximal compact subalgebra, character = nc - c.  These are
// catalog data, not derived from structure theory; the consistency check
// ties the three together.

#pragma once

#include "jpt/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jpt {

struct RealFormRecord {
  std::string name;
  // Complexification as a product of simple types; empty for abelian and
  // trivial entries (dim is then stored directly).
  std::vector<SimpleLieType> complex_types;
  long long dim = 0;
  // Component names of the maximal compact subalgebra ("self" for compact
  // forms is resolved at load time into the record's own name).
  std::vector<std::string> mcs;
  long long character = 0;
  bool compact = false;
  // Abelian tags: U(1) counts one compact generator, SO(1,1) one
  // non-compact generator.
  bool abelian = false;

  long long compact_dim() const { return (dim - character) / 2; }
  long long noncompact_dim() const { return (dim + character) / 2; }
};

// so(p,q): dim, mcs = so(p) + so(q), character = pq - dim so(p) - dim so(q).
RealFormRecord make_orthogonal(long long p, long long q);

// Name of the form "SO(p)" or "SO(p,q)" with integer arguments.
std::optional<std::pair<long long, long long>> parse_orthogonal_name(
    const std::string& name);

}  // namespace jpt
