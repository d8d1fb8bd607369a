// Root systems of the simple Lie types, the Weyl dimension formula, and
// the exponents of the principal sl(2).
//
// Conventions: Bourbaki node numbering throughout; Cartan matrix entries
// a_ij = <alpha_i, alpha_j^v>; roots stored as integer coordinates on the
// simple-root basis.

#pragma once

#include "jpt/numeric.hpp"

#include <string>
#include <vector>

namespace jpt {

struct SimpleLieType {
  char family = 'A';  // A B C D E F G
  int rank = 1;

  std::string str() const { return family + std::to_string(rank); }
  friend bool operator==(const SimpleLieType& a, const SimpleLieType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator<(const SimpleLieType& a, const SimpleLieType& b) {
    return a.family != b.family ? a.family < b.family : a.rank < b.rank;
  }
};

// Accepts "A1".."A..", "B2..", "C2..", "D3..", "E6".."E8", "F4", "G2".
SimpleLieType parse_lie_type(const std::string& s);
bool is_valid_lie_type(const SimpleLieType& t);

// dim of the simple Lie algebra of this type (closed form).
long long lie_algebra_dim(const SimpleLieType& t);

using Root = std::vector<int>;  // coordinates on the simple-root basis

class RootSystem {
 public:
  explicit RootSystem(const SimpleLieType& type);

  const SimpleLieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // d_i with (alpha_i, alpha_j) = a_ij d_j; integral by choice of scale.
  const std::vector<int>& symmetrizer() const { return sym_; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  long long dim() const { return lie_algebra_dim(type_); }
  int height(const Root& r) const;
  // Dynkin labels of the highest root (the adjoint highest weight).
  std::vector<int> adjoint_weight() const;
  int coxeter_number() const;

  // Weyl dimension formula at the given Dynkin labels (exact; the result
  // must come out integral or the root data are corrupt).
  Int weyl_dim(const std::vector<int>& labels) const;

  // Odd dimensions 2 e_i + 1 of the sl(2)-pieces of the adjoint under the
  // principal sl(2) (exponents e_i from the dual partition of the root
  // height histogram), ascending.  Their sum is dim().
  std::vector<int> principal_su2_spins() const;

  // Cached per type.
  static const RootSystem& get(const SimpleLieType& type);

 private:
  SimpleLieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<Root> positive_;
};

// Convenience wrapper: weyl_dim as a plain integer (fits easily for every
// irrep named in the catalog).
long long weyl_dim(const SimpleLieType& type, const std::vector<int>& labels);

}  // namespace jpt
