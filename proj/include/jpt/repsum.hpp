// Formal multiplicity-weighted sums of product-group irrep labels with
// abelian charges.  Dimensions come from the Weyl formula; factors whose
// group only enters through its dimension (the n-dependent orthogonal
// slots of the semi-simple families) are carried as dimension-only
// entries.

#pragma once

#include "jpt/roots.hpp"

#include <string>
#include <vector>

namespace jpt {

struct Factor {
  enum class Kind { irrep, abelian, dim_only };
  Kind kind = Kind::irrep;

  SimpleLieType type;           // irrep
  std::vector<int> labels;      // irrep
  char variant = 0;             // optional '+'/'-' subalgebra tag
  long long charge = 0;         // abelian: U(1) / SO(1,1) weight
  long long dim_value = 0;      // dim_only
  std::string display;          // the name as written in the catalog

  static Factor irrep(SimpleLieType t, std::vector<int> l,
                      std::string shown = "") {
    Factor f;
    f.kind = Kind::irrep;
    f.type = t;
    f.labels = std::move(l);
    f.display = std::move(shown);
    return f;
  }
  static Factor abelian(long long charge) {
    Factor f;
    f.kind = Kind::abelian;
    f.charge = charge;
    return f;
  }
  static Factor dim_only(long long dim, std::string shown = "") {
    Factor f;
    f.kind = Kind::dim_only;
    f.dim_value = dim;
    f.display = std::move(shown);
    return f;
  }

  long long dim() const {
    switch (kind) {
      case Kind::irrep: return weyl_dim(type, labels);
      case Kind::abelian: return 1;
      case Kind::dim_only: return dim_value;
    }
    return 0;
  }

  bool is_singlet() const {
    return kind != Kind::abelian && dim() == 1;
  }

  friend bool operator==(const Factor& a, const Factor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::irrep:
        return a.type == b.type && a.labels == b.labels &&
               a.variant == b.variant;
      case Kind::abelian: return a.charge == b.charge;
      case Kind::dim_only: return a.dim_value == b.dim_value;
    }
    return false;
  }
  friend bool operator<(const Factor& a, const Factor& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    switch (a.kind) {
      case Kind::irrep:
        if (!(a.type == b.type)) return a.type < b.type;
        if (a.labels != b.labels) return a.labels < b.labels;
        return a.variant < b.variant;
      case Kind::abelian: return a.charge < b.charge;
      case Kind::dim_only: return a.dim_value < b.dim_value;
    }
    return false;
  }

  std::string str() const;
};

struct IrrepLabel {
  std::vector<Factor> factors;

  long long dim() const {
    long long d = 1;
    for (const Factor& f : factors) d *= f.dim();
    return d;
  }
  friend bool operator==(const IrrepLabel& a, const IrrepLabel& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const IrrepLabel& a, const IrrepLabel& b) {
    return a.factors < b.factors;
  }
  std::string str() const;
};

struct RepSum {
  // (label, multiplicity), kept in input order for display.
  std::vector<std::pair<IrrepLabel, long long>> terms;

  void add(IrrepLabel label, long long mult = 1);
  long long total_dim() const;

  // Sum over terms of mult * (product of non-abelian dims) * charge at the
  // given abelian slot (0-based among the abelian factors of each term).
  long long charge_trace(int abelian_slot) const;

  // Sorted, multiplicity-merged copy; the canonical form for equality.
  RepSum canonicalized() const;
  friend bool operator==(const RepSum& a, const RepSum& b);

  std::string str() const;
};

// Conjugation: negates abelian charges and applies the label involution
// of each complex-irrep type (A_n reversal, odd-rank D_n spinor swap, the
// E6 diagram flip); involutive.
Factor conjugate(const Factor& f);
IrrepLabel conjugate(const IrrepLabel& l);
RepSum conjugate(const RepSum& s);

// Symmetric / antisymmetric square of the bi-fundamental (2, 2n) of
// SU(2) x Sp(2n), assembled from
//   S2(V(x)W) = S2 V (x) S2 W + L2 V (x) L2 W
//   L2(V(x)W) = S2 V (x) L2 W + L2 V (x) S2 W
// with S2(2) = 3, L2(2) = 1, S2(2n) = Adj, L2(2n) = L2_0 + 1.
enum class SquarePart { symmetric, antisymmetric };
RepSum square_bifundamental(int n, SquarePart part);

}  // namespace jpt
