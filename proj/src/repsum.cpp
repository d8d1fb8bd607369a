#include "jpt/repsum.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace jpt {

std::string Factor::str() const {
  switch (kind) {
    case Kind::irrep: {
      std::string s = display.empty()
                          ? std::to_string(weyl_dim(type, labels))
                          : display;
      if (variant) s += variant;
      return s;
    }
    case Kind::abelian: return "q" + std::to_string(charge);
    case Kind::dim_only:
      return display.empty() ? "{" + std::to_string(dim_value) + "}" : display;
  }
  return "?";
}

std::string IrrepLabel::str() const {
  std::ostringstream os;
  std::vector<const Factor*> compacts;
  std::vector<long long> charges;
  for (const Factor& f : factors) {
    if (f.kind == Factor::Kind::abelian)
      charges.push_back(f.charge);
    else
      compacts.push_back(&f);
  }
  if (compacts.size() == 1) {
    os << compacts[0]->str();
  } else {
    os << '(';
    for (size_t i = 0; i < compacts.size(); ++i) {
      if (i) os << ',';
      os << compacts[i]->str();
    }
    os << ')';
  }
  if (!charges.empty()) {
    os << '_';
    if (charges.size() > 1) os << '{';
    for (size_t i = 0; i < charges.size(); ++i) {
      if (i) os << ',';
      os << charges[i];
    }
    if (charges.size() > 1) os << '}';
  }
  return os.str();
}

void RepSum::add(IrrepLabel label, long long mult) {
  if (mult <= 0) bad_input("multiplicities must be positive");
  // Terms are kept in input order (the order the source lists them);
  // canonicalized() merges duplicates for equality testing.
  terms.emplace_back(std::move(label), mult);
}

long long RepSum::total_dim() const {
  long long d = 0;
  for (const auto& [l, m] : terms) d += m * l.dim();
  return d;
}

long long RepSum::charge_trace(int abelian_slot) const {
  long long tr = 0;
  for (const auto& [l, m] : terms) {
    long long dims = 1, charge = 0;
    int seen = 0;
    bool found = false;
    for (const Factor& f : l.factors) {
      if (f.kind == Factor::Kind::abelian) {
        if (seen == abelian_slot) {
          charge = f.charge;
          found = true;
        }
        ++seen;
      } else {
        dims *= f.dim();
      }
    }
    if (!found) bad_input("term " + l.str() + " has no abelian slot " +
                          std::to_string(abelian_slot));
    tr += m * dims * charge;
  }
  return tr;
}

RepSum RepSum::canonicalized() const {
  std::map<IrrepLabel, long long> merged;
  for (const auto& [l, m] : terms) merged[l] += m;
  RepSum r;
  for (const auto& [l, m] : merged) r.terms.emplace_back(l, m);
  return r;
}

bool operator==(const RepSum& a, const RepSum& b) {
  return a.canonicalized().terms == b.canonicalized().terms;
}

std::string RepSum::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, m] : terms) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "x";
    os << l.str();
  }
  if (first) os << "0";
  return os.str();
}

Factor conjugate(const Factor& f) {
  Factor r = f;
  switch (f.kind) {
    case Factor::Kind::abelian:
      r.charge = -f.charge;
      break;
    case Factor::Kind::irrep: {
      std::vector<int>& l = r.labels;
      if (f.type.family == 'A') {
        std::reverse(l.begin(), l.end());
      } else if (f.type.family == 'D' && f.type.rank % 2 == 1) {
        std::swap(l[l.size() - 1], l[l.size() - 2]);
      } else if (f.type.family == 'E' && f.type.rank == 6) {
        std::swap(l[0], l[5]);
        std::swap(l[2], l[4]);
      }
      if (!(r.labels == f.labels)) r.display.clear();
      break;
    }
    case Factor::Kind::dim_only:
      break;
  }
  return r;
}

IrrepLabel conjugate(const IrrepLabel& l) {
  IrrepLabel r;
  for (const Factor& f : l.factors) r.factors.push_back(conjugate(f));
  return r;
}

RepSum conjugate(const RepSum& s) {
  RepSum r;
  for (const auto& [l, m] : s.terms) r.add(conjugate(l), m);
  return r;
}

RepSum square_bifundamental(int n, SquarePart part) {
  if (n < 1) bad_input("square_bifundamental needs n >= 1");
  // Sp(2n): C_n for n >= 2, A_1 for n = 1.
  SimpleLieType sp = n >= 2 ? SimpleLieType{'C', n} : SimpleLieType{'A', 1};
  SimpleLieType su2{'A', 1};
  auto sp_labels = [&](int first, int second) {
    std::vector<int> l(n >= 2 ? n : 1, 0);
    l[0] = first;
    if (n >= 2) l[1] = second;
    return l;
  };
  Factor triplet = Factor::irrep(su2, {2});
  Factor su2_singlet = Factor::irrep(su2, {0});
  Factor sp_adjoint = Factor::irrep(sp, sp_labels(2, 0));
  Factor sp_singlet = Factor::irrep(sp, sp_labels(0, 0));
  // L2_0 (rank-2 antisymmetric traceless, dim 2n^2-n-1) vanishes for n=1.
  bool has_l20 = n >= 2;
  Factor sp_l20 = has_l20 ? Factor::irrep(sp, sp_labels(0, 1)) : Factor{};

  RepSum r;
  if (part == SquarePart::symmetric) {
    r.add({{triplet, sp_adjoint}});
    if (has_l20) r.add({{su2_singlet, sp_l20}});
    r.add({{su2_singlet, sp_singlet}});
  } else {
    r.add({{triplet, sp_singlet}});
    r.add({{su2_singlet, sp_adjoint}});
    if (has_l20) r.add({{triplet, sp_l20}});
  }
  return r;
}

}  // namespace jpt
