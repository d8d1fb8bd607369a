#include "doctest.h"

#include "jpt/repsum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace jpt;

namespace {

SimpleLieType T(const std::string& s) { return parse_lie_type(s); }

IrrepLabel lab(std::vector<Factor> fs) { return IrrepLabel{std::move(fs)}; }

// Weight multiset of an SU(2)^m product label (doubled weights).
std::multiset<std::vector<int>> su2_weights(const IrrepLabel& l) {
  std::multiset<std::vector<int>> out;
  std::vector<std::vector<int>> acc = {{}};
  for (const Factor& f : l.factors) {
    int k = f.labels[0];
    std::vector<std::vector<int>> next;
    for (const auto& w : acc)
      for (int x = -k; x <= k; x += 2) {
        auto v = w;
        v.push_back(x);
        next.push_back(v);
      }
    acc = std::move(next);
  }
  for (auto& w : acc) out.insert(w);
  return out;
}

std::multiset<std::vector<int>> su2_weights(const RepSum& s) {
  std::multiset<std::vector<int>> out;
  for (const auto& [l, m] : s.terms)
    for (long long i = 0; i < m; ++i) {
      auto ws = su2_weights(l);
      out.insert(ws.begin(), ws.end());
    }
  return out;
}

}  // namespace

TEST_CASE("total_dim: adjoint of E8 under SU(3) x E6") {
  RepSum s;
  auto su3 = T("A2");
  auto e6 = T("E6");
  s.add(lab({Factor::irrep(su3, {1, 1}), Factor::irrep(e6, {0, 0, 0, 0, 0, 0})}));
  s.add(lab({Factor::irrep(su3, {0, 0}), Factor::irrep(e6, {0, 1, 0, 0, 0, 0})}));
  s.add(lab({Factor::irrep(su3, {1, 0}), Factor::irrep(e6, {1, 0, 0, 0, 0, 0})}));
  s.add(lab({Factor::irrep(su3, {0, 1}), Factor::irrep(e6, {0, 0, 0, 0, 0, 1})}));
  CHECK(s.total_dim() == 248);
  CHECK(RepSum{}.total_dim() == 0);

  // 128 = (5,1) + (3,27) + (1,42) over SU(2) x USp(8)
  RepSum f;
  auto su2 = T("A1");
  auto c4 = T("C4");
  f.add(lab({Factor::irrep(su2, {4}), Factor::irrep(c4, {0, 0, 0, 0})}));
  f.add(lab({Factor::irrep(su2, {2}), Factor::irrep(c4, {0, 1, 0, 0})}));
  f.add(lab({Factor::irrep(su2, {0}), Factor::irrep(c4, {0, 0, 0, 1})}));
  CHECK(f.total_dim() == 128);
}

TEST_CASE("charge trace") {
  auto su2 = T("A1");
  // 6_2 + 6_-2 -> 0
  RepSum s;
  s.add(lab({Factor::irrep(T("A3"), {0, 1, 0}), Factor::abelian(2)}));
  s.add(lab({Factor::irrep(T("A3"), {0, 1, 0}), Factor::abelian(-2)}));
  CHECK(s.charge_trace(0) == 0);

  // single neutral singlet
  RepSum t;
  t.add(lab({Factor::irrep(su2, {0}), Factor::abelian(0)}));
  CHECK(t.charge_trace(0) == 0);

  // missing slot is an input error
  RepSum u;
  u.add(lab({Factor::irrep(su2, {0})}));
  CHECK_THROWS_AS(u.charge_trace(0), std::invalid_argument);

  // the adjoint branching of so(4,n+2), second step, at n = 5:
  // (3, n_2) + (3, 1_-4) + (3', n_-2) + (3', 1_4) + neutral terms
  RepSum adj;
  auto a2 = T("A2");
  int n = 5;
  adj.add(lab({Factor::irrep(a2, {1, 1}), Factor::abelian(0)}));
  adj.add(lab({Factor::dim_only(n * (n - 1) / 2, "adj"), Factor::abelian(0)}));
  adj.add(lab({Factor::irrep(a2, {1, 0}), Factor::dim_only(n, "n"),
               Factor::abelian(2)}));
  adj.add(lab({Factor::irrep(a2, {1, 0}), Factor::abelian(-4)}));
  adj.add(lab({Factor::irrep(a2, {0, 1}), Factor::dim_only(n, "n"),
               Factor::abelian(-2)}));
  adj.add(lab({Factor::irrep(a2, {0, 1}), Factor::abelian(4)}));
  CHECK(adj.charge_trace(0) == 0);
}

TEST_CASE("conjugation") {
  auto a2 = T("A2");
  // conj(3_2) = 3bar_-2
  IrrepLabel l = lab({Factor::irrep(a2, {1, 0}), Factor::abelian(2)});
  IrrepLabel want = lab({Factor::irrep(a2, {0, 1}), Factor::abelian(-2)});
  CHECK(conjugate(l) == want);
  CHECK(conjugate(conjugate(l)) == l);

  // the Jordan-pair block (3,27) + (3',27') is self-conjugate as a sum
  RepSum pair;
  auto e6 = T("E6");
  pair.add(lab({Factor::irrep(a2, {1, 0}),
                Factor::irrep(e6, {1, 0, 0, 0, 0, 0})}));
  pair.add(lab({Factor::irrep(a2, {0, 1}),
                Factor::irrep(e6, {0, 0, 0, 0, 0, 1})}));
  CHECK(conjugate(pair) == pair);

  // D_odd spinor swap, involutive; D_even spinors self-conjugate
  Factor d5s = Factor::irrep(T("D5"), {0, 0, 0, 1, 0});
  CHECK(!(conjugate(d5s) == d5s));
  CHECK(conjugate(conjugate(d5s)) == d5s);
  Factor d4s = Factor::irrep(T("D4"), {0, 0, 1, 0});
  CHECK(conjugate(d4s) == d4s);
}

TEST_CASE("repsum equality is canonical") {
  auto su2 = T("A1");
  RepSum a, b;
  a.add(lab({Factor::irrep(su2, {2})}));
  a.add(lab({Factor::irrep(su2, {0})}), 2);
  b.add(lab({Factor::irrep(su2, {0})}));
  b.add(lab({Factor::irrep(su2, {2})}));
  b.add(lab({Factor::irrep(su2, {0})}));
  CHECK(a == b);
  b.add(lab({Factor::irrep(su2, {4})}));
  CHECK(!(a == b));
}

TEST_CASE("total_dim is additive and multiplicative") {
  auto su2 = T("A1");
  auto c4 = T("C4");
  RepSum a, b;
  a.add(lab({Factor::irrep(su2, {2}), Factor::irrep(c4, {0, 1, 0, 0})}));
  b.add(lab({Factor::irrep(su2, {4}), Factor::irrep(c4, {0, 0, 0, 0})}), 2);
  RepSum both = a;
  for (const auto& [l, m] : b.terms) both.add(l, m);
  CHECK(both.total_dim() == a.total_dim() + b.total_dim());
  // factor products multiply dimensions
  CHECK(a.terms[0].first.dim() == 3 * 27);
  CHECK(lab({Factor::irrep(su2, {1}), Factor::abelian(5),
             Factor::dim_only(7, "x")})
            .dim() == 14);
}

TEST_CASE("square of the bi-fundamental (2,2n)") {
  // n = 4: antisymmetric part is (3,1)+(1,36)+(3,27): so(16)
  RepSum a4 = square_bifundamental(4, SquarePart::antisymmetric);
  CHECK(a4.total_dim() == 120);
  RepSum want;
  auto su2 = T("A1");
  auto c4 = T("C4");
  want.add(lab({Factor::irrep(su2, {2}), Factor::irrep(c4, {0, 0, 0, 0})}));
  want.add(lab({Factor::irrep(su2, {0}), Factor::irrep(c4, {2, 0, 0, 0})}));
  want.add(lab({Factor::irrep(su2, {2}), Factor::irrep(c4, {0, 1, 0, 0})}));
  CHECK(a4 == want);
  CHECK(square_bifundamental(4, SquarePart::symmetric).total_dim() ==
        16 * 17 / 2);

  // n = 3: (3,1)+(1,21)+(3,14): so(12)
  RepSum a3 = square_bifundamental(3, SquarePart::antisymmetric);
  CHECK(a3.total_dim() == 66);
  RepSum want3;
  auto c3 = T("C3");
  want3.add(lab({Factor::irrep(su2, {2}), Factor::irrep(c3, {0, 0, 0})}));
  want3.add(lab({Factor::irrep(su2, {0}), Factor::irrep(c3, {2, 0, 0})}));
  want3.add(lab({Factor::irrep(su2, {2}), Factor::irrep(c3, {0, 1, 0})}));
  CHECK(a3 == want3);

  // generic dims: antisym = dim so(4n), sym = dim sp(4n)... (4n)(4n+1)/2
  for (int n = 1; n <= 6; ++n) {
    CHECK(square_bifundamental(n, SquarePart::antisymmetric).total_dim() ==
          2 * n * (4 * n - 1));
    CHECK(square_bifundamental(n, SquarePart::symmetric).total_dim() ==
          2 * n * (4 * n + 1));
  }
}

TEST_CASE("square of (2,2): weight enumeration oracle") {
  // Sp(2) ~ SU(2): enumerate the weights of S^2 and L^2 of (2,2) directly
  // and compare multisets against the structured construction.
  std::vector<std::pair<int, int>> basis = {{1, 1}, {1, -1}, {-1, 1},
                                            {-1, -1}};
  std::multiset<std::vector<int>> sym, anti;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      std::vector<int> w = {basis[i].first + basis[j].first,
                            basis[i].second + basis[j].second};
      sym.insert(w);
      if (i != j) anti.insert(w);
    }
  CHECK(su2_weights(square_bifundamental(1, SquarePart::symmetric)) == sym);
  CHECK(su2_weights(square_bifundamental(1, SquarePart::antisymmetric)) ==
        anti);
}
