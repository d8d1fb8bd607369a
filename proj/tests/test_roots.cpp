#include "doctest.h"

#include "jpt/roots.hpp"

#include <map>
#include <vector>

using namespace jpt;

namespace {
std::vector<int> spins(const std::string& type) {
  return RootSystem::get(parse_lie_type(type)).principal_su2_spins();
}
}  // namespace

TEST_CASE("type validation") {
  CHECK_THROWS_AS(parse_lie_type("D2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("C1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("E9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("E5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("X4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lie_type("A"), std::invalid_argument);
  CHECK(parse_lie_type("D3").rank == 3);
  CHECK(parse_lie_type("G2").family == 'G');
}

TEST_CASE("positive root counts match (dim - rank)/2") {
  std::vector<std::string> types = {"E6", "E7", "E8", "F4", "G2"};
  for (int r = 1; r <= 5; ++r) types.push_back("A" + std::to_string(r));
  for (int r = 2; r <= 8; ++r) types.push_back("B" + std::to_string(r));
  for (int r = 2; r <= 8; ++r) types.push_back("C" + std::to_string(r));
  for (int r = 3; r <= 8; ++r) types.push_back("D" + std::to_string(r));
  for (const auto& t : types) {
    const auto& rs = RootSystem::get(parse_lie_type(t));
    CHECK_MESSAGE(static_cast<long long>(rs.positive_roots().size()) ==
                      (rs.dim() - rs.rank()) / 2,
                  "root count wrong for " << t);
    // adjoint highest weight reproduces the algebra dimension
    CHECK(rs.weyl_dim(rs.adjoint_weight()) == rs.dim());
    // highest root height = Coxeter number - 1 (sanity on the closure)
    CHECK(rs.height(rs.positive_roots().back()) == rs.coxeter_number() - 1);
  }
  CHECK(RootSystem::get(parse_lie_type("A1")).positive_roots().size() == 1);
  CHECK(RootSystem::get(parse_lie_type("E8")).positive_roots().size() == 120);
  CHECK(RootSystem::get(parse_lie_type("F4")).positive_roots().size() == 24);
}

TEST_CASE("weyl dimension formula reproduces the named dimensions") {
  auto dim = [](const std::string& t, std::vector<int> l) {
    return weyl_dim(parse_lie_type(t), l);
  };
  CHECK(dim("A1", {1}) == 2);
  CHECK(dim("A1", {4}) == 5);
  CHECK(dim("A2", {1, 0}) == 3);
  CHECK(dim("A2", {1, 1}) == 8);
  CHECK(dim("A2", {2, 0}) == 6);
  CHECK(dim("A3", {0, 1, 0}) == 6);
  CHECK(dim("A5", {0, 1, 0, 0, 0}) == 15);
  CHECK(dim("A5", {1, 0, 0, 0, 1}) == 35);
  CHECK(dim("B2", {1, 0}) == 5);
  CHECK(dim("B2", {0, 1}) == 4);
  CHECK(dim("C2", {2, 0}) == 10);
  CHECK(dim("C3", {0, 1, 0}) == 14);   // rank-2 antisymmetric traceless
  CHECK(dim("C3", {0, 0, 1}) == 14);   // rank-3 antisymmetric traceless
  CHECK(dim("C3", {2, 0, 0}) == 21);
  CHECK(dim("C4", {1, 0, 0, 0}) == 8);
  CHECK(dim("C4", {0, 1, 0, 0}) == 27);
  CHECK(dim("C4", {2, 0, 0, 0}) == 36);
  CHECK(dim("C4", {0, 0, 1, 0}) == 48);
  CHECK(dim("C4", {0, 0, 0, 1}) == 42);
  CHECK(dim("D4", {1, 0, 0, 0}) == 8);
  CHECK(dim("D4", {0, 0, 1, 0}) == 8);
  CHECK(dim("D4", {0, 0, 0, 1}) == 8);
  CHECK(dim("D6", {0, 0, 0, 0, 1, 0}) == 32);
  CHECK(dim("D6", {0, 1, 0, 0, 0, 0}) == 66);
  CHECK(dim("D8", {1, 0, 0, 0, 0, 0, 0, 0}) == 16);
  CHECK(dim("D8", {0, 0, 0, 0, 0, 0, 1, 0}) == 128);
  CHECK(dim("D8", {0, 0, 0, 0, 0, 0, 0, 1}) == 128);
  CHECK(dim("F4", {0, 0, 0, 1}) == 26);
  CHECK(dim("F4", {1, 0, 0, 0}) == 52);
  CHECK(dim("G2", {1, 0}) == 7);
  CHECK(dim("G2", {0, 1}) == 14);
  CHECK(dim("E6", {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(dim("E6", {0, 0, 0, 0, 0, 1}) == 27);
  CHECK(dim("E6", {0, 1, 0, 0, 0, 0}) == 78);
  CHECK(dim("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
  CHECK(dim("E7", {1, 0, 0, 0, 0, 0, 0}) == 133);
  CHECK(dim("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
}

TEST_CASE("weyl dimension input validation") {
  auto e6 = parse_lie_type("E6");
  CHECK_THROWS_AS(weyl_dim(e6, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_dim(e6, {-1, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("principal sl(2) spins") {
  CHECK(spins("A1") == std::vector<int>{3});
  CHECK(spins("A2") == std::vector<int>{3, 5});
  // A_n: exponents 1..n
  for (int r = 1; r <= 5; ++r) {
    std::vector<int> want;
    for (int e = 1; e <= r; ++e) want.push_back(2 * e + 1);
    CHECK(spins("A" + std::to_string(r)) == want);
  }
  // frozen from the classical exponent tables
  CHECK(spins("D4") == std::vector<int>{3, 7, 7, 11});
  CHECK(spins("B4") == std::vector<int>{3, 7, 11, 15});
  CHECK(spins("C3") == std::vector<int>{3, 7, 11});
  CHECK(spins("G2") == std::vector<int>{3, 11});
  CHECK(spins("F4") == std::vector<int>{3, 11, 15, 23});
  CHECK(spins("E6") == std::vector<int>{3, 9, 11, 15, 17, 23});
  CHECK(spins("E7") == std::vector<int>{3, 11, 15, 19, 23, 27, 35});
  CHECK(spins("E8") == std::vector<int>{3, 15, 23, 27, 35, 39, 47, 59});
  // sums checked inside principal_su2_spins; spot-check one histogram
  const auto& d4 = RootSystem::get(parse_lie_type("D4"));
  std::map<int, int> hist;
  for (const auto& r : d4.positive_roots()) hist[d4.height(r)]++;
  CHECK(hist == std::map<int, int>{{1, 4}, {2, 3}, {3, 3}, {4, 1}, {5, 1}});
}
