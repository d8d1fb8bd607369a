#include "doctest.h"

#include "jpt/spectrum.hpp"
#include "jpt/verify.hpp"

using namespace jpt;

namespace {
const Catalog& shipped() {
  static Catalog cat = Catalog::load(Catalog::default_path());
  return cat;
}
}  // namespace

TEST_CASE("su(2) products") {
  CHECK(cg_su2(2, 2) == std::vector<int>{1, 3});
  CHECK(cg_su2(4, 2) == std::vector<int>{3, 5});
  CHECK(cg_su2(3, 3) == std::vector<int>{1, 3, 5});
  CHECK(cg_su2(1, 7) == std::vector<int>{7});
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      int total = 0;
      for (int c : cg_su2(a, b)) total += c;
      CHECK(total == a * b);
    }
  CHECK_THROWS_AS(cg_su2(0, 2), std::invalid_argument);
}

TEST_CASE("maximal theory spectrum: 128 + 128") {
  const Catalog& cat = shipped();
  SpectrumReport rep =
      assemble_spectrum(cat, *cat.find_case("q8-split"));
  CHECK(rep.boson_states == 128);
  CHECK(rep.fermion_states == 128);
  CHECK(rep.boson_content.get("graviton") == 1);
  CHECK(rep.boson_content.get("vector") == 27);
  CHECK(rep.boson_content.get("scalar") == 42);
  CHECK(rep.fermion_content.get("three_half") == 8);
  CHECK(rep.fermion_content.get("half") == 48);
}

TEST_CASE("exceptional minimal theory spectrum: 112 + 112") {
  const Catalog& cat = shipped();
  SpectrumReport rep =
      assemble_spectrum(cat, *cat.find_case("q8-octonionic"));
  CHECK(rep.boson_states == 112);
  CHECK(rep.fermion_states == 112);
  CHECK(rep.boson_content.get("vector") == 27);
  CHECK(rep.boson_content.get("scalar") == 26);
}

TEST_CASE("quaternionic twins share the bosonic sector") {
  const Catalog& cat = shipped();
  const TheoryCase& n6 = *cat.find_case("q4-H-N6");
  const TheoryCase& n2 = *cat.find_case("q4-H-N2");
  SpectrumReport r6 = assemble_spectrum(cat, n6);
  CHECK(r6.boson_states == 64);
  CHECK(r6.boson_content.get("vector") == 15);
  CHECK(r6.fermion_content.get("three_half") == 6);
  SpectrumReport r2 = assemble_spectrum(cat, n2);
  CHECK(r2.fermion_content.get("three_half") == 2);
  CHECK(r2.boson_content == r6.boson_content);

  TwinComparison t = twin_compare(cat, n6, n2);
  CHECK(t.pass());
  // not twins
  CHECK_THROWS_AS(
      twin_compare(cat, *cat.find_case("q8-split"), *cat.find_case("q4-H-N6")),
      std::invalid_argument);
}

TEST_CASE("semi-simple twins: 32 states, 2-form vs dilatonic vector") {
  const Catalog& cat = shipped();
  SpectrumReport r62 = assemble_spectrum(cat, *cat.find_case("twin-62"));
  CHECK(r62.boson_states == 32);
  CHECK(r62.boson_content.get("two_form") == 1);
  CHECK(r62.boson_content.get("vector") == 6);
  SpectrumReport r26 = assemble_spectrum(cat, *cat.find_case("twin-26"));
  CHECK(r26.boson_content.get("two_form") == 0);
  CHECK(r26.boson_content.get("vector") == 7);
  TwinComparison t =
      twin_compare(cat, *cat.find_case("twin-62"), *cat.find_case("twin-26"));
  CHECK(t.pass());
}

TEST_CASE("family spectra across the sweep") {
  const Catalog& cat = shipped();
  const TheoryCase& j2n = *cat.find_case("J2n");
  const TheoryCase& j6n = *cat.find_case("J6n");
  for (long long n = 1; n <= 16; ++n) {
    SpectrumReport a = assemble_spectrum(cat, j2n, n);
    CHECK(a.boson_states == 4 * (n + 2));
    CHECK(a.boson_content.get("vector") == n + 1);
    SpectrumReport b = assemble_spectrum(cat, j6n, n);
    CHECK(b.boson_states == 8 * (n + 2));
    CHECK(b.boson_content.get("two_form") == 1);
    CHECK(b.fermion_content.get("half") == 4 * n);
  }
  SpectrumReport stu = assemble_spectrum(cat, *cat.find_case("STU"));
  CHECK(stu.boson_states == 16);
}

TEST_CASE("named family members match their family at the right n") {
  const Catalog& cat = shipped();
  // STU is J2n at n = 2; the twins sit at n = 6 (minimal) and n = 2
  // (half-maximal).  The tallies must agree member by member.
  auto content = [&](const char* id, long long n) {
    return assemble_spectrum(cat, *cat.find_case(id), n).boson_content;
  };
  CHECK(content("J2n", 2) == content("STU", 0));
  CHECK(content("J2n", 6) == content("twin-26", 0));
  CHECK(content("J6n", 2) == content("twin-62", 0));
  CHECK(coset_character(cat, *cat.find_case("J2n"), 2).c ==
        coset_character(cat, *cat.find_case("STU"), 0).c);
  CHECK(coset_character(cat, *cat.find_case("J6n"), 2).c ==
        coset_character(cat, *cat.find_case("twin-62"), 0).c);
}

TEST_CASE("non-supersymmetric cases are rejected") {
  const Catalog& cat = shipped();
  CHECK_THROWS_AS(assemble_spectrum(cat, *cat.find_case("q4-Hs")),
                  std::invalid_argument);
  CHECK_THROWS_AS(assemble_spectrum(cat, *cat.find_case("q-1")),
                  std::invalid_argument);
}

TEST_CASE("coset characters") {
  const Catalog& cat = shipped();
  auto cc = [&](const char* id, long long n = 0) {
    return coset_character(cat, *cat.find_case(id), n);
  };
  CHECK(cc("q8-split").c == 81);
  CHECK(cc("q8-split").consistent());
  CHECK(cc("q8-octonionic").c == 81);
  CHECK(cc("q4-H-N6").c == 45);
  CHECK(cc("q4-H-N2").c == 45);
  CHECK(cc("twin-62").c == 21);
  CHECK(cc("twin-26").c == 21);
  CHECK(cc("STU").c == 9);
  CHECK(cc("qm23-T3").c == 3);
  for (long long n = 1; n <= 16; ++n) {
    CHECK(cc("J2n", n).c == 3 * n + 3);
    CHECK(cc("J2n", n).consistent());
    CHECK(cc("J6n", n).c == 3 * n + 15);
    CHECK(cc("J6n", n).consistent());
  }
}

TEST_CASE("the +/- pair check rejects degenerate records") {
  // Two variant records with identical rows carry no swap: must fail.
  const char* text =
      "version: 1\n"
      "[branching p-]\nparent: X:A1\nchild: Y:A1\nvariant: -\npair: p+\n"
      "row: 4 -> 4\nrow: 2 -> 2\n"
      "[branching p+]\nparent: X:A1\nchild: Y:A1\nvariant: +\npair: p-\n"
      "row: 4 -> 4\nrow: 2 -> 2\n";
  Catalog cat = Catalog::parse_text(text, "<t>");
  VerifyReport rep;
  VerifyOptions opt;
  check_branchings(rep, cat, opt);
  bool found = false;
  for (const Check& c : rep.checks)
    if (c.id == "branch.pair.p-") {
      found = true;
      CHECK(!c.pass);
    }
  CHECK(found);
}

TEST_CASE("full verification run is green") {
  const Catalog& cat = shipped();
  VerifyOptions opt;
  opt.samples = 60;  // the CLI/acceptance default is >= 1000
  opt.n_hi = 6;
  VerifyReport rep = run_verification(cat, opt);
  for (const Check& c : rep.checks)
    CHECK_MESSAGE(c.pass, c.id << ": expected " << c.expected << ", got "
                               << c.computed);
  CHECK(rep.failures() == 0);
  CHECK(rep.checks.size() > 150);
  // canonical ordering
  for (size_t i = 1; i < rep.checks.size(); ++i)
    CHECK(rep.checks[i - 1].id <= rep.checks[i].id);
}
