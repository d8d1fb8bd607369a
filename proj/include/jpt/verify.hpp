// The full verification suite: algebra property checks (seeded, exact),
// root-system and label certification, real-form consistency, every
// branching record, the case identities, spectra, twins and coset
// characters.  Returns one Check per item; ordering is canonical (sorted
// by check id) no matter how the run was scheduled.

#pragma once

#include "jpt/catalog.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace jpt {

struct VerifyOptions {
  std::uint64_t seed = 20120601;
  int samples = 1000;          // per property suite
  long long n_lo = 1, n_hi = 16;  // family parameter sweep
  std::string data_dir = JPT_DATA_DIR;
};

struct Check {
  std::string id;
  std::string case_id;
  bool pass = false;
  std::string expected, computed;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  int catalog_version = 0;

  int failures() const;
  void sort_canonical();
  // One line per check plus a summary.
  std::string text() const;
  std::string json() const;
};

VerifyReport run_verification(const Catalog& cat, const VerifyOptions& opt);

// All checks touching one case: its identities, coset, spectrum, and the
// branching records it references.
VerifyReport verify_case(const Catalog& cat, const std::string& case_id,
                         const VerifyOptions& opt);

// Consistency of one real-form record against its mcs and character data;
// empty on success, otherwise a message naming the record.
std::string realform_consistency(const Catalog& cat, const RealFormRecord& r,
                                 long long n = 0);

// Sub-suites (each appends to the report); run_verification calls all.
void check_composition_suites(VerifyReport& rep, const VerifyOptions& opt);
void check_jordan_suites(VerifyReport& rep, const VerifyOptions& opt);
void check_golden_tables(VerifyReport& rep, const VerifyOptions& opt);
void check_lie_machinery(VerifyReport& rep, const Catalog& cat);
void check_realforms(VerifyReport& rep, const Catalog& cat,
                     const VerifyOptions& opt);
void check_branchings(VerifyReport& rep, const Catalog& cat,
                      const VerifyOptions& opt);
void check_cases(VerifyReport& rep, const Catalog& cat,
                 const VerifyOptions& opt);
void check_spectra(VerifyReport& rep, const Catalog& cat,
                   const VerifyOptions& opt);
void check_roundtrip(VerifyReport& rep, const Catalog& cat);

}  // namespace jpt
