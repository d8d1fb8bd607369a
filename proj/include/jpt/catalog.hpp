// The case catalog: real-form records, named-irrep label tables, theory
// cases (simple and n-parametrized families) and branching records, all
// loaded from a declarative text file (data/catalog.txt) whose grammar is
// documented at the top of that file.  Family entries carry polynomial
// expressions in n and are instantiated on demand.

#pragma once

#include "jpt/expr.hpp"
#include "jpt/realform.hpp"
#include "jpt/repsum.hpp"
#include "jpt/jordan.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jpt {

// One tensor factor position of a branching context.
struct GroupSlot {
  enum class Kind { simple, abelian, orthogonal };
  Kind kind = Kind::simple;
  std::string display;   // e.g. "USp(8)-", "SO(1,1)", "SO(1,n-1)"
  SimpleLieType type;    // simple slots
  Poly p, q;             // orthogonal slots: so(p,q) with n-dependent size
};

struct FactorTmpl {
  std::string name;      // "27", "8v", "adj", "vec", "1", or "{expr}"
  Poly dim;              // set when name is "{expr}"
  bool is_expr = false;
};

struct TermTmpl {
  long long mult = 1;
  std::vector<FactorTmpl> compacts;  // one per non-abelian slot
  std::vector<long long> charges;    // one per abelian slot (zero-padded)
};

struct RowTmpl {
  std::vector<TermTmpl> source;
  std::vector<TermTmpl> result;
  // Adjoint rows with abelian child factors must have vanishing charge
  // trace in every abelian slot.
  bool check_trace = false;
};

struct BranchingTmpl {
  std::string id;
  std::vector<GroupSlot> parent, child;
  bool maximal = false;
  bool symmetric = false;
  char variant = 0;      // '+' standard / '-' non-standard, when paired
  std::string pair_id;   // the other member of a +/- pair
  std::string note;
  std::vector<RowTmpl> rows;
};

struct BranchingRow {
  RepSum source, result;
  bool check_trace = false;
};

struct BranchingRecord {
  std::string id;
  std::string parent, child;
  bool maximal = false, symmetric = false;
  char variant = 0;
  std::string pair_id;
  std::vector<BranchingRow> rows;
};

struct SpectrumSpec {
  bool present = false;
  std::vector<GroupSlot> slots;
  std::vector<TermTmpl> bosons, fermions;
  // Recorded post-fold sums (the displayed chain results); the engine's
  // fold output must reproduce them exactly.
  std::vector<TermTmpl> folded_bosons, folded_fermions;
  std::vector<std::pair<int, int>> folds;  // 1-based slot indices, in order
  int spin_slot = 1;                       // 1-based, in the folded context
  int rprime_slot = 0;                     // 0 = no R-symmetry SU(2)' slot
  int twoform_count = 0;  // bosonic SU(2)_J triplets that are 2-forms
  std::map<std::string, Poly> boson_tally, fermion_tally;  // tag -> count
  Poly states;
};

struct TheoryCase {
  std::string id;
  std::string title;
  bool family = false;    // parametrized by n >= 1
  bool excluded = false;  // recorded but outside the five-dimensional story
  std::string excluded_reason;
  std::string g3;                  // real-form name (may contain {expr})
  std::vector<std::string> g5;     // product factors of the D=5 group
  std::string jordan;              // "H3(O)", "R+Gamma(1,{n-1})", "none"
  Poly eff_dim;
  Poly q_param;                    // q, or q_eff for the families
  int susy = 0;                    // supercharges in D=5 (0, 8, 16, 24, 32)
  bool hypersector = false;
  std::vector<std::string> branchings;
  std::string twin;
  std::optional<Poly> coset;       // expected c = nc = dim(M-hat)
  std::vector<std::string> conf;   // D=4 conformal side data (dim check only)
  // Attractor-related side embeddings: parent group and subgroup factors,
  // dimension-checked only (all recorded as non-maximal data).
  std::vector<std::pair<std::string, std::vector<std::string>>> embeds;
  SpectrumSpec spectrum;
};

class Catalog {
 public:
  static std::string default_path();
  static Catalog load(const std::string& path);
  static Catalog parse_text(const std::string& text, const std::string& origin);
  std::string serialize() const;

  int version = 0;

  std::vector<RealFormRecord> realforms;  // file order
  std::map<std::string, std::string> aliases;
  // Named irrep labels per simple type ("27" of E6 -> [1,0,0,0,0,0], ...).
  std::map<std::string, std::vector<std::pair<std::string, std::vector<int>>>>
      label_tables;
  std::vector<BranchingTmpl> branchings;
  std::vector<TheoryCase> cases;

  const TheoryCase* find_case(const std::string& id) const;
  const BranchingTmpl* find_branching(const std::string& id) const;
  const RealFormRecord* find_declared_realform(const std::string& name) const;

  // Resolution helpers.  Names may contain {expr} pieces which are
  // evaluated at n before lookup; SO(p,q) records not declared in the
  // file are synthesized.
  static std::string substitute(const std::string& name, long long n);
  RealFormRecord resolve_realform(const std::string& name, long long n) const;
  std::vector<int> resolve_label(const SimpleLieType& type,
                                 const std::string& name) const;

  Factor instantiate_factor(const GroupSlot& slot, const FactorTmpl& f,
                            long long n) const;
  RepSum instantiate_terms(const std::vector<GroupSlot>& slots,
                           const std::vector<TermTmpl>& terms,
                           long long n) const;
  BranchingRecord instantiate(const BranchingTmpl& b, long long n) const;

  // The Jordan algebra of a case (nullopt for "none" / excluded entries).
  std::optional<JordanAlgebra> case_jordan(const TheoryCase& c,
                                           long long n) const;

  // dim L^q = 8 + dim str0 + 6(3q+3) for the q-row of the compact table;
  // also cross-checked against the stored algebra dimensions.
  static long long jordan_pair_closed_form(const Rat& q);
};

// Renders one slot list as "A x B x C".
std::string context_str(const std::vector<GroupSlot>& slots);

}  // namespace jpt
