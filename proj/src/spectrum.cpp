#include "jpt/spectrum.hpp"

#include <sstream>

namespace jpt {

std::vector<int> cg_su2(int a, int b) {
  if (a < 1 || b < 1) bad_input("cg_su2 needs irrep dimensions >= 1");
  std::vector<int> out;
  for (int c = std::abs(a - b) + 1; c <= a + b - 1; c += 2) out.push_back(c);
  return out;
}

int SpinContent::su2_dim(const std::string& tag) {
  if (tag == "scalar") return 1;
  if (tag == "half") return 2;
  if (tag == "vector" || tag == "two_form") return 3;
  if (tag == "three_half") return 4;
  if (tag == "graviton") return 5;
  bad_input("unknown spin tag '" + tag + "'");
}

long long SpinContent::states() const {
  long long s = 0;
  for (const auto& [tag, count] : counts) s += count * su2_dim(tag);
  return s;
}

long long SpinContent::get(const std::string& tag) const {
  auto it = counts.find(tag);
  return it == counts.end() ? 0 : it->second;
}

std::string SpinContent::str() const {
  static const char* order[] = {"graviton", "three_half", "vector",
                                "two_form", "half", "scalar"};
  std::ostringstream os;
  bool first = true;
  for (const char* tag : order) {
    long long c = get(tag);
    if (!c) continue;
    if (!first) os << " ";
    first = false;
    os << tag << ":" << c;
  }
  if (first) os << "(empty)";
  return os.str();
}

namespace {

int su2_factor_dim(const Factor& f, const std::string& what) {
  if (f.kind != Factor::Kind::irrep || !(f.type == SimpleLieType{'A', 1}))
    fail(what + ": factor " + f.str() + " is not an su(2) irrep");
  return f.labels[0] + 1;
}

}  // namespace

RepSum fold_su2(const RepSum& sum, int a, int b) {
  RepSum out;
  for (const auto& [label, mult] : sum.terms) {
    int na = static_cast<int>(label.factors.size());
    if (a < 1 || b < 1 || a > na || b > na || a == b)
      bad_input("bad fold positions");
    int da = su2_factor_dim(label.factors[a - 1], "fold");
    int db = su2_factor_dim(label.factors[b - 1], "fold");
    for (int c : cg_su2(da, db)) {
      IrrepLabel l;
      for (int i = 0; i < na; ++i) {
        if (i == b - 1) continue;
        if (i == a - 1)
          l.factors.push_back(
              Factor::irrep(SimpleLieType{'A', 1}, {c - 1}));
        else
          l.factors.push_back(label.factors[i]);
      }
      out.add(l, mult);
    }
  }
  return out;
}

namespace {

// Tallies one statistics sector; spin/rprime are 1-based factor indices in
// the folded context.
SpinContent tally(const RepSum& folded, int spin_slot, int rprime_slot,
                  bool fermionic, bool hypersector,
                  const std::string& case_id) {
  SpinContent content;
  for (const auto& [label, mult] : folded.terms) {
    int spin = su2_factor_dim(label.factors.at(spin_slot - 1), case_id);
    long long count = mult;
    for (size_t i = 0; i < label.factors.size(); ++i)
      if (static_cast<int>(i) != spin_slot - 1)
        count *= label.factors[i].dim();
    if (count == 0) continue;  // empty matter factor (e.g. so(0) vector)
    std::string tag;
    if (!fermionic) {
      tag = spin == 1 ? "scalar" : spin == 3 ? "vector" : spin == 5 ? "graviton" : "";
    } else {
      tag = spin == 2 ? "half" : spin == 4 ? "three_half" : "";
    }
    if (tag.empty())
      fail(case_id + ": unexpected SU(2)_J dimension " +
           std::to_string(spin) + " in " +
           (fermionic ? std::string("fermionic") : std::string("bosonic")) +
           " term " + label.str());
    if (hypersector && rprime_slot) {
      int rp = su2_factor_dim(label.factors.at(rprime_slot - 1), case_id);
      int want = fermionic ? 2 : 1;
      if (rp != want)
        fail(case_id + ": term " + label.str() + " violates the SU(2)' " +
             (fermionic ? "doublet" : "singlet") + " rule");
    }
    content.counts[tag] += count;
  }
  return content;
}

std::string tally_diff(const std::map<std::string, Poly>& expect,
                       const SpinContent& got, long long n) {
  std::ostringstream os;
  for (const auto& [tag, poly] : expect) {
    long long want = poly.eval_int(n);
    if (got.get(tag) != want)
      os << " " << tag << ": expected " << want << ", got " << got.get(tag);
  }
  for (const auto& [tag, count] : got.counts)
    if (!expect.count(tag) && count != 0)
      os << " " << tag << ": expected 0, got " << count;
  return os.str();
}

}  // namespace

SpectrumReport assemble_spectrum(const Catalog& cat, const TheoryCase& c,
                                 long long n) {
  if (c.excluded || c.susy <= 0)
    bad_input("case " + c.id + " has no supersymmetric massless spectrum");
  if (!c.spectrum.present)
    fail("case " + c.id + " is missing its spectrum record");
  const SpectrumSpec& spec = c.spectrum;

  SpectrumReport rep;
  rep.case_id = c.id;
  if (c.family) rep.n = n;
  rep.twin_partner = c.twin;

  RepSum bos = cat.instantiate_terms(spec.slots, spec.bosons, n);
  RepSum fer = cat.instantiate_terms(spec.slots, spec.fermions, n);
  for (auto [a, b] : spec.folds) {
    bos = fold_su2(bos, a, b);
    fer = fold_su2(fer, a, b);
  }
  // Folded slot list for checks below.
  std::vector<GroupSlot> folded = spec.slots;
  for (auto [a, b] : spec.folds) {
    int lo = std::min(a, b) - 1, hi = std::max(a, b) - 1;
    folded[lo] = GroupSlot{GroupSlot::Kind::simple, "SU(2)", {'A', 1}, {}, {}};
    folded.erase(folded.begin() + hi);
  }

  // The recorded post-fold sums, when the source displays them, are the
  // chain oracle: the computed folds must reproduce them exactly.
  if (!spec.folded_bosons.empty()) {
    RepSum want = cat.instantiate_terms(folded, spec.folded_bosons, n);
    if (!(want == bos))
      fail(c.id + ": bosonic chain mismatch: computed " + bos.str() +
           " vs recorded " + want.str());
  }
  if (!spec.folded_fermions.empty()) {
    RepSum want = cat.instantiate_terms(folded, spec.folded_fermions, n);
    if (!(want == fer))
      fail(c.id + ": fermionic chain mismatch: computed " + fer.str() +
           " vs recorded " + want.str());
  }

  rep.bosons = bos;
  rep.fermions = fer;
  rep.boson_content = tally(bos, spec.spin_slot, spec.rprime_slot, false,
                            c.hypersector, c.id);
  rep.fermion_content = tally(fer, spec.spin_slot, spec.rprime_slot, true,
                              c.hypersector, c.id);

  // Re-tag the recorded number of bosonic triplets as 2-forms.
  if (spec.twoform_count) {
    long long& vec = rep.boson_content.counts["vector"];
    if (vec < spec.twoform_count)
      fail(c.id + ": fewer bosonic triplets than recorded 2-forms");
    vec -= spec.twoform_count;
    rep.boson_content.counts["two_form"] += spec.twoform_count;
    if (vec == 0) rep.boson_content.counts.erase("vector");
  }

  rep.boson_states = rep.boson_content.states();
  rep.fermion_states = rep.fermion_content.states();

  if (rep.boson_states != rep.fermion_states)
    fail(c.id + ": boson/fermion state mismatch: " +
         std::to_string(rep.boson_states) + " vs " +
         std::to_string(rep.fermion_states));
  long long want_states = spec.states.eval_int(n);
  if (rep.boson_states != want_states)
    fail(c.id + ": expected " + std::to_string(want_states) +
         " states per sector, got " + std::to_string(rep.boson_states));
  std::string bdiff = tally_diff(spec.boson_tally, rep.boson_content, n);
  if (!bdiff.empty()) fail(c.id + ": bosonic tally mismatch:" + bdiff);
  std::string fdiff = tally_diff(spec.fermion_tally, rep.fermion_content, n);
  if (!fdiff.empty()) fail(c.id + ": fermionic tally mismatch:" + fdiff);
  if (rep.boson_content.get("graviton") != 1)
    fail(c.id + ": graviton multiplicity is not 1");
  return rep;
}

std::string SpectrumReport::text() const {
  std::ostringstream os;
  os << "case " << case_id;
  if (n) os << " (n=" << *n << ")";
  os << "\n";
  os << "  bosons   (" << boson_states << " states): " << bosons.str()
     << "\n";
  os << "           " << boson_content.str() << "\n";
  os << "  fermions (" << fermion_states << " states): " << fermions.str()
     << "\n";
  os << "           " << fermion_content.str() << "\n";
  if (!twin_partner.empty()) os << "  bosonic twin: " << twin_partner << "\n";
  return os.str();
}

namespace {

long long mcs_dim_sum(const Catalog& cat, const RealFormRecord& r,
                      long long n) {
  long long sum = 0;
  for (const std::string& part : r.mcs) {
    if (part == r.name) {
      sum += r.dim;  // compact form: mcs is the form itself
      continue;
    }
    sum += cat.resolve_realform(part, n).dim;
  }
  return sum;
}

}  // namespace

CosetCharacter coset_character(const Catalog& cat, const TheoryCase& c,
                               long long n) {
  if (c.excluded || c.g3.empty())
    bad_input("case " + c.id + " carries no coset data");
  RealFormRecord g3 = cat.resolve_realform(c.g3, n);
  long long c5 = 0, nc5 = 0, mcs5 = 0;
  for (const std::string& part : c.g5) {
    RealFormRecord g5 = cat.resolve_realform(part, n);
    c5 += g5.compact_dim();
    nc5 += g5.noncompact_dim();
    mcs5 += mcs_dim_sum(cat, g5, n);
  }
  CosetCharacter out;
  out.c = g3.compact_dim() - c5 - 3;
  out.nc = g3.noncompact_dim() - nc5 - 5;
  out.dim_hat = mcs_dim_sum(cat, g3, n) - mcs5 - 3;
  return out;
}

TwinComparison twin_compare(const Catalog& cat, const TheoryCase& a,
                            const TheoryCase& b) {
  if (a.twin != b.id || b.twin != a.id)
    bad_input("cases " + a.id + " and " + b.id + " are not twin partners");
  SpectrumReport ra = assemble_spectrum(cat, a);
  SpectrumReport rb = assemble_spectrum(cat, b);

  TwinComparison out;
  out.bosons_a = ra.boson_content;
  out.bosons_b = rb.boson_content;
  // The N=4 2-form and the N=2 dilatonic vector are the same SU(2)_J
  // triplet; fold the tag before comparing.
  auto flatten = [](SpinContent s) {
    long long tf = s.get("two_form");
    if (tf) {
      s.counts.erase("two_form");
      s.counts["vector"] += tf;
    }
    return s;
  };
  out.bosons_match = flatten(ra.boson_content) == flatten(rb.boson_content);
  out.states_match = ra.boson_states == rb.boson_states &&
                     ra.fermion_states == rb.fermion_states;
  out.fermions_differ = !(ra.fermion_content == rb.fermion_content);
  out.hyper_split = (a.hypersector != b.hypersector);
  std::ostringstream os;
  os << a.id << ": " << ra.boson_content.str() << " | " << b.id << ": "
     << rb.boson_content.str();
  out.detail = os.str();
  return out;
}

}  // namespace jpt
