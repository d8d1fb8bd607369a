#include "jpt/verify.hpp"

#include "jpt/jordan.hpp"
#include "jpt/spectrum.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace jpt {

namespace {

void put(VerifyReport& rep, const std::string& id, const std::string& case_id,
         bool pass, const std::string& expected, const std::string& computed) {
  rep.checks.push_back({id, case_id, pass, expected, computed});
}

void put_eq(VerifyReport& rep, const std::string& id,
            const std::string& case_id, long long expected,
            long long computed) {
  put(rep, id, case_id, expected == computed, std::to_string(expected),
      std::to_string(computed));
}

// Runs `body` for n in [lo,hi]; body returns an error string or "".
void sweep(VerifyReport& rep, const std::string& id,
           const std::string& case_id, long long lo, long long hi,
           const std::function<std::string(long long)>& body) {
  std::string failure;
  for (long long n = lo; n <= hi && failure.empty(); ++n) {
    try {
      std::string err = body(n);
      if (!err.empty()) failure = "n=" + std::to_string(n) + ": " + err;
    } catch (const std::exception& e) {
      failure = "n=" + std::to_string(n) + ": " + e.what();
    }
  }
  put(rep, id, case_id, failure.empty(),
      "all n in [" + std::to_string(lo) + "," + std::to_string(hi) + "]",
      failure.empty() ? "ok" : failure);
}

// Wraps a body that throws on failure into a single check entry.
void guard(VerifyReport& rep, const std::string& id,
           const std::string& case_id,
           const std::function<std::string()>& body,
           const std::string& expected = "ok") {
  try {
    std::string err = body();
    put(rep, id, case_id, err.empty(), expected, err.empty() ? "ok" : err);
  } catch (const std::exception& e) {
    put(rep, id, case_id, false, expected, e.what());
  }
}

std::vector<JordanAlgebra> catalog_jordan_algebras() {
  std::vector<JordanAlgebra> v;
  for (const auto* A : CompositionAlgebra::all())
    v.push_back(JordanAlgebra::simple(*A));
  v.push_back(JordanAlgebra::spin_factor(1, 1));
  v.push_back(JordanAlgebra::spin_factor(1, 5));
  v.push_back(JordanAlgebra::spin_factor(5, 1));
  for (int n = 3; n <= 8; ++n)
    v.push_back(JordanAlgebra::spin_factor(1, n - 1));
  return v;
}

template <class K>
AlgebraElement<K> draw_element(const CompositionAlgebra& A, Rng& rng) {
  AlgebraElement<K> x(A);
  for (int i = 0; i < A.dim(); ++i) {
    if constexpr (std::is_same_v<K, Rat>)
      x[i] = rng.small_rat();
    else
      x[i] = rng.small_int();
  }
  return x;
}

template <class K>
JordanElement<K> draw_jordan(const JordanAlgebra& J, Rng& rng) {
  JordanElement<K> X(J);
  if (J.is_simple()) {
    for (int i = 0; i < 3; ++i) {
      if constexpr (std::is_same_v<K, Rat>)
        X.diag(i) = rng.small_rat();
      else
        X.diag(i) = rng.small_int();
      X.off(i) = draw_element<K>(J.composition(), rng);
    }
  } else {
    if constexpr (std::is_same_v<K, Rat>) {
      X.lam() = rng.small_rat();
      X.spin_s() = rng.small_rat();
      for (auto& c : X.spin_v()) c = rng.small_rat();
    } else {
      X.lam() = rng.small_int();
      X.spin_s() = rng.small_int();
      for (auto& c : X.spin_v()) c = rng.small_int();
    }
  }
  return X;
}

}  // namespace

void check_composition_suites(VerifyReport& rep, const VerifyOptions& opt) {
  for (const auto* A : CompositionAlgebra::all()) {
    const std::string name = A->name();
    Rng rng(opt.seed + A->dim());

    guard(rep, "alg.compose." + name, "", [&] {
      for (int s = 0; s < opt.samples; ++s) {
        auto x = draw_element<Rat>(*A, rng);
        auto y = draw_element<Rat>(*A, rng);
        if (norm_form(cd_multiply(x, y)) != norm_form(x) * norm_form(y))
          return std::string("composition law fails at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });

    if (A->dim() == 8) {
      guard(rep, "alg.alternative." + name, "", [&] {
        for (int s = 0; s < opt.samples; ++s) {
          auto x = draw_element<Int>(*A, rng);
          auto y = draw_element<Int>(*A, rng);
          if (!associator(x, x, y).is_zero() ||
              !associator(x, y, y).is_zero())
            return std::string("associator nonzero at sample ") +
                   std::to_string(s);
        }
        return std::string();
      });
    }

    guard(rep, "alg.conjugation." + name, "", [&] {
      for (int s = 0; s < opt.samples / 4 + 1; ++s) {
        auto x = draw_element<Rat>(*A, rng);
        auto y = draw_element<Rat>(*A, rng);
        if (!(conjugate(cd_multiply(x, y)) ==
              cd_multiply(conjugate(y), conjugate(x))))
          return std::string("conjugation fails at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });

    if (A->is_division()) {
      guard(rep, "alg.anisotropic." + name, "", [&] {
        for (int s = 0; s < opt.samples; ++s) {
          auto x = draw_element<Rat>(*A, rng);
          if (!x.is_zero() && !(norm_form(x) > 0))
            return std::string("norm not positive at sample ") +
                   std::to_string(s);
        }
        return std::string();
      });
    } else {
      guard(rep, "alg.null-vector." + name, "", [&]() -> std::string {
        for (int i = 1; i < A->dim(); ++i)
          if (A->unit_norm(i) == -1) {
            auto x = RatAlgebraElement::one(*A) +
                     RatAlgebraElement::unit(*A, i);
            if (norm_form(x) == 0 && !x.is_zero()) return "";
            return "candidate e0+e" + std::to_string(i) + " not null";
          }
        return "no basis unit of norm -1";
      });
      auto [pos, neg] = A->signature();
      put(rep, "alg.signature." + name, "", pos == A->dim() / 2 && neg == pos,
          "(" + std::to_string(A->dim() / 2) + "," +
              std::to_string(A->dim() / 2) + ")",
          "(" + std::to_string(pos) + "," + std::to_string(neg) + ")");
    }
  }
}

void check_golden_tables(VerifyReport& rep, const VerifyOptions& opt) {
  for (const auto* A : CompositionAlgebra::all()) {
    guard(rep, "alg.table." + A->name(), "", [&]() -> std::string {
      std::string path = opt.data_dir + "/cdtables/" + A->name() + ".txt";
      std::ifstream in(path);
      if (!in) return "missing golden table " + path;
      int dim = 0;
      auto entries = CompositionAlgebra::parse_table_text(in, &dim);
      if (dim != A->dim()) return "golden table has wrong dimension";
      if (!A->matches_table(entries)) return "golden table mismatch";
      return "";
    });
  }
}

void check_jordan_suites(VerifyReport& rep, const VerifyOptions& opt) {
  for (const JordanAlgebra& J : catalog_jordan_algebras()) {
    const std::string name = J.name();
    Rng rng(opt.seed + J.dimension());

    guard(rep, "jordan.identity." + name, "", [&] {
      for (int s = 0; s < opt.samples; ++s) {
        auto X = draw_jordan<Int>(J, rng);
        auto Y = draw_jordan<Int>(J, rng);
        auto XX = jordan_product_doubled(X, X);
        if (!(jordan_product_doubled(XX, jordan_product_doubled(X, Y)) ==
              jordan_product_doubled(X, jordan_product_doubled(XX, Y))))
          return std::string("Jordan identity fails at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });

    guard(rep, "jordan.homogeneity." + name, "", [&] {
      for (int s = 0; s < opt.samples; ++s) {
        auto X = draw_jordan<Rat>(J, rng);
        Rat lam = rng.small_rat();
        if (cubic_norm(lam * X) != lam * lam * lam * cubic_norm(X))
          return std::string("N(lam X) != lam^3 N(X) at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });

    guard(rep, "jordan.adjoint." + name, "", [&] {
      for (int s = 0; s < opt.samples; ++s) {
        auto X = draw_jordan<Int>(J, rng);
        auto Xs = sharp(X);
        if (!(sharp(Xs) == cubic_norm(X) * X))
          return std::string("(X#)# != N(X) X at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });

    guard(rep, "jordan.polarization." + name, "", [&] {
      for (int s = 0; s < opt.samples / 4 + 1; ++s) {
        auto X = draw_jordan<Int>(J, rng);
        auto Y = draw_jordan<Int>(J, rng);
        if (trilinear_form(X, X, Y) != trace_form_doubled(sharp(X), Y))
          return std::string("T(X,X,Y) != 2 tr(X#,Y) at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });
  }

  for (const auto* A : {&CompositionAlgebra::reals(),
                        &CompositionAlgebra::complexes()}) {
    Rng rng(opt.seed + 101 + A->dim());
    JordanAlgebra J = JordanAlgebra::simple(*A);
    guard(rep, "jordan.det-oracle.H3(" + A->name() + ")", "", [&] {
      for (int s = 0; s < opt.samples; ++s) {
        auto X = draw_jordan<Rat>(J, rng);
        auto m = detail::to_matrix(X);
        auto mul = [](const RatAlgebraElement& a, const RatAlgebraElement& b) {
          return cd_multiply(a, b);
        };
        RatAlgebraElement det =
            mul(m[0][0], mul(m[1][1], m[2][2]) - mul(m[1][2], m[2][1])) -
            mul(m[0][1], mul(m[1][0], m[2][2]) - mul(m[1][2], m[2][0])) +
            mul(m[0][2], mul(m[1][0], m[2][1]) - mul(m[1][1], m[2][0]));
        if (det[0] != cubic_norm(X))
          return std::string("determinant oracle disagrees at sample ") +
                 std::to_string(s);
      }
      return std::string();
    });
  }
}

void check_lie_machinery(VerifyReport& rep, const Catalog& cat) {
  std::vector<std::string> types = {"E6", "E7", "E8", "F4", "G2"};
  for (int r = 1; r <= 5; ++r) types.push_back("A" + std::to_string(r));
  for (int r = 2; r <= 8; ++r) types.push_back("B" + std::to_string(r));
  for (int r = 2; r <= 8; ++r) types.push_back("C" + std::to_string(r));
  for (int r = 3; r <= 8; ++r) types.push_back("D" + std::to_string(r));
  for (const std::string& t : types) {
    const auto& rs = RootSystem::get(parse_lie_type(t));
    put_eq(rep, "lie.roots." + t, "", (rs.dim() - rs.rank()) / 2,
           static_cast<long long>(rs.positive_roots().size()));
    put_eq(rep, "lie.adjoint-dim." + t, "", rs.dim(),
           to_ll(rs.weyl_dim(rs.adjoint_weight())));
    long long total = 0;
    for (int s : rs.principal_su2_spins()) total += s;
    put_eq(rep, "lie.principal-sum." + t, "", rs.dim(), total);
  }
  auto a2 = RootSystem::get(parse_lie_type("A2")).principal_su2_spins();
  put(rep, "lie.principal.A2", "", a2 == std::vector<int>{3, 5}, "3 5",
      a2.size() == 2 ? std::to_string(a2[0]) + " " + std::to_string(a2[1])
                     : "?");

  // Every named label in the catalog has the dimension in its name.
  for (const auto& [type_str, table] : cat.label_tables) {
    SimpleLieType t = parse_lie_type(type_str);
    for (const auto& [name, labels] : table) {
      size_t digits = 0;
      while (digits < name.size() &&
             std::isdigit(static_cast<unsigned char>(name[digits])))
        ++digits;
      long long named = std::stoll(name.substr(0, digits));
      put_eq(rep, "lie.label." + type_str + "." + name, "", named,
             weyl_dim(t, labels));
    }
  }

  // The structured square of the bi-fundamental (2,2n).
  put_eq(rep, "lie.bifund-square.n4", "", 120,
         square_bifundamental(4, SquarePart::antisymmetric).total_dim());
  put_eq(rep, "lie.bifund-square.n3", "", 66,
         square_bifundamental(3, SquarePart::antisymmetric).total_dim());
  put_eq(rep, "lie.bifund-square.n1", "", 10,
         square_bifundamental(1, SquarePart::symmetric).total_dim());
}

std::string realform_consistency(const Catalog& cat,
                                 const RealFormRecord& r, long long n) {
  long long c = 0;
  for (const std::string& part : r.mcs) {
    if (part == r.name)
      c += r.dim;
    else
      c += cat.resolve_realform(part, n).dim;
  }
  if (c != r.compact_dim())
    return r.name + ": mcs dims sum to " + std::to_string(c) +
           " but (dim-char)/2 = " + std::to_string(r.compact_dim());
  long long nc = r.dim - c;
  if (r.character != nc - c)
    return r.name + ": character " + std::to_string(r.character) +
           " != nc - c = " + std::to_string(nc - c);
  if (r.compact && r.character != -r.dim)
    return r.name + ": compact form must have character -dim";
  return "";
}

void check_realforms(VerifyReport& rep, const Catalog& cat,
                     const VerifyOptions& opt) {
  for (const RealFormRecord& r : cat.realforms) {
    guard(rep, "realform." + r.name, "",
          [&] { return realform_consistency(cat, r, 0); });
    // Declared orthogonal records must agree with the closed-form data.
    if (auto pq = parse_orthogonal_name(r.name)) {
      RealFormRecord synth = make_orthogonal(pq->first, pq->second);
      put(rep, "realform.orthogonal." + r.name, "",
          synth.dim == r.dim && synth.character == r.character,
          "dim " + std::to_string(synth.dim) + ", char " +
              std::to_string(synth.character),
          "dim " + std::to_string(r.dim) + ", char " +
              std::to_string(r.character));
    }
  }
  // Synthesized family forms stay consistent across the sweep.
  sweep(rep, "realform.family-sweep", "", opt.n_lo, opt.n_hi,
        [&](long long n) -> std::string {
          for (const std::string& name :
               {std::string("SO(4,{n+2})"), std::string("SO(8,{n+2})"),
                std::string("SO(1,{n-1})"), std::string("SO(5,{n-1})"),
                std::string("SO(2,{n})"), std::string("SO(6,{n})")}) {
            RealFormRecord r = cat.resolve_realform(name, n);
            std::string err = realform_consistency(cat, r, n);
            if (!err.empty()) return err;
          }
          return "";
        });
}

namespace {

bool branching_depends_on_n(const BranchingTmpl& b) {
  auto slot_dep = [](const GroupSlot& s) {
    return s.kind == GroupSlot::Kind::orthogonal &&
           (!s.p.is_constant() || !s.q.is_constant());
  };
  for (const auto& s : b.parent)
    if (slot_dep(s)) return true;
  for (const auto& s : b.child)
    if (slot_dep(s)) return true;
  for (const auto& row : b.rows)
    for (const auto& terms : {row.source, row.result})
      for (const auto& t : terms)
        for (const auto& f : t.compacts)
          if (f.is_expr && !f.dim.is_constant()) return true;
  return false;
}

std::string branching_error(const Catalog& cat, const BranchingTmpl& b,
                            long long n) {
  BranchingRecord r = cat.instantiate(b, n);
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const BranchingRow& row = r.rows[i];
    long long lhs = row.source.total_dim();
    long long rhs = row.result.total_dim();
    if (lhs != rhs)
      return b.id + " row " + std::to_string(i) + ": " + std::to_string(lhs) +
             " != " + std::to_string(rhs) + " (" + row.source.str() + " -> " +
             row.result.str() + ")";
    if (row.check_trace) {
      int abelian = 0;
      for (const GroupSlot& s : b.child)
        if (s.kind == GroupSlot::Kind::abelian) ++abelian;
      for (int slot = 0; slot < abelian; ++slot) {
        long long tr = row.result.charge_trace(slot);
        if (tr != 0)
          return b.id + " row " + std::to_string(i) + ": charge trace " +
                 std::to_string(tr) + " in abelian slot " +
                 std::to_string(slot);
      }
    }
  }
  return "";
}

}  // namespace

void check_branchings(VerifyReport& rep, const Catalog& cat,
                      const VerifyOptions& opt) {
  for (const BranchingTmpl& b : cat.branchings) {
    if (branching_depends_on_n(b)) {
      sweep(rep, "branch." + b.id, "", opt.n_lo, opt.n_hi,
            [&](long long n) { return branching_error(cat, b, n); });
    } else {
      guard(rep, "branch." + b.id, "",
            [&] { return branching_error(cat, b, 0); });
    }

    // +/- pairs: the spinor rows are reattached to the conjugate source,
    // term for term, when passing between the two embeddings.
    if (b.variant == '-' && !b.pair_id.empty()) {
      guard(rep, "branch.pair." + b.id, "", [&]() -> std::string {
        const BranchingTmpl* other = cat.find_branching(b.pair_id);
        if (!other) return "missing pair record " + b.pair_id;
        if (other->variant != '+') return b.pair_id + " is not the + variant";
        BranchingRecord lhs = cat.instantiate(b, 0);
        BranchingRecord rhs = cat.instantiate(*other, 0);
        if (lhs.rows.size() != rhs.rows.size())
          return "pair records have different row counts";
        auto row_map = [](const BranchingRecord& r) {
          std::vector<std::pair<std::string, RepSum>> m;
          for (const auto& row : r.rows)
            m.emplace_back(row.source.canonicalized().str(), row.result);
          return m;
        };
        auto lm = row_map(lhs), rm = row_map(rhs);
        auto find = [](const std::vector<std::pair<std::string, RepSum>>& m,
                       const std::string& key) -> const RepSum* {
          for (const auto& [k, v] : m)
            if (k == key) return &v;
          return nullptr;
        };
        bool any_swap = false;
        for (const auto& [src, res] : lm) {
          const RepSum* same = find(rm, src);
          if (!same) return "source " + src + " missing in " + b.pair_id;
          if (*same == res) continue;  // shared row (e.g. the vector)
          // must be swapped with exactly one other source
          bool swapped = false;
          for (const auto& [src2, res2] : lm) {
            if (src2 == src) continue;
            const RepSum* cross = find(rm, src2);
            if (cross && *cross == res && res2 == *same) {
              swapped = true;
              break;
            }
          }
          if (!swapped) return "source " + src + " is neither shared nor swapped";
          any_swap = true;
        }
        if (!any_swap) return "pair records are identical; no swap present";
        return "";
      });
    }
  }
}

namespace {

std::string case_identity_error(const Catalog& cat, const TheoryCase& c,
                                long long n) {
  RealFormRecord g3 = cat.resolve_realform(c.g3, n);
  long long g5dim = 0, g5nc = 0;
  for (const std::string& part : c.g5) {
    RealFormRecord g5 = cat.resolve_realform(part, n);
    g5dim += g5.dim;
    g5nc += g5.noncompact_dim();
  }
  long long eff = c.eff_dim.eval_int(n);
  // The Jordan-pair decomposition: adjoint + str0 + two triplets of J.
  if (g3.dim != 8 + g5dim + 6 * eff)
    return c.id + ": dim " + std::to_string(g3.dim) +
           " != 8 + " + std::to_string(g5dim) + " + 6*" + std::to_string(eff);
  // nc(g3) = nc(g5) + 5 + 3 effdim (the coset split of the same count).
  if (g3.noncompact_dim() != g5nc + 5 + 3 * eff)
    return c.id + ": nc " + std::to_string(g3.noncompact_dim()) + " != " +
           std::to_string(g5nc) + " + 5 + 3*" + std::to_string(eff);
  // 3q + 3 = effective dimension, uniformly.
  Rat q = c.q_param.eval(n);
  if (Rat(3) * q + 3 != Rat(eff))
    return c.id + ": 3q+3 = " + Rat(3 * q + 3).str() + " != effdim " +
           std::to_string(eff);
  // Jordan descriptor consistency.
  if (auto J = cat.case_jordan(c, n)) {
    if (J->effective_dimension() != eff)
      return c.id + ": Jordan effective dim " +
             std::to_string(J->effective_dimension()) + " != " +
             std::to_string(eff);
  }
  return "";
}

}  // namespace

void check_cases(VerifyReport& rep, const Catalog& cat,
                 const VerifyOptions& opt) {
  for (const TheoryCase& c : cat.cases) {
    if (c.excluded) {
      put(rep, "case.excluded." + c.id, c.id, !c.excluded_reason.empty(),
          "recorded with reason", c.excluded_reason);
      continue;
    }
    if (c.family) {
      sweep(rep, "case.pair-dim." + c.id, c.id, opt.n_lo, opt.n_hi,
            [&](long long n) { return case_identity_error(cat, c, n); });
    } else {
      guard(rep, "case.pair-dim." + c.id, c.id,
            [&] { return case_identity_error(cat, c, 0); });
    }

    put(rep, "case.susy." + c.id, c.id,
        c.susy == 0 || c.susy == 8 || c.susy == 16 || c.susy == 24 ||
            c.susy == 32,
        "supercharges in {0,8,16,24,32}", std::to_string(c.susy));
    put(rep, "case.hypersector." + c.id, c.id,
        c.hypersector == (c.susy == 8), c.susy == 8 ? "true" : "false",
        c.hypersector ? "true" : "false");

    // Rows of the compact table: the closed form must give dim(g3).
    if (!c.family && c.q_param.is_constant()) {
      Rat q = c.q_param.constant_value();
      bool in_table = q == 8 || q == 4 || q == 2 || q == 1 || q == 0 ||
                      q == Rat(-2, 3);
      if (in_table) {
        guard(rep, "case.closed-form." + c.id, c.id, [&]() -> std::string {
          long long want = Catalog::jordan_pair_closed_form(q);
          long long got = cat.resolve_realform(c.g3, 0).dim;
          if (want != got)
            return "closed form " + std::to_string(want) + " != dim g3 " +
                   std::to_string(got);
          return "";
        });
      }
    }

    // conf(J) side data: sl(2) + so(m,n) built over the spin factor.
    if (!c.conf.empty()) {
      auto body = [&](long long n) -> std::string {
        auto J = cat.case_jordan(c, n);
        if (!J || J->is_simple()) return "conf data on a non-spin case";
        long long m = J->p() + 1, nn = J->q() + 1;
        long long want = 3 + (m + nn) * (m + nn - 1) / 2;
        long long got = 0;
        for (const std::string& part : c.conf)
          got += cat.resolve_realform(part, n).dim;
        if (want != got)
          return "conf dim " + std::to_string(got) + " != 3 + dim so(" +
                 std::to_string(m) + "," + std::to_string(nn) + ") = " +
                 std::to_string(want);
        return "";
      };
      if (c.family)
        sweep(rep, "case.conf." + c.id, c.id, opt.n_lo, opt.n_hi, body);
      else
        guard(rep, "case.conf." + c.id, c.id, [&] { return body(0); });
    }

    // Attractor-related embeddings: dimension-consistent subalgebra data.
    for (size_t i = 0; i < c.embeds.size(); ++i) {
      const auto& [parent, subs] = c.embeds[i];
      guard(rep, "case.embed." + c.id + "." + std::to_string(i), c.id,
            [&]() -> std::string {
              long long pd = cat.resolve_realform(parent, 0).dim;
              long long sd = 0;
              for (const std::string& s : subs)
                sd += cat.resolve_realform(s, 0).dim;
              if (pd < sd)
                return parent + " dim " + std::to_string(pd) +
                       " < subgroup sum " + std::to_string(sd);
              return "";
            });
    }

    // Coset character: c = nc = dim M-hat, plus the recorded value.
    auto coset_body = [&](long long n) -> std::string {
      CosetCharacter cc = coset_character(cat, c, n);
      if (!cc.consistent())
        return "c=" + std::to_string(cc.c) + " nc=" + std::to_string(cc.nc) +
               " dim_hat=" + std::to_string(cc.dim_hat);
      if (c.coset) {
        long long want = c.coset->eval_int(n);
        if (cc.c != want)
          return "c = " + std::to_string(cc.c) + ", expected " +
                 std::to_string(want);
      }
      return "";
    };
    if (c.family)
      sweep(rep, "coset." + c.id, c.id, opt.n_lo, opt.n_hi, coset_body);
    else
      guard(rep, "coset." + c.id, c.id, [&] { return coset_body(0); });
  }
}

void check_spectra(VerifyReport& rep, const Catalog& cat,
                   const VerifyOptions& opt) {
  std::vector<std::pair<std::string, std::string>> twin_pairs;
  for (const TheoryCase& c : cat.cases) {
    if (c.excluded) continue;
    if (c.susy == 0) {
      // Non-supersymmetric cases must be rejected.
      guard(rep, "spectrum.rejected." + c.id, c.id, [&]() -> std::string {
        try {
          assemble_spectrum(cat, c, opt.n_lo);
        } catch (const std::invalid_argument&) {
          return "";
        }
        return "assemble_spectrum accepted a non-supersymmetric case";
      });
      continue;
    }
    // The q=2, q=1 and q=-2/3 minimal cases have no recorded chain; only
    // cases with spectrum data are replayed.
    if (!c.spectrum.present) continue;
    auto body = [&](long long n) -> std::string {
      assemble_spectrum(cat, c, n);  // throws with a diff on any mismatch
      return "";
    };
    if (c.family)
      sweep(rep, "spectrum." + c.id, c.id, opt.n_lo, opt.n_hi, body);
    else
      guard(rep, "spectrum." + c.id, c.id, [&] { return body(0); });

    if (!c.twin.empty() && c.id < c.twin)
      twin_pairs.emplace_back(c.id, c.twin);
  }

  for (const auto& [a_id, b_id] : twin_pairs) {
    guard(rep, "twin." + a_id + "." + b_id, a_id, [&]() -> std::string {
      const TheoryCase* a = cat.find_case(a_id);
      const TheoryCase* b = cat.find_case(b_id);
      if (!a || !b) return "missing twin case";
      TwinComparison t = twin_compare(cat, *a, *b);
      if (!t.bosons_match) return "bosonic sectors differ: " + t.detail;
      if (!t.states_match) return "state counts differ";
      if (!t.fermions_differ) return "fermionic sectors coincide";
      if (!t.hyper_split) return "hypersector flags do not differ";
      return "";
    });
  }
}

void check_roundtrip(VerifyReport& rep, const Catalog& cat) {
  guard(rep, "catalog.roundtrip", "", [&]() -> std::string {
    std::string once = cat.serialize();
    Catalog reparsed = Catalog::parse_text(once, "<serialized>");
    std::string twice = reparsed.serialize();
    if (once != twice) return "serialize/parse round-trip is not stable";
    if (reparsed.cases.size() != cat.cases.size() ||
        reparsed.branchings.size() != cat.branchings.size())
      return "round-trip lost records";
    return "";
  });
}

VerifyReport verify_case(const Catalog& cat, const std::string& case_id,
                         const VerifyOptions& opt) {
  const TheoryCase* c = cat.find_case(case_id);
  if (!c) bad_input("no case named '" + case_id + "'");
  VerifyReport rep;
  rep.seed = opt.seed;
  rep.catalog_version = cat.version;
  check_cases(rep, cat, opt);
  check_spectra(rep, cat, opt);
  check_branchings(rep, cat, opt);
  std::vector<Check> kept;
  for (Check& chk : rep.checks) {
    bool relevant = chk.case_id == case_id || chk.id == "twin." + case_id ||
                    chk.id.find("." + case_id) != std::string::npos;
    for (const std::string& b : c->branchings)
      relevant = relevant || chk.id == "branch." + b ||
                 chk.id == "branch.pair." + b;
    if (relevant) kept.push_back(std::move(chk));
  }
  rep.checks = std::move(kept);
  rep.sort_canonical();
  return rep;
}

VerifyReport run_verification(const Catalog& cat, const VerifyOptions& opt) {
  VerifyReport rep;
  rep.seed = opt.seed;
  rep.catalog_version = cat.version;
  check_composition_suites(rep, opt);
  check_golden_tables(rep, opt);
  check_jordan_suites(rep, opt);
  check_lie_machinery(rep, cat);
  check_realforms(rep, cat, opt);
  check_branchings(rep, cat, opt);
  check_cases(rep, cat, opt);
  check_spectra(rep, cat, opt);
  check_roundtrip(rep, cat);
  rep.sort_canonical();
  return rep;
}

int VerifyReport::failures() const {
  int n = 0;
  for (const Check& c : checks) n += c.pass ? 0 : 1;
  return n;
}

void VerifyReport::sort_canonical() {
  std::sort(checks.begin(), checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const Check& c : checks) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.id;
    if (!c.pass) os << "  expected: " << c.expected << "  got: " << c.computed;
    os << "\n";
  }
  os << checks.size() << " checks, " << failures() << " failures (seed "
     << seed << ", catalog v" << catalog_version << ")\n";
  return os.str();
}

std::string VerifyReport::json() const {
  nlohmann::json j;
  j["schema"] = "jpt-verify-report/1";
  j["seed"] = seed;
  j["catalog_version"] = catalog_version;
  j["summary"] = {{"total", checks.size()}, {"failures", failures()}};
  j["checks"] = nlohmann::json::array();
  for (const Check& c : checks) {
    nlohmann::json item = {{"id", c.id},
                           {"pass", c.pass},
                           {"expected", c.expected},
                           {"computed", c.computed}};
    if (!c.case_id.empty()) item["case"] = c.case_id;
    j["checks"].push_back(item);
  }
  return j.dump(2);
}

}  // namespace jpt
