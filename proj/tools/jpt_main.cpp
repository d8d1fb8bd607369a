// jpt: exact Lie/Jordan bookkeeping for the five-dimensional supergravity
// catalog.  `jpt verify` replays every stored identity; the other verbs
// inspect individual records.

#include "CLI11.hpp"
#include "json.hpp"

#include "jpt/catalog.hpp"
#include "jpt/spectrum.hpp"
#include "jpt/verify.hpp"

#include <iostream>

namespace {

using namespace jpt;

int cmd_list(const Catalog& cat, bool json) {
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const TheoryCase& c : cat.cases) {
      j.push_back({{"id", c.id},
                   {"title", c.title},
                   {"family", c.family},
                   {"excluded", c.excluded},
                   {"susy", c.susy}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const TheoryCase& c : cat.cases) {
    std::cout << c.id;
    if (c.family) std::cout << "  [family in n]";
    if (c.excluded) std::cout << "  [excluded: " << c.excluded_reason << "]";
    if (!c.title.empty()) std::cout << "  -- " << c.title;
    std::cout << "\n";
  }
  return 0;
}

const TheoryCase& need_case(const Catalog& cat, const std::string& id) {
  const TheoryCase* c = cat.find_case(id);
  if (!c) bad_input("no case named '" + id + "' (try `jpt list`)");
  return *c;
}

int cmd_show(const Catalog& cat, const std::string& id, long long n) {
  const TheoryCase& c = need_case(cat, id);
  std::cout << "case " << c.id << (c.title.empty() ? "" : "  -- " + c.title)
            << "\n";
  if (c.excluded) {
    std::cout << "  excluded: " << c.excluded_reason << "\n";
    return 0;
  }
  std::cout << "  G3: " << Catalog::substitute(c.g3, n) << "   G5:";
  for (const auto& part : c.g5)
    std::cout << " " << Catalog::substitute(part, n);
  std::cout << "\n  jordan: " << c.jordan
            << "   effective dim: " << c.eff_dim.eval(n).str()
            << "   q: " << c.q_param.eval(n).str() << "\n";
  std::cout << "  supercharges: " << c.susy
            << (c.hypersector ? "  (D-independent hypersector)" : "") << "\n";
  if (!c.twin.empty()) std::cout << "  bosonic twin: " << c.twin << "\n";
  if (c.coset)
    std::cout << "  coset character c = nc = " << c.coset->eval(n).str()
              << "\n";
  if (!c.branchings.empty()) {
    std::cout << "  branchings:";
    for (const auto& b : c.branchings) std::cout << " " << b;
    std::cout << "\n";
  }
  return 0;
}

int cmd_branch(const Catalog& cat, const std::string& id, long long n) {
  const BranchingTmpl* b = cat.find_branching(id);
  if (!b) bad_input("no branching record named '" + id + "'");
  BranchingRecord r = cat.instantiate(*b, n);
  std::cout << r.id << ": " << r.parent << "  >  " << r.child;
  if (r.maximal) std::cout << "  (maximal)";
  if (r.symmetric) std::cout << "  (symmetric)";
  if (r.variant) std::cout << "  [" << r.variant << "]";
  std::cout << "\n";
  for (const BranchingRow& row : r.rows)
    std::cout << "  " << row.source.str() << " = " << row.result.str()
              << "   [" << row.source.total_dim() << " = "
              << row.result.total_dim() << "]\n";
  return 0;
}

int cmd_spectrum(const Catalog& cat, const std::string& id, long long n,
                 bool json) {
  const TheoryCase& c = need_case(cat, id);
  SpectrumReport rep = assemble_spectrum(cat, c, n);
  if (json) {
    nlohmann::json j;
    j["schema"] = "jpt-spectrum/1";
    j["case"] = rep.case_id;
    if (rep.n) j["n"] = *rep.n;
    j["boson_states"] = rep.boson_states;
    j["fermion_states"] = rep.fermion_states;
    j["bosons"] = rep.bosons.str();
    j["fermions"] = rep.fermions.str();
    nlohmann::json bc, fc;
    for (const auto& [tag, count] : rep.boson_content.counts) bc[tag] = count;
    for (const auto& [tag, count] : rep.fermion_content.counts)
      fc[tag] = count;
    j["boson_content"] = bc;
    j["fermion_content"] = fc;
    if (!rep.twin_partner.empty()) j["twin"] = rep.twin_partner;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.text();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Jordan-pair / U-duality verification toolkit"};
  app.require_subcommand(1);

  std::string catalog_path = jpt::Catalog::default_path();
  app.add_option("--catalog", catalog_path, "catalog data file")
      ->capture_default_str();

  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  auto* list = app.add_subcommand("list", "list the catalog cases");

  std::string show_id;
  auto* show = app.add_subcommand("show", "show one case");
  show->add_option("case", show_id)->required();

  std::string branch_id;
  long long branch_n = 1;
  auto* branch = app.add_subcommand("branch", "print a branching record");
  branch->add_option("id", branch_id)->required();
  branch->add_option("-n,--n", branch_n, "family parameter");

  std::string spec_id;
  long long spec_n = 1;
  auto* spectrum = app.add_subcommand("spectrum", "print a massless spectrum");
  spectrum->add_option("case", spec_id)->required();
  spectrum->add_option("-n,--n", spec_n, "family parameter");

  std::string prin_type;
  auto* principal =
      app.add_subcommand("principal", "principal sl(2) spins of a type");
  principal->add_option("type", prin_type)->required();

  std::string dim_type, dim_labels;
  auto* dim = app.add_subcommand("dim", "Weyl dimension of (type, labels)");
  dim->add_option("type", dim_type)->required();
  dim->add_option("labels", dim_labels, "comma-separated Dynkin labels")
      ->required();

  bool verify_all = false;
  std::string verify_case, n_range;
  jpt::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_flag("--all", verify_all, "run every check (the default)");
  verify->add_option("case", verify_case, "restrict to one case id");
  verify->add_option("--seed", vopt.seed, "seed for the property suites")
      ->capture_default_str();
  verify->add_option("--samples", vopt.samples,
                     "samples per property suite")
      ->capture_default_str();
  verify->add_option("--n-range", n_range, "family sweep, e.g. 1:16");

  // Let the global --json/--catalog appear after a subcommand as well.
  for (CLI::App* sc : {list, show, branch, spectrum, principal, dim, verify})
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*principal) {
      auto spins = jpt::RootSystem::get(jpt::parse_lie_type(prin_type))
                       .principal_su2_spins();
      for (size_t i = 0; i < spins.size(); ++i)
        std::cout << (i ? " " : "") << spins[i];
      std::cout << "\n";
      return 0;
    }
    if (*dim) {
      std::vector<int> labels;
      std::string tok;
      std::istringstream ss(dim_labels);
      while (std::getline(ss, tok, ',')) labels.push_back(std::stoi(tok));
      std::cout << jpt::weyl_dim(jpt::parse_lie_type(dim_type), labels)
                << "\n";
      return 0;
    }

    jpt::Catalog cat = jpt::Catalog::load(catalog_path);
    if (*list) return cmd_list(cat, json);
    if (*show) return cmd_show(cat, show_id, 1);
    if (*branch) return cmd_branch(cat, branch_id, branch_n);
    if (*spectrum) return cmd_spectrum(cat, spec_id, spec_n, json);
    if (*verify) {
      if (!n_range.empty()) {
        auto colon = n_range.find(':');
        if (colon == std::string::npos)
          jpt::bad_input("--n-range wants a:b");
        vopt.n_lo = std::stoll(n_range.substr(0, colon));
        vopt.n_hi = std::stoll(n_range.substr(colon + 1));
      }
      jpt::VerifyReport rep =
          verify_case.empty() ? jpt::run_verification(cat, vopt)
                              : jpt::verify_case(cat, verify_case, vopt);
      std::cout << (json ? rep.json() + "\n" : rep.text());
      return rep.failures() == 0 ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
