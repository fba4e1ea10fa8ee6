// rla: command-line front end for the restricted Lie algebra library.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rla/catalog.hpp"
#include "rla/cohomology.hpp"
#include "rla/derivations.hpp"
#include "rla/harness.hpp"
#include "rla/io.hpp"
#include "rla/structure.hpp"

namespace {

using namespace rla;
using nlohmann::json;

enum Exit { kOk = 0, kInput = 1, kValidation = 2, kBudget = 3, kClaim = 4 };

struct Options {
  std::uint64_t budget = kDefaultSearchBudget;
  unsigned workers = 1;
  std::uint64_t seed = HarnessConfig{}.seed;
  bool json_out = false;
};

std::optional<std::uint64_t> env_number(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const auto x = std::strtoull(v, &end, 10);
  if (*end != '\0') throw InputError(std::string(name) + " must be a non-negative integer");
  return x;
}

// "x + 2*z", "0"
std::string combination(const RestrictedLieAlgebra& L, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += L.label(i);
  }
  return s.empty() ? "0" : s;
}

std::string span_text(const RestrictedLieAlgebra& L, const Subspace& S) {
  std::string s = "span{";
  bool first = true;
  for (const auto& b : S.basis()) {
    s += (first ? "" : ", ") + combination(L, b);
    first = false;
  }
  return s + "} (dim " + std::to_string(S.dim()) + ")";
}

void print_matrix(const RestrictedLieAlgebra& L, const FieldMatrix& D, std::ostream& os) {
  for (std::size_t r = 0; r < D.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < D.cols(); ++c) os << (c ? " " : "") << int(D(r, c));
    os << "]\n";
  }
  for (std::size_t j = 0; j < D.cols(); ++j) os << "  D(" << L.label(j) << ") = " << combination(L, D.column(j)) << "\n";
}

json matrix_json(const FieldMatrix& D) {
  json rows = json::array();
  for (std::size_t r = 0; r < D.rows(); ++r) {
    std::vector<int> row;
    for (std::size_t c = 0; c < D.cols(); ++c) row.push_back(D(r, c));
    rows.push_back(row);
  }
  return rows;
}

int cmd_check(const std::string& file) {
  const auto L = load_algebra(file);
  std::cout << "valid: p=" << L.p() << " dim=" << L.dim() << (L.is_abelian() ? " abelian" : "")
            << (is_nilpotent(L) ? " nilpotent" : "") << "\n";
  return kOk;
}

int cmd_inspect(const std::string& file, const Options& o) {
  const auto L = load_algebra(file);
  const bool nil = is_nilpotent(L);
  json j;
  j["p"] = L.p();
  j["dim"] = L.dim();
  j["center"] = span_text(L, center(L));
  j["derived"] = span_text(L, derived(L));
  j["nilpotent"] = nil;
  if (nil) {
    j["nilpotency_class"] = nilpotency_class(L);
    j["torus_dim"] = maximal_torus(L).dim();
    j["p_unipotent"] = is_p_unipotent(L);
    j["maximal_abelian_p_ideal"] = span_text(L, maximal_abelian_p_ideal(L));
    j["codim1_max_p_ideals"] = is_torus(L) ? 0 : codim1_max_p_ideals(L).size();
  }
  if (o.json_out) {
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (const char* k : {"p", "dim", "center", "derived", "nilpotent", "nilpotency_class", "torus_dim", "p_unipotent",
                        "maximal_abelian_p_ideal", "codim1_max_p_ideals"}) {
    if (!j.contains(k)) continue;
    std::cout << k << ": " << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) << "\n";
  }
  return kOk;
}

struct DerivationFlagsCli {
  bool restricted = false, outer = false, square_zero = false, nilpotent = false;
};

int cmd_derivations(const std::string& file, const DerivationFlagsCli& f, const Options& o) {
  const auto L = load_algebra(file);
  const auto dp = der_p(L);
  std::cout << "der: " << der(L).dim() << "\n";
  std::cout << "der_p: " << dp.dim() << "\n";
  std::cout << "inner: " << inner(L).dim() << "\n";
  std::cout << "h1: " << h1_adjoint_dim(L) << "\n";
  if (f.restricted) {
    std::size_t k = 0;
    for (const auto& b : dp.basis()) {
      std::cout << "der_p basis " << k++ << ":\n";
      print_matrix(L, as_matrix(L, b), std::cout);
    }
  }
  auto report = [&](const char* what, const std::optional<FieldMatrix>& w) {
    std::cout << what << ": ";
    if (!w) {
      std::cout << "none (complete search)\n";
      return;
    }
    std::cout << "witness\n";
    print_matrix(L, *w, std::cout);
  };
  try {
    if (f.outer) {
      std::optional<FieldMatrix> w;
      for_each_outer_restricted(L, o.budget, [&](const FieldMatrix& D) {
        w = D;
        return true;
      });
      report("outer", w);
    }
    if (f.square_zero) {
      const auto s = find_square_zero_outer(L, o.budget);
      std::optional<FieldMatrix> w;
      if (s.witness) w = s.witness->matrix();
      report("square-zero outer", w);
      if (s.witness) std::cout << "  route: " << to_string(s.route) << "\n";
    }
    if (f.nilpotent) {
      const auto d = find_nilpotent_outer(L, o.budget);
      std::optional<FieldMatrix> w;
      if (d) w = d->matrix();
      report("nilpotent outer", w);
    }
  } catch (const BudgetExceeded& e) {
    std::cout << "budget exceeded\n";
    throw;
  }
  return kOk;
}

int cmd_h1(const std::string& file, const Options& o) {
  const auto L = load_algebra(file);
  const auto M = RestrictedModule::adjoint(L);
  const auto z = z1(M).dim();
  const auto b = b1(M).dim();
  if (o.json_out) {
    std::cout << json{{"z1", z}, {"b1", b}, {"h1", z - b}}.dump(2) << "\n";
  } else {
    std::cout << "z1: " << z << "\nb1: " << b << "\nh1: " << z - b << "\n";
  }
  return kOk;
}

int cmd_verify(const std::vector<std::string>& claims, std::uint32_t p, std::size_t dim, const std::string& out,
               const std::string& csv, bool dedup, const Options& o) {
  HarnessConfig cfg{o.budget, o.workers, dedup, o.seed};
  std::vector<TheoremReport> reports;
  for (const auto& c : claims) reports.push_back(run_claim(c, p, dim, cfg));
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    if (reports.size() == 1) {
      f << report_to_json(reports.front()) << "\n";
    } else {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(json::parse(report_to_json(r)));
      f << arr.dump(2) << "\n";
    }
  }
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw InputError("cannot write " + csv);
    f << reports_to_csv(reports);
  }
  bool ok = true, budget = false;
  for (const auto& r : reports) {
    std::cout << r.claim << " p=" << p << " dim<=" << r.population.dim_bound << ": total=" << r.summary.total
              << " pass=" << r.summary.pass << " exception=" << r.summary.exception << " fail=" << r.summary.fail
              << " budget=" << r.summary.budget << "\n";
    ok = ok && r.summary.fail == 0;
    budget = budget || r.summary.budget > 0;
  }
  if (!ok) return kClaim;
  return budget ? kBudget : kOk;
}

int cmd_enumerate(std::uint32_t p, std::size_t dim, bool dedup, bool names_only, const Options& o) {
  for (const auto& e : enumerate_nilpotent(p, dim, {dedup, o.budget})) {
    std::cout << e.name;
    if (dedup) std::cout << "\tclass_size=" << e.expected.at("class_size");
    if (!names_only) std::cout << "\t" << algebra_to_json(e.algebra);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_catalog_list(std::uint32_t p) {
  for (const auto& e : named_entries(p)) std::cout << e.name << "\t" << e.provenance << "\n";
  return kOk;
}

int cmd_catalog_export(const std::string& name, std::uint32_t p) {
  const auto e = named_entry(name, p);
  if (!e) throw InputError("unknown catalog entry: " + name);
  std::cout << algebra_to_json(e->algebra, 2) << "\n";
  return kOk;
}

int cmd_catalog_manifest(std::uint32_t p) {
  json arr = json::array();
  for (const auto& e : named_entries(p))
    arr.push_back({{"name", e.name},
                   {"provenance", e.provenance},
                   {"expected", e.expected},
                   {"algebra", json::parse(algebra_to_json(e.algebra))}});
  std::cout << arr.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with restricted Lie algebras over GF(p)"};
  app.require_subcommand(1);
  Options o;
  std::optional<std::uint64_t> budget_flag;
  std::optional<unsigned> workers_flag;
  app.add_option("--budget", budget_flag, "max candidates per search (env RLA_BUDGET)")->check(CLI::PositiveNumber);
  app.add_option("--workers", workers_flag, "parallel harness workers (env RLA_WORKERS)")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized spot checks");
  app.add_flag("--json", o.json_out, "JSON output where supported");

  std::string file;
  auto* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("file", file)->required();

  auto* inspect = app.add_subcommand("inspect", "structural invariants");
  inspect->add_option("file", file)->required();

  DerivationFlagsCli dflags;
  auto* derivs = app.add_subcommand("derivations", "derivation dimensions and witness searches");
  derivs->add_option("file", file)->required();
  derivs->add_flag("--restricted", dflags.restricted, "print a basis of der_p");
  derivs->add_flag("--outer", dflags.outer, "search an outer restricted derivation");
  derivs->add_flag("--square-zero", dflags.square_zero, "search a square-zero outer restricted derivation");
  derivs->add_flag("--nilpotent", dflags.nilpotent, "search a nilpotent outer restricted derivation");

  auto* h1 = app.add_subcommand("h1", "restricted first cohomology with adjoint coefficients");
  h1->add_option("file", file)->required();

  std::vector<std::string> claims;
  std::uint32_t p = 2;
  std::size_t dim = 3;
  std::string out, csv;
  bool dedup = false, names_only = false;
  auto* verify = app.add_subcommand("verify", "run theorem suites and write reports");
  verify->add_option("--claim", claims, "claim id (repeatable)")->required()->check(CLI::IsMember(claim_ids()));
  verify->add_option("--p", p, "prime");
  verify->add_option("--dim", dim, "dimension bound");
  verify->add_option("--out", out, "report JSON path");
  verify->add_option("--csv", csv, "summary CSV path");
  verify->add_flag("--dedup", dedup, "one algebra per restricted isomorphism class");

  auto* enumerate = app.add_subcommand("enumerate", "nilpotent restricted structures of a given dimension");
  enumerate->add_option("--p", p, "prime (2 or 3)");
  enumerate->add_option("--dim", dim, "dimension (1..4)");
  enumerate->add_flag("--dedup", dedup, "one algebra per restricted isomorphism class");
  enumerate->add_flag("--names", names_only, "names only");

  auto* catalog = app.add_subcommand("catalog", "named algebras");
  catalog->require_subcommand(1);
  auto* clist = catalog->add_subcommand("list", "list named entries");
  clist->add_option("--p", p, "prime");
  std::string name;
  auto* cexport = catalog->add_subcommand("export", "print an entry as an algebra document");
  cexport->add_option("name", name)->required();
  cexport->add_option("--p", p, "prime");
  auto* cmanifest = catalog->add_subcommand("manifest", "every entry with its expectations");
  cmanifest->add_option("--p", p, "prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    o.budget = budget_flag ? *budget_flag : env_number("RLA_BUDGET").value_or(kDefaultSearchBudget);
    const auto hw = std::max(1u, std::thread::hardware_concurrency());
    o.workers = workers_flag ? *workers_flag : unsigned(env_number("RLA_WORKERS").value_or(hw));
    if (o.budget == 0 || o.workers == 0) throw InputError("budget and workers must be positive");

    if (*check) return cmd_check(file);
    if (*inspect) return cmd_inspect(file, o);
    if (*derivs) return cmd_derivations(file, dflags, o);
    if (*h1) return cmd_h1(file, o);
    if (*verify) return cmd_verify(claims, p, dim, out, csv, dedup, o);
    if (*enumerate) return cmd_enumerate(p, dim, dedup, names_only, o);
    if (*clist) return cmd_catalog_list(p);
    if (*cexport) return cmd_catalog_export(name, p);
    if (*cmanifest) return cmd_catalog_manifest(p);
  } catch (const ValidationError& e) {
    std::cerr << "invalid algebra (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kValidation;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
