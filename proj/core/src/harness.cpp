#include "rla/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rla/catalog.hpp"
#include "rla/cohomology.hpp"
#include "rla/io.hpp"
#include "rla/structure.hpp"

namespace rla {

namespace {

using nlohmann::json;

struct Subject {
  std::string id;
  const CatalogEntry* entry;
  std::uint64_t index;
};

struct Context {
  const HarnessConfig& cfg;
  std::mt19937_64 rng;
};

using Check = std::function<InstanceVerdict(const Subject&, Context&)>;
using Filter = std::function<bool(const RestrictedLieAlgebra&)>;

Vector random_vector(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
  std::uniform_int_distribution<int> d(0, int(p) - 1);
  Vector v(n);
  for (auto& c : v) c = Coord(d(rng));
  return v;
}

std::string exception_verdict(const std::string& tag) { return "exception:" + tag; }

// Source algebras: the enumeration (when supported) followed by the catalog.
struct Source {
  std::vector<CatalogEntry> enumerated;
  std::vector<CatalogEntry> catalog;
};

Source build_source(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  require_supported_prime(p);
  Source s;
  if (p == 2 || p == 3) {
    if (dim_bound > 4) throw PreconditionError("enumeration supports dimensions up to 4");
    for (std::size_t d = 1; d <= dim_bound; ++d) {
      // bounded by dim <= 4; the search budget is for per-instance searches
      auto part = enumerate_nilpotent(p, d, {cfg.dedup});
      for (auto& e : part) s.enumerated.push_back(std::move(e));
    }
  }
  for (auto& e : named_entries(p))
    if (e.algebra.dim() <= dim_bound) s.catalog.push_back(std::move(e));
  return s;
}

// Recomputes every expectation an entry carries; returns the keys that disagree.
std::vector<std::string> expected_mismatches(const CatalogEntry& e, std::uint64_t budget) {
  std::vector<std::string> bad;
  const auto& L = e.algebra;
  for (const auto& [key, want] : e.expected) {
    std::int64_t got = want;
    if (key == "der_p_dim") got = std::int64_t(der_p(L).dim());
    else if (key == "h1_adjoint_dim") got = std::int64_t(h1_adjoint_dim(L));
    else if (key == "torus_dim") got = std::int64_t(maximal_torus(L).dim());
    else if (key == "nilpotent") got = is_nilpotent(L) ? 1 : 0;
    else if (key == "center_dim") got = std::int64_t(center(L).dim());
    else if (key == "square_zero_outer") got = find_square_zero_outer(L, budget).witness ? 1 : 0;
    else if (key == "nilpotent_outer") got = nilpotent_outer_exists(L, budget) ? 1 : 0;
    if (got != want) bad.push_back(key);
  }
  return bad;
}

TheoremReport run_suite(const std::string& claim, std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg,
                        const Source& src, const std::string& filter_name, const Filter& filter, const Check& check) {
  TheoremReport r;
  r.claim = claim;
  r.population.p = p;
  r.population.dim_bound = dim_bound;
  r.population.dedup = cfg.dedup;
  r.population.filter = filter_name;

  std::vector<Subject> subjects;
  for (const auto& e : src.enumerated) {
    if (!filter(e.algebra)) continue;
    subjects.push_back({e.name, &e, subjects.size()});
    ++r.population.enumerated;
  }
  for (const auto& e : src.catalog) {
    if (!filter(e.algebra)) continue;
    subjects.push_back({"catalog:" + e.name, &e, subjects.size()});
    r.population.catalog.push_back(e.name);
  }

  std::vector<InstanceVerdict> out(subjects.size());
  auto run_one = [&](std::size_t k) {
    const Subject& s = subjects[k];
    Context ctx{cfg, std::mt19937_64(cfg.seed + s.index)};
    InstanceVerdict v;
    try {
      v = check(s, ctx);
      if (s.id.rfind("catalog:", 0) == 0 && !s.entry->expected.empty()) {
        const auto bad = expected_mismatches(*s.entry, cfg.budget);
        v.invariants["expected_checked"] = std::int64_t(s.entry->expected.size());
        if (!bad.empty()) {
          std::string keys;
          for (const auto& b : bad) keys += (keys.empty() ? "" : ",") + b;
          v.invariants["expected_mismatch"] = keys;
          v.verdict = "fail";
        }
      }
    } catch (const BudgetExceeded& e) {
      v = {};
      v.verdict = "budget";
      v.invariants["error"] = std::string(e.what());
    } catch (const std::exception& e) {
      v = {};
      v.verdict = "fail";
      v.invariants["error"] = std::string(e.what());
    }
    v.algebra_id = s.id;
    out[k] = std::move(v);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, unsigned(subjects.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < subjects.size(); ++k) run_one(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < subjects.size(); k = next++) run_one(k);
      });
    for (auto& t : pool) t.join();
  }
  r.instances = std::move(out);
  r.summary = summarize(r.instances);
  return r;
}

bool nilpotent_only(const RestrictedLieAlgebra& L) { return is_nilpotent(L); }
bool nonabelian_nilpotent(const RestrictedLieAlgebra& L) { return !L.is_abelian() && is_nilpotent(L); }
bool nontoral_nilpotent(const RestrictedLieAlgebra& L) { return is_nilpotent(L) && !is_torus(L); }

// Witness certification independent of the search: tables, square, inner
// test, plus restrictedness at random elements.
bool certify_square_zero_outer(const RestrictedLieAlgebra& L, const FieldMatrix& D, Context& ctx) {
  const auto c = Derivation::classify(L, D);
  if (!c.is_square_zero_outer()) return false;
  for (int k = 0; k < 8; ++k)
    if (!restricted_at(L, D, random_vector(ctx.rng, L.p(), L.dim()))) return false;
  return true;
}

InstanceVerdict check_nilpoutder(const Subject& s, Context& ctx) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  const auto tag = exception_tag(L);
  const auto search = find_square_zero_outer(L, ctx.cfg.budget);
  v.invariants["route"] = std::string(to_string(search.route));
  v.invariants["examined"] = std::int64_t(search.examined);
  if (tag) v.invariants["tag"] = *tag;
  if (search.witness) {
    v.witness = search.witness->matrix();
    const bool ok = certify_square_zero_outer(L, search.witness->matrix(), ctx);
    v.invariants["certified"] = ok;
    v.verdict = (ok && !tag) ? "pass" : "fail";
  } else {
    v.verdict = tag ? exception_verdict(*tag) : "fail";
  }
  return v;
}

InstanceVerdict check_corollary(const Subject& s, Context& ctx) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  const auto tag = exception_tag(L);
  const auto search = find_square_zero_outer(L, ctx.cfg.budget);
  const bool sq = search.witness.has_value();
  // A square-zero outer derivation is a nilpotent one; otherwise search all of der_p.
  const bool nil = sq ? search.witness->flags().is_nilpotent : nilpotent_outer_exists(L, ctx.cfg.budget);
  v.invariants["exceptional"] = tag.has_value();
  v.invariants["square_zero_outer"] = sq;
  v.invariants["nilpotent_outer"] = nil;
  bool ok = (sq == nil) && (nil == !tag.has_value());
  if (L.p() > 2 && L.dim() > 1) {
    const bool toral = is_torus(L);
    const bool no_der = der_p(L).dim() == 0;
    v.invariants["no_restricted_derivation"] = no_der;
    ok = ok && (toral == no_der) && (toral == !nil) && (toral == !sq);
  }
  if (tag) v.invariants["tag"] = *tag;
  v.verdict = !ok ? "fail" : tag ? exception_verdict(*tag) : "pass";
  return v;
}

InstanceVerdict check_outder(const Subject& s, Context&) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  const std::size_t h1 = h1_adjoint_dim(L);
  v.invariants["h1_adjoint_dim"] = std::int64_t(h1);
  if (is_torus(L)) {
    v.verdict = h1 == 0 ? exception_verdict("torus") : "fail";
    return v;
  }
  bool ok = h1 >= 1;
  if (exception_tag(L) == std::optional<std::string>("h1-char-2")) {
    const auto D = explicit_h1_char2_outer(L);
    const bool certified = D.flags().is_derivation && D.flags().is_restricted && !D.flags().is_inner;
    v.invariants["remark_derivation_outer"] = certified;
    v.witness = D.matrix();
    // L as a module for L/Z: u(L/Z) is too big for L to be free over it.
    const auto Z = center(L);
    const auto ind = induced_adjoint_module(L, Z, Subspace::full(L.p(), L.dim()));
    const auto fr = is_free_over_unipotent(ind.module);
    v.invariants["free_over_quotient_by_center"] = fr.free;
    v.invariants["enveloping_dim"] = std::int64_t(fr.enveloping_dim);
    ok = ok && certified && !fr.free && fr.enveloping_dim > L.dim();
  }
  v.verdict = ok ? "pass" : "fail";
  return v;
}

InstanceVerdict check_torus(const Subject& s, Context&) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  const std::size_t d = der_p(L).dim();
  v.invariants["der_p_dim"] = std::int64_t(d);
  v.verdict = d == 0 ? "pass" : "fail";
  return v;
}

InstanceVerdict check_heisenberg(const Subject& s, Context& ctx) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  const auto dp = der_p(L);
  const auto in = inner(L);
  const std::uint64_t total = checked_power(L.p(), dp.dim());
  if (total > ctx.cfg.budget) throw BudgetExceeded("der_p has " + std::to_string(total) + " elements");
  const PrimeField& f = L.field();
  const auto basis = dp.basis();
  std::int64_t nilpotent = 0, nilpotent_inner = 0;
  Vector digits(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vector flat = zero_vector(L.dim() * L.dim());
    for (std::size_t k = 0; k < basis.size(); ++k) axpy(f, digits[k], basis[k], flat);
    const auto D = as_matrix(L, flat);
    if (is_nilpotent_map(D)) {
      ++nilpotent;
      if (in.contains(flat)) ++nilpotent_inner;
    }
    for (auto& d : digits) {
      if (++d < L.p()) break;
      d = 0;
    }
  }
  const auto search = find_square_zero_outer(L, ctx.cfg.budget);
  v.invariants["der_p_dim"] = std::int64_t(dp.dim());
  v.invariants["inner_dim"] = std::int64_t(in.dim());
  v.invariants["der_p_size"] = std::int64_t(total);
  v.invariants["nilpotent_count"] = nilpotent;
  v.invariants["nilpotent_inner_count"] = nilpotent_inner;
  v.invariants["square_zero_outer"] = search.witness.has_value();
  const bool ok = nilpotent == nilpotent_inner && !search.witness;
  v.verdict = ok ? exception_verdict("h1-char-2") : "fail";
  return v;
}

// Every subspace of L with the given property, by exhaustive scan.
std::vector<Subspace> all_subspaces(const RestrictedLieAlgebra& L, std::uint64_t budget,
                                    const std::function<bool(const Subspace&)>& keep) {
  std::vector<Subspace> out;
  for_each_subspace(L.p(), L.dim(), -1, budget, [&](const Subspace& S) {
    if (keep(S)) out.push_back(S);
    return true;
  });
  return out;
}

std::vector<Subspace> maximal_elements(const std::vector<Subspace>& family) {
  std::vector<Subspace> out;
  for (const auto& a : family) {
    bool maximal = true;
    for (const auto& b : family)
      if (b.dim() > a.dim() && b.contains(a)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

bool max_abelian_ok(const RestrictedLieAlgebra& L, Invariants& inv, std::uint64_t budget) {
  const auto Z = center(L);
  const auto family =
      all_subspaces(L, budget, [&](const Subspace& S) { return is_abelian_subspace(L, S) && is_p_ideal(L, S); });
  const auto maxima = maximal_elements(family);
  bool ok = !maxima.empty();
  for (const auto& A : maxima) ok = ok && centralizer(L, A) == A && A.contains(Z) && A.dim() > Z.dim();
  const auto greedy = maximal_abelian_p_ideal(L);
  const bool greedy_found = std::find(maxima.begin(), maxima.end(), greedy) != maxima.end();
  inv["maximal_abelian_p_ideals"] = std::int64_t(maxima.size());
  inv["greedy_is_maximal"] = greedy_found;
  return ok && greedy_found;
}

// Returns false when the hypothesis (no square-zero outer derivation) fails.
bool dim_formula_ok(const RestrictedLieAlgebra& L, Invariants& inv, std::uint64_t budget, bool& applies) {
  applies = !find_square_zero_outer(L, budget).witness;
  inv["hypothesis"] = applies;
  if (!applies) return true;
  const auto A = maximal_abelian_p_ideal(L);
  const auto ind = induced_adjoint_module(L, A, A);
  const auto fr = is_free_over_unipotent(ind.module);
  const std::size_t d = L.dim() - A.dim();
  const std::size_t r = center(L).dim();
  inv["d"] = std::int64_t(d);
  inv["r"] = std::int64_t(r);
  inv["free"] = fr.free;
  inv["rank"] = std::int64_t(fr.rank);
  const std::uint64_t rhs = d + r * checked_power(L.p(), d);
  inv["d_plus_r_p_pow_d"] = std::int64_t(rhs);
  const bool h1_zero = h1_dim(ind.module) == 0;
  inv["h1_quotient_zero"] = h1_zero;
  return fr.free && fr.rank == r && rhs == L.dim() && h1_zero;
}

bool codim_one_ok(const RestrictedLieAlgebra& L, Invariants& inv, std::uint64_t budget) {
  const auto T = maximal_torus(L);
  const auto family = all_subspaces(L, budget, [&](const Subspace& S) {
    return !S.is_full() && S.contains(T) && is_p_ideal(L, S);
  });
  auto maxima = maximal_elements(family);
  bool ok = !maxima.empty();
  for (const auto& I : maxima) ok = ok && I.codim() == 1;
  auto listed = codim1_max_p_ideals(L);
  std::sort(maxima.begin(), maxima.end());
  std::sort(listed.begin(), listed.end());
  inv["maximal_p_ideals_over_torus"] = std::int64_t(maxima.size());
  inv["matches_hyperplane_list"] = maxima == listed;
  return ok && maxima == listed;
}

bool complement_ok(const RestrictedLieAlgebra& L, Invariants& inv, std::uint64_t budget, bool& applies) {
  const auto A = maximal_abelian_p_ideal(L);
  const auto Z = center(L);
  const auto ind = induced_adjoint_module(L, A, A);
  applies = is_free_over_unipotent(ind.module).free;
  inv["free"] = applies;
  if (!applies) return true;
  const auto H = find_p_complement(L, A, budget);
  inv["complement_found"] = H.has_value();
  if (!H) return false;
  inv["complement_dim"] = std::int64_t(H->dim());
  return is_p_subalgebra(L, *H) && (A + *H).is_full() && A.intersect(*H) == Z;
}

InstanceVerdict check_max_abelian(const Subject& s, Context& ctx) {
  InstanceVerdict v;
  v.verdict = max_abelian_ok(s.entry->algebra, v.invariants, ctx.cfg.budget) ? "pass" : "fail";
  return v;
}

InstanceVerdict check_dim_formula(const Subject& s, Context& ctx) {
  InstanceVerdict v;
  bool applies = false;
  const bool ok = dim_formula_ok(s.entry->algebra, v.invariants, ctx.cfg.budget, applies);
  const auto tag = exception_tag(s.entry->algebra);
  v.verdict = !ok ? "fail" : (applies && tag) ? exception_verdict(*tag) : "pass";
  return v;
}

InstanceVerdict check_codim_one(const Subject& s, Context& ctx) {
  InstanceVerdict v;
  v.verdict = codim_one_ok(s.entry->algebra, v.invariants, ctx.cfg.budget) ? "pass" : "fail";
  return v;
}

InstanceVerdict check_complement(const Subject& s, Context& ctx) {
  InstanceVerdict v;
  bool applies = false;
  v.verdict = complement_ok(s.entry->algebra, v.invariants, ctx.cfg.budget, applies) ? "pass" : "fail";
  return v;
}

void merge_prefixed(Invariants& into, const std::string& prefix, const Invariants& from) {
  for (const auto& [k, val] : from) into[prefix + "." + k] = val;
}

InstanceVerdict check_structural(const Subject& s, Context& ctx) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  Invariants a, b, c, d;
  bool applies5 = false, applies3 = false;
  const bool ok24 = max_abelian_ok(L, a, ctx.cfg.budget);
  const bool ok25 = dim_formula_ok(L, b, ctx.cfg.budget, applies5);
  const bool ok26 = is_torus(L) || codim_one_ok(L, c, ctx.cfg.budget);
  const bool ok23 = complement_ok(L, d, ctx.cfg.budget, applies3);
  merge_prefixed(v.invariants, "max_abelian", a);
  merge_prefixed(v.invariants, "dim_formula", b);
  merge_prefixed(v.invariants, "codim_one", c);
  merge_prefixed(v.invariants, "complement", d);
  v.verdict = (ok24 && ok25 && ok26 && ok23) ? "pass" : "fail";
  return v;
}

InstanceVerdict check_counterexample(const Subject& s, Context&) {
  const auto& L = s.entry->algebra;
  InstanceVerdict v;
  const std::size_t h1 = h1_adjoint_dim(L);
  const bool nil = is_nilpotent(L);
  const std::size_t z = center(L).dim();
  v.invariants["h1_adjoint_dim"] = std::int64_t(h1);
  v.invariants["nilpotent"] = nil;
  v.invariants["center_dim"] = std::int64_t(z);
  v.verdict = (h1 == 0 && !nil && z > 0) ? "pass" : "fail";
  return v;
}

json invariant_to_json(const InvariantValue& val) {
  return std::visit([](const auto& x) { return json(x); }, val);
}

InvariantValue invariant_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return j.get<std::string>();
  throw InputError("invariant values must be integers, booleans or strings");
}

}  // namespace

Summary summarize(const std::vector<InstanceVerdict>& instances) {
  Summary s;
  s.total = instances.size();
  for (const auto& i : instances) {
    if (i.verdict == "pass") ++s.pass;
    else if (i.verdict == "budget") ++s.budget;
    else if (i.verdict.rfind("exception:", 0) == 0) ++s.exception;
    else ++s.fail;
  }
  return s;
}

std::optional<std::string> exception_tag(const RestrictedLieAlgebra& L) {
  if (is_torus(L)) return "torus";
  if (L.dim() == 1) return "dim-1";  // non-toral, so the p-map vanishes
  if (L.p() == 2 && L.dim() == 3 && !L.is_abelian() && is_nilpotent(L)) return "h1-char-2";
  return std::nullopt;
}

TheoremReport verify_theorem_nilpoutder(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Thm-3.3", p, dim_bound, cfg, src, "nilpotent", nilpotent_only, check_nilpoutder);
}

TheoremReport verify_corollary_char(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Cor-3.4", p, dim_bound, cfg, src, "nilpotent", nilpotent_only, check_corollary);
}

TheoremReport verify_theorem_outder(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Thm-3.6", p, dim_bound, cfg, src, "nilpotent", nilpotent_only, check_outder);
}

TheoremReport verify_torus_vanishing(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  Source src;
  require_supported_prime(p);
  if ((p == 2 || p == 3) && dim_bound <= 4) src = build_source(p, dim_bound, cfg);
  else
    for (std::size_t n = 1; n <= dim_bound; ++n) src.catalog.push_back(torus(n, p));
  return run_suite("Prop-3.1", p, dim_bound, cfg, src, "torus",
                   [](const RestrictedLieAlgebra& L) { return is_nilpotent(L) && is_torus(L); }, check_torus);
}

TheoremReport verify_heisenberg_char2(std::uint32_t p, std::size_t, const HarnessConfig& cfg) {
  if (p != 2) throw PreconditionError("the Heisenberg exception is a characteristic 2 statement");
  Source src;
  for (auto& e : enumerate_nilpotent(2, 3, {cfg.dedup, cfg.budget})) src.enumerated.push_back(std::move(e));
  src.catalog.push_back(heisenberg(2, HeisenbergVariant::unipotent));
  src.catalog.push_back(heisenberg(2, HeisenbergVariant::toral_center));
  auto r = run_suite("Prop-3.2", p, 3, cfg, src, "nilpotent, non-abelian", nonabelian_nilpotent, check_heisenberg);
  return r;
}

TheoremReport verify_max_abelian(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Prop-2.4", p, dim_bound, cfg, src, "nilpotent, non-abelian", nonabelian_nilpotent,
                   check_max_abelian);
}

TheoremReport verify_dim_formula(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Prop-2.5-dimformula", p, dim_bound, cfg, src, "nilpotent, non-abelian", nonabelian_nilpotent,
                   check_dim_formula);
}

TheoremReport verify_codim_one(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Lem-2.6", p, dim_bound, cfg, src, "nilpotent, non-toral", nontoral_nilpotent, check_codim_one);
}

TheoremReport verify_complements(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("Prop-2.3", p, dim_bound, cfg, src, "nilpotent, non-abelian", nonabelian_nilpotent,
                   check_complement);
}

TheoremReport verify_structural_props(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  const auto src = build_source(p, dim_bound, cfg);
  return run_suite("structural", p, dim_bound, cfg, src, "nilpotent, non-abelian", nonabelian_nilpotent,
                   check_structural);
}

TheoremReport verify_counterexample(std::uint32_t p, std::size_t, const HarnessConfig& cfg) {
  require_supported_prime(p);
  Source src;
  src.catalog.push_back(solvable_torus_product(p));
  return run_suite("Remark-counterexample", p, src.catalog.front().algebra.dim(), cfg, src, "catalog",
                   [](const RestrictedLieAlgebra&) { return true; }, check_counterexample);
}

std::vector<std::string> claim_ids() {
  return {"Thm-3.3", "Cor-3.4",  "Thm-3.6",  "Prop-3.1",  "Prop-3.2",   "Prop-2.4",
          "Prop-2.5-dimformula", "Lem-2.6", "Prop-2.3", "structural", "Remark-counterexample"};
}

TheoremReport run_claim(const std::string& claim, std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg) {
  using Fn = TheoremReport (*)(std::uint32_t, std::size_t, const HarnessConfig&);
  static const std::map<std::string, Fn> table{
      {"Thm-3.3", verify_theorem_nilpoutder},
      {"Cor-3.4", verify_corollary_char},
      {"Thm-3.6", verify_theorem_outder},
      {"Prop-3.1", verify_torus_vanishing},
      {"Prop-3.2", verify_heisenberg_char2},
      {"Prop-2.4", verify_max_abelian},
      {"Prop-2.5-dimformula", verify_dim_formula},
      {"Lem-2.6", verify_codim_one},
      {"Prop-2.3", verify_complements},
      {"structural", verify_structural_props},
      {"Remark-counterexample", verify_counterexample},
  };
  auto it = table.find(claim);
  if (it == table.end()) throw std::invalid_argument("unknown claim id: " + claim);
  return it->second(p, dim_bound, cfg);
}

std::string report_to_json(const TheoremReport& r, int indent) {
  json doc;
  doc["claim"] = r.claim;
  doc["population"] = {{"p", r.population.p},
                       {"dim_bound", r.population.dim_bound},
                       {"dedup", r.population.dedup},
                       {"filter", r.population.filter},
                       {"enumerated", r.population.enumerated},
                       {"catalog", r.population.catalog}};
  doc["instances"] = json::array();
  for (const auto& i : r.instances) {
    json e;
    e["algebra_id"] = i.algebra_id;
    e["verdict"] = i.verdict;
    if (i.witness) {
      json rows = json::array();
      for (std::size_t a = 0; a < i.witness->rows(); ++a) {
        std::vector<int> row;
        for (std::size_t b = 0; b < i.witness->cols(); ++b) row.push_back((*i.witness)(a, b));
        rows.push_back(row);
      }
      e["witness"] = rows;
    }
    e["invariants"] = json::object();
    for (const auto& [k, val] : i.invariants) e["invariants"][k] = invariant_to_json(val);
    doc["instances"].push_back(std::move(e));
  }
  doc["summary"] = {{"total", r.summary.total},
                    {"pass", r.summary.pass},
                    {"fail", r.summary.fail},
                    {"exception", r.summary.exception},
                    {"budget", r.summary.budget}};
  return doc.dump(indent);
}

TheoremReport report_from_json(const std::string& text) {
  TheoremReport r;
  try {
    const json doc = json::parse(text);
    r.claim = doc.at("claim").get<std::string>();
    const auto& pop = doc.at("population");
    r.population.p = pop.at("p").get<std::uint32_t>();
    r.population.dim_bound = pop.at("dim_bound").get<std::size_t>();
    r.population.dedup = pop.at("dedup").get<bool>();
    r.population.filter = pop.at("filter").get<std::string>();
    r.population.enumerated = pop.at("enumerated").get<std::size_t>();
    r.population.catalog = pop.at("catalog").get<std::vector<std::string>>();
    for (const auto& e : doc.at("instances")) {
      InstanceVerdict i;
      i.algebra_id = e.at("algebra_id").get<std::string>();
      i.verdict = e.at("verdict").get<std::string>();
      if (e.contains("witness")) {
        const auto rows = e.at("witness").get<std::vector<std::vector<int>>>();
        FieldMatrix m(r.population.p, rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t a = 0; a < rows.size(); ++a) {
          if (rows[a].size() != m.cols()) throw InputError("ragged witness matrix");
          for (std::size_t b = 0; b < rows[a].size(); ++b) m.set(a, b, m.field().reduce(rows[a][b]));
        }
        i.witness = std::move(m);
      }
      for (const auto& [k, val] : e.at("invariants").items()) i.invariants[k] = invariant_from_json(val);
      r.instances.push_back(std::move(i));
    }
    const auto& s = doc.at("summary");
    r.summary = {s.at("total").get<std::size_t>(), s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                 s.at("exception").get<std::size_t>(), s.at("budget").get<std::size_t>()};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  if (!(summarize(r.instances) == r.summary)) throw InputError("report summary disagrees with its instances");
  return r;
}

std::string reports_to_csv(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << "claim,p,dim_bound,total,pass,fail,exception,budget\n";
  for (const auto& r : reports)
    os << r.claim << ',' << r.population.p << ',' << r.population.dim_bound << ',' << r.summary.total << ','
       << r.summary.pass << ',' << r.summary.fail << ',' << r.summary.exception << ',' << r.summary.budget << '\n';
  return os.str();
}

}  // namespace rla
