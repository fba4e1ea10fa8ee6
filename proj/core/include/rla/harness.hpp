#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rla/algebra.hpp"
#include "rla/derivations.hpp"

namespace rla {

using InvariantValue = std::variant<std::int64_t, bool, std::string>;
using Invariants = std::map<std::string, InvariantValue>;

struct InstanceVerdict {
  std::string algebra_id;
  /// "pass", "fail", "budget" or "exception:<tag>" with tag torus, dim-1 or h1-char-2.
  std::string verdict;
  std::optional<FieldMatrix> witness;
  Invariants invariants;
  friend bool operator==(const InstanceVerdict&, const InstanceVerdict&) = default;
};

struct Population {
  std::uint32_t p = 2;
  std::size_t dim_bound = 0;
  bool dedup = false;
  /// Which algebras of the source were kept, e.g. "nilpotent, non-abelian".
  std::string filter;
  std::size_t enumerated = 0;
  std::vector<std::string> catalog;
  friend bool operator==(const Population&, const Population&) = default;
};

struct Summary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t exception = 0;
  std::size_t budget = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct TheoremReport {
  std::string claim;
  Population population;
  std::vector<InstanceVerdict> instances;
  Summary summary;

  /// No failures and no budget verdicts.
  bool ok() const noexcept { return summary.fail == 0 && summary.budget == 0; }
  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

Summary summarize(const std::vector<InstanceVerdict>& instances);

struct HarnessConfig {
  std::uint64_t budget = kDefaultSearchBudget;
  unsigned workers = 1;
  bool dedup = false;
  std::uint64_t seed = 20240611;
};

/// "torus", "dim-1" or "h1-char-2" when L falls under the exclusion of the
/// square-zero existence theorem. h1-char-2 is detected structurally: p = 2,
/// dim 3, nilpotent and non-abelian. Nilpotent L only.
std::optional<std::string> exception_tag(const RestrictedLieAlgebra& L);

// One suite per claim id. The population is every restricted structure on the
// nilpotent templates of dimension 1..dim_bound (p in {2, 3}, dim_bound <= 4),
// followed by the catalog entries of dimension <= dim_bound that pass the suite
// filter. For other primes only the catalog part is used.
TheoremReport verify_theorem_nilpoutder(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_corollary_char(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_theorem_outder(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_torus_vanishing(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
/// p = 2 only; the dimension bound is ignored (the population is three-dimensional).
TheoremReport verify_heisenberg_char2(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_max_abelian(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_dim_formula(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_codim_one(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
TheoremReport verify_complements(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
/// The four structural checks above, per instance.
TheoremReport verify_structural_props(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});
/// solvable_torus_product(p); the dimension bound is ignored.
TheoremReport verify_counterexample(std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});

std::vector<std::string> claim_ids();
/// Dispatches on the claim id; std::invalid_argument for unknown ids.
TheoremReport run_claim(const std::string& claim, std::uint32_t p, std::size_t dim_bound, const HarnessConfig& cfg = {});

std::string report_to_json(const TheoremReport& r, int indent = 2);
/// Throws InputError on malformed documents or summaries that disagree with the instances.
TheoremReport report_from_json(const std::string& text);
/// Header plus one row per report: claim,p,dim_bound,total,pass,fail,exception,budget.
std::string reports_to_csv(const std::vector<TheoremReport>& reports);

}  // namespace rla
