#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rla/algebra.hpp"
#include "rla/derivations.hpp"

namespace rla {

struct CatalogEntry {
  std::string name;
  RestrictedLieAlgebra algebra;
  /// Invariants the entry is known to have (name -> value), checked by the harness.
  std::map<std::string, std::int64_t> expected;
  /// Why the entry is in the catalog.
  std::string provenance;
};

/// Split torus of dimension n: abelian with x_i^[p] = x_i.
CatalogEntry torus(std::size_t n, std::uint32_t p);
/// One-dimensional algebra F e with e^[p] = 0.
CatalogEntry one_dim_nil(std::uint32_t p);

enum class HeisenbergVariant { unipotent, toral_center };
/// h1 = F x + F y + F z with [x, y] = z, all p-powers zero (unipotent) or z^[p] = z.
CatalogEntry heisenberg(std::uint32_t p, HeisenbergVariant variant);
/// h1 with an explicit p-map table (rows x^[p], y^[p], z^[p]). The constructor
/// rejects any non-central value.
CatalogEntry heisenberg(std::uint32_t p, const std::vector<Vector>& pmap);

/// [e, f] = f with e^[p] = e and f^[p] = 0.
CatalogEntry two_dim_nonabelian(std::uint32_t p);
/// two_dim_nonabelian(p) x torus(1, p): solvable, not nilpotent, non-zero center,
/// and without outer restricted derivations.
CatalogEntry solvable_torus_product(std::uint32_t p);

/// The named entries for a given prime, in a fixed order.
std::vector<CatalogEntry> named_entries(std::uint32_t p);
/// Looks up a named entry ("torus1", "heisenberg-toral", ...); nullopt if unknown.
std::optional<CatalogEntry> named_entry(const std::string& name, std::uint32_t p);
std::vector<std::string> named_entry_names();

/// Nilpotent bracket templates of dimension n (abelian, h1, h1 + F, filiform).
struct BracketTemplate {
  std::string name;
  std::size_t dim;
  std::vector<RestrictedLieAlgebra::BracketEntry> brackets;
  std::vector<std::string> labels;
};
std::vector<BracketTemplate> nilpotent_templates(std::size_t dim);

/// Candidate values of x_i^[p]: all v with ad(v) = (ad x_i)^p, as a particular
/// solution plus the center. nullopt when no such v exists.
struct PmapCandidates {
  Vector particular;
  std::vector<Vector> center_basis;
};
std::optional<std::vector<PmapCandidates>> pmap_candidates(std::uint32_t p, const BracketTemplate& t);

struct EnumerateOptions {
  bool dedup = false;
  std::uint64_t budget = kDefaultSearchBudget;
};

/// Every restricted structure on every nilpotent template of dimension `dim`,
/// sorted by table bytes. Supported for p in {2, 3} and 1 <= dim <= 4.
/// With dedup, one representative per restricted isomorphism class is kept
/// (the first in sorted order); its "class_size" expectation records the
/// class size. Dedup is refused beyond dim 4 over GF(2) and dim 3 over GF(3).
std::vector<CatalogEntry> enumerate_nilpotent(std::uint32_t p, std::size_t dim, const EnumerateOptions& opts = {});

/// All invertible n x n matrices over GF(p), in counter order.
std::vector<FieldMatrix> general_linear_group(std::uint32_t p, std::size_t n);

/// The algebra with tables such that g : L -> g.L is a restricted isomorphism.
RestrictedLieAlgebra transform(const RestrictedLieAlgebra& L, const FieldMatrix& g);

/// A restricted isomorphism L -> M (as a matrix) when one exists.
std::optional<FieldMatrix> find_isomorphism(const RestrictedLieAlgebra& L, const RestrictedLieAlgebra& M);

/// Isomorphism-invariant summary: dim, torus dim, h1 dim, derived series dims.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t torus_dim = 0;
  std::size_t h1_adjoint = 0;
  std::vector<std::size_t> derived_series;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const RestrictedLieAlgebra& L);

/// Name built from the template and the p-map table, e.g. "heisenberg:000.000.001".
std::string entry_name(const std::string& template_name, const RestrictedLieAlgebra& L);

}  // namespace rla
