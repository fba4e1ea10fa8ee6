#include "rla/catalog.hpp"

#include <algorithm>
#include <map>

#include "rla/structure.hpp"

namespace rla {

namespace {

std::vector<Vector> zero_pmap(std::size_t n) { return std::vector<Vector>(n, zero_vector(n)); }

RestrictedLieAlgebra::BracketEntry entry(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return {i, j, unit_vector(n, k)};
}

FieldMatrix inverse(const FieldMatrix& g) {
  FieldMatrix inv(g.p(), g.rows(), g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    auto col = solve(g, unit_vector(g.rows(), j));
    if (!col) throw std::invalid_argument("matrix is not invertible");
    inv.set_column(j, *col);
  }
  return inv;
}

// Brackets of g.L; the p-map is filled in only when `with_pmap`.
std::vector<Vector> transformed_brackets(const RestrictedLieAlgebra& L, const FieldMatrix& g,
                                         const std::vector<Vector>& h) {
  const std::size_t n = L.dim();
  std::vector<Vector> brackets(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets[i * n + j] = g.apply(L.bracket(h[i], h[j]));
  return brackets;
}

std::vector<Vector> columns_of(const FieldMatrix& m) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column(j));
  return out;
}

std::vector<Vector> bracket_table(const RestrictedLieAlgebra& L) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) out.push_back(L.bracket_basis(i, j));
  return out;
}

}  // namespace

CatalogEntry torus(std::size_t n, std::uint32_t p) {
  std::vector<Vector> pmap;
  for (std::size_t i = 0; i < n; ++i) pmap.push_back(unit_vector(n, i));
  auto L = RestrictedLieAlgebra::from_upper(p, n, {}, std::move(pmap));
  return {"torus" + std::to_string(n),
          std::move(L),
          {{"der_p_dim", 0}, {"h1_adjoint_dim", 0}, {"torus_dim", std::int64_t(n)}, {"nilpotent", 1}},
          "split torus: every restricted derivation vanishes"};
}

CatalogEntry one_dim_nil(std::uint32_t p) {
  auto L = RestrictedLieAlgebra::from_upper(p, 1, {}, zero_pmap(1), {"e"});
  return {"one-dim-nil",
          std::move(L),
          {{"der_p_dim", 1},
           {"h1_adjoint_dim", 1},
           {"nilpotent_outer", 0},
           {"square_zero_outer", 0},
           {"torus_dim", 0}},
          "one-dimensional with zero p-map: every restricted derivation is a scalar"};
}

CatalogEntry heisenberg(std::uint32_t p, const std::vector<Vector>& pmap) {
  auto L = RestrictedLieAlgebra::from_upper(p, 3, {entry(3, 0, 1, 2)}, pmap, {"x", "y", "z"});
  CatalogEntry e{"heisenberg", std::move(L), {{"center_dim", 1}, {"nilpotent", 1}}, "Heisenberg algebra [x,y] = z"};
  if (p == 2) {
    e.expected["nilpotent_outer"] = 0;
    e.expected["square_zero_outer"] = 0;
  } else {
    e.expected["nilpotent_outer"] = 1;
    e.expected["square_zero_outer"] = 1;
  }
  return e;
}

CatalogEntry heisenberg(std::uint32_t p, HeisenbergVariant variant) {
  auto pmap = zero_pmap(3);
  if (variant == HeisenbergVariant::toral_center) pmap[2] = unit_vector(3, 2);
  auto e = heisenberg(p, pmap);
  if (variant == HeisenbergVariant::toral_center) {
    e.name = "heisenberg-toral";
    e.expected["torus_dim"] = 1;
    e.provenance = "Heisenberg algebra with toral center z^[p] = z";
  } else {
    e.name = "heisenberg-unipotent";
    e.expected["torus_dim"] = 0;
    e.provenance = "Heisenberg algebra with zero p-map";
  }
  return e;
}

CatalogEntry two_dim_nonabelian(std::uint32_t p) {
  std::vector<Vector> pmap{unit_vector(2, 0), zero_vector(2)};
  auto L = RestrictedLieAlgebra::from_upper(p, 2, {entry(2, 0, 1, 1)}, std::move(pmap), {"e", "f"});
  return {"two-dim-nonabelian", std::move(L), {{"nilpotent", 0}, {"center_dim", 0}},
          "[e,f] = f with e toral and f p-nilpotent"};
}

CatalogEntry solvable_torus_product(std::uint32_t p) {
  auto L = direct_product(two_dim_nonabelian(p).algebra, torus(1, p).algebra);
  return {"solvable-torus-product", std::move(L), {{"nilpotent", 0}, {"center_dim", 1}, {"h1_adjoint_dim", 0}},
          "solvable, non-nilpotent, non-zero center, no outer restricted derivations"};
}

std::vector<std::string> named_entry_names() {
  return {"torus1",           "torus2",          "torus3",
          "one-dim-nil",      "heisenberg-unipotent", "heisenberg-toral",
          "two-dim-nonabelian", "solvable-torus-product"};
}

std::optional<CatalogEntry> named_entry(const std::string& name, std::uint32_t p) {
  if (name == "torus1") return torus(1, p);
  if (name == "torus2") return torus(2, p);
  if (name == "torus3") return torus(3, p);
  if (name == "one-dim-nil") return one_dim_nil(p);
  if (name == "heisenberg-unipotent") return heisenberg(p, HeisenbergVariant::unipotent);
  if (name == "heisenberg-toral") return heisenberg(p, HeisenbergVariant::toral_center);
  if (name == "two-dim-nonabelian") return two_dim_nonabelian(p);
  if (name == "solvable-torus-product") return solvable_torus_product(p);
  return std::nullopt;
}

std::vector<CatalogEntry> named_entries(std::uint32_t p) {
  std::vector<CatalogEntry> out;
  for (const auto& n : named_entry_names()) out.push_back(*named_entry(n, p));
  return out;
}

std::vector<BracketTemplate> nilpotent_templates(std::size_t dim) {
  std::vector<BracketTemplate> out;
  out.push_back({"abelian" + std::to_string(dim), dim, {}, {}});
  if (dim == 3) out.push_back({"heisenberg", 3, {entry(3, 0, 1, 2)}, {"x", "y", "z"}});
  if (dim == 4) {
    out.push_back({"heisenberg+F", 4, {entry(4, 0, 1, 2)}, {"x", "y", "z", "w"}});
    out.push_back({"filiform4", 4, {entry(4, 0, 1, 2), entry(4, 0, 2, 3)}, {}});
  }
  return out;
}

std::optional<std::vector<PmapCandidates>> pmap_candidates(std::uint32_t p, const BracketTemplate& t) {
  // an algebra with zero p-map only to read off ad matrices; compatibility is not checked here
  std::vector<Vector> table(t.dim * t.dim, zero_vector(t.dim));
  const PrimeField f(p);
  for (const auto& e : t.brackets) {
    table[e.i * t.dim + e.j] = e.value;
    table[e.j * t.dim + e.i] = scale(f, f.neg(1), e.value);
  }
  std::vector<FieldMatrix> ad;
  FieldMatrix cols(p, t.dim * t.dim, t.dim);
  for (std::size_t i = 0; i < t.dim; ++i) {
    FieldMatrix m(p, t.dim, t.dim);
    for (std::size_t j = 0; j < t.dim; ++j) m.set_column(j, table[i * t.dim + j]);
    cols.set_column(i, m.flatten());
    ad.push_back(std::move(m));
  }
  const auto center_basis = kernel(cols).basis();
  std::vector<PmapCandidates> out;
  for (std::size_t i = 0; i < t.dim; ++i) {
    auto v = solve(cols, ad[i].power(p).flatten());
    if (!v) return std::nullopt;
    out.push_back({*v, center_basis});
  }
  return out;
}

std::string entry_name(const std::string& template_name, const RestrictedLieAlgebra& L) {
  std::string s = template_name + ":";
  for (std::size_t i = 0; i < L.dim(); ++i) {
    if (i) s += '.';
    for (auto c : L.pmap_basis(i)) s += std::to_string(int(c));
  }
  return s;
}

std::vector<FieldMatrix> general_linear_group(std::uint32_t p, std::size_t n) {
  std::vector<FieldMatrix> out;
  const std::uint64_t count = checked_power(p, n * n);
  Vector digits(n * n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto g = FieldMatrix::unflatten(p, n, n, digits);
    if (rank(g) == n) out.push_back(std::move(g));
    for (auto& d : digits) {
      if (++d < p) break;
      d = 0;
    }
  }
  return out;
}

RestrictedLieAlgebra transform(const RestrictedLieAlgebra& L, const FieldMatrix& g) {
  const auto h = columns_of(inverse(g));
  auto brackets = transformed_brackets(L, g, h);
  std::vector<Vector> pmap;
  for (std::size_t i = 0; i < L.dim(); ++i) pmap.push_back(g.apply(L.ppow(h[i])));
  return RestrictedLieAlgebra::create(L.p(), L.dim(), std::move(brackets), std::move(pmap), L.labels());
}

std::optional<FieldMatrix> find_isomorphism(const RestrictedLieAlgebra& L, const RestrictedLieAlgebra& M) {
  if (L.p() != M.p() || L.dim() != M.dim()) return std::nullopt;
  const auto target = bracket_table(M);
  for (const auto& g : general_linear_group(L.p(), L.dim())) {
    const auto h = columns_of(inverse(g));
    if (transformed_brackets(L, g, h) != target) continue;
    bool ok = true;
    for (std::size_t i = 0; i < L.dim() && ok; ++i) ok = g.apply(L.ppow(h[i])) == M.pmap_basis(i);
    if (ok) return g;
  }
  return std::nullopt;
}

Fingerprint fingerprint(const RestrictedLieAlgebra& L) {
  Fingerprint fp;
  fp.dim = L.dim();
  fp.torus_dim = is_nilpotent(L) ? maximal_torus(L).dim() : 0;
  fp.h1_adjoint = h1_adjoint_dim(L);
  Subspace s = Subspace::full(L.p(), L.dim());
  fp.derived_series.push_back(s.dim());
  while (!s.is_zero()) {
    Subspace next = bracket_space(L, s, s);
    if (next == s) break;
    s = std::move(next);
    fp.derived_series.push_back(s.dim());
  }
  return fp;
}

std::vector<CatalogEntry> enumerate_nilpotent(std::uint32_t p, std::size_t dim, const EnumerateOptions& opts) {
  if ((p != 2 && p != 3) || dim < 1 || dim > 4)
    throw PreconditionError("enumerate_nilpotent supports p in {2,3} and 1 <= dim <= 4");
  if (opts.dedup && !((p == 2 && dim <= 4) || (p == 3 && dim <= 3)))
    throw BudgetExceeded("isomorphism dedup is limited to dim <= 4 over GF(2) and dim <= 3 over GF(3)");
  const PrimeField f(p);
  std::vector<CatalogEntry> all;
  for (const auto& t : nilpotent_templates(dim)) {
    auto cands = pmap_candidates(p, t);
    if (!cands) continue;
    const std::size_t zdim = cands->front().center_basis.size();
    const std::uint64_t count = checked_power(p, zdim * dim);
    if (count > opts.budget)
      throw BudgetExceeded("template " + t.name + " has " + std::to_string(count) + " p-map tables");
    std::vector<CatalogEntry> group;
    Vector digits(zdim * dim, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Vector> pmap;
      for (std::size_t i = 0; i < dim; ++i) {
        Vector v = (*cands)[i].particular;
        for (std::size_t k = 0; k < zdim; ++k) axpy(f, digits[i * zdim + k], (*cands)[i].center_basis[k], v);
        pmap.push_back(std::move(v));
      }
      auto L = RestrictedLieAlgebra::from_upper(p, dim, t.brackets, std::move(pmap), t.labels);
      if (!is_nilpotent(L)) throw CertificationError("nilpotent template produced a non-nilpotent algebra");
      std::string name = entry_name(t.name, L);
      group.push_back({std::move(name), std::move(L), {}, "restricted structure on the " + t.name + " template"});
      for (auto& d : digits) {
        if (++d < p) break;
        d = 0;
      }
    }
    std::sort(group.begin(), group.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.algebra.table_bytes() < b.algebra.table_bytes(); });
    if (opts.dedup) {
      std::map<std::vector<std::uint8_t>, std::size_t> index;
      for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i].algebra.table_bytes(), i);
      std::vector<bool> seen(group.size(), false);
      const auto gl = general_linear_group(p, dim);
      std::vector<std::vector<Vector>> inverses;
      inverses.reserve(gl.size());
      for (const auto& g : gl) inverses.push_back(columns_of(inverse(g)));
      std::vector<CatalogEntry> reps;
      for (std::size_t i = 0; i < group.size(); ++i) {
        if (seen[i]) continue;
        const auto& L = group[i].algebra;
        const auto table = bracket_table(L);
        const Fingerprint fp = fingerprint(L);
        std::int64_t size = 0;
        for (std::size_t gi = 0; gi < gl.size(); ++gi) {
          if (transformed_brackets(L, gl[gi], inverses[gi]) != table) continue;
          std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(dim)};
          for (const auto& v : table) bytes.insert(bytes.end(), v.begin(), v.end());
          for (std::size_t k = 0; k < dim; ++k) {
            const Vector img = gl[gi].apply(L.ppow(inverses[gi][k]));
            bytes.insert(bytes.end(), img.begin(), img.end());
          }
          auto it = index.find(bytes);
          if (it == index.end() || seen[it->second]) continue;
          seen[it->second] = true;
          ++size;
          if (!(fingerprint(group[it->second].algebra) == fp))
            throw CertificationError("isomorphic entries with different fingerprints");
        }
        CatalogEntry rep = group[i];
        rep.expected["class_size"] = size;
        reps.push_back(std::move(rep));
      }
      group = std::move(reps);
    }
    for (auto& e : group) all.push_back(std::move(e));
  }
  std::sort(all.begin(), all.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.algebra.table_bytes() < b.algebra.table_bytes(); });
  return all;
}

}  // namespace rla
