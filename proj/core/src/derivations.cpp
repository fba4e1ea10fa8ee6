#include "rla/derivations.hpp"

#include "rla/cohomology.hpp"
#include "rla/structure.hpp"

namespace rla {

namespace {

std::size_t unknown(std::size_t n, std::size_t r, std::size_t c) { return r * n + c; }

// Rows of the linear system cutting out der(L) inside GF(p)^(n*n).
std::vector<Vector> leibniz_rows(const RestrictedLieAlgebra& L) {
  const std::size_t n = L.dim();
  const PrimeField& f = L.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& cij = L.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // D([x_i,x_j])_k - [D x_i, x_j]_k - [x_i, D x_j]_k = 0
        Vector row(n * n, 0);
        for (std::size_t m = 0; m < n; ++m) row[unknown(n, k, m)] = f.add(row[unknown(n, k, m)], cij[m]);
        for (std::size_t r = 0; r < n; ++r) {
          row[unknown(n, r, i)] = f.sub(row[unknown(n, r, i)], L.bracket_basis(r, j)[k]);
          row[unknown(n, r, j)] = f.sub(row[unknown(n, r, j)], L.bracket_basis(i, r)[k]);
        }
        rows.push_back(std::move(row));
      }
    }
  return rows;
}

std::vector<Vector> restrictedness_rows(const RestrictedLieAlgebra& L) {
  const std::size_t n = L.dim();
  const PrimeField& f = L.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const FieldMatrix adp = L.ad_basis(i).power(L.p() - 1);
    const Vector& xp = L.pmap_basis(i);
    for (std::size_t k = 0; k < n; ++k) {
      // D(x_i^[p])_k - ((ad x_i)^{p-1} D x_i)_k = 0
      Vector row(n * n, 0);
      for (std::size_t m = 0; m < n; ++m) row[unknown(n, k, m)] = f.add(row[unknown(n, k, m)], xp[m]);
      for (std::size_t r = 0; r < n; ++r) row[unknown(n, r, i)] = f.sub(row[unknown(n, r, i)], adp(k, r));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Subspace solution_space(const RestrictedLieAlgebra& L, const std::vector<Vector>& rows) {
  const std::size_t nn = L.dim() * L.dim();
  if (rows.empty()) return Subspace::full(L.p(), nn);
  return kernel(FieldMatrix::from_rows(L.p(), nn, rows));
}

FieldMatrix inner_columns(const RestrictedLieAlgebra& L) {
  FieldMatrix m(L.p(), L.dim() * L.dim(), L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) m.set_column(i, L.ad_basis(i).flatten());
  return m;
}

// Basis of der_p(L) split as (inner basis, complement of inner inside der_p).
struct OuterSplit {
  std::vector<Vector> inner_basis;
  std::vector<Vector> outer_basis;
};

OuterSplit split_outer(const RestrictedLieAlgebra& L) {
  OuterSplit s;
  const Subspace inn = inner(L);
  s.inner_basis = inn.basis();
  Subspace span = inn;
  for (const auto& v : der_p(L).basis()) {
    if (span.contains(v)) continue;
    s.outer_basis.push_back(v);
    span = span + Subspace::span(L.p(), v.size(), {v});
  }
  return s;
}

bool increment(Vector& digits, std::uint32_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

}  // namespace

const char* to_string(SearchRoute r) noexcept {
  switch (r) {
    case SearchRoute::none: return "none";
    case SearchRoute::central_complement: return "central-complement";
    case SearchRoute::central_image: return "central-image";
    case SearchRoute::cohomology_lift: return "cohomology-lift";
    case SearchRoute::exhaustive: return "exhaustive";
  }
  return "unknown";
}

FieldMatrix as_matrix(const RestrictedLieAlgebra& L, const Vector& flat) {
  return FieldMatrix::unflatten(L.p(), L.dim(), L.dim(), flat);
}

bool satisfies_leibniz(const RestrictedLieAlgebra& L, const FieldMatrix& D) {
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = D.apply(L.bracket_basis(i, j));
      const Vector rhs = add(L.field(), L.bracket(D.column(i), L.basis_vector(j)),
                             L.bracket(L.basis_vector(i), D.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

bool restricted_at(const RestrictedLieAlgebra& L, const FieldMatrix& D, const Vector& a) {
  return D.apply(L.ppow(a)) == L.ad(a).power(L.p() - 1).apply(D.apply(a));
}

bool restricted_on_basis(const RestrictedLieAlgebra& L, const FieldMatrix& D) {
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (D.apply(L.pmap_basis(i)) != L.ad_basis(i).power(L.p() - 1).apply(D.column(i))) return false;
  return true;
}

bool is_nilpotent_map(const FieldMatrix& D) { return D.power(D.rows()).is_zero(); }

Derivation Derivation::classify(const RestrictedLieAlgebra& L, FieldMatrix matrix) {
  if (matrix.rows() != L.dim() || matrix.cols() != L.dim() || matrix.p() != L.p())
    throw std::invalid_argument("derivation matrix has the wrong shape");
  DerivationFlags f;
  f.is_derivation = satisfies_leibniz(L, matrix);
  f.is_restricted = f.is_derivation && restricted_on_basis(L, matrix);
  auto w = rla::inner_witness(L, matrix);
  f.is_inner = w.has_value();
  f.square_zero = (matrix * matrix).is_zero();
  f.is_nilpotent = is_nilpotent_map(matrix);
  return Derivation(std::move(matrix), f, std::move(w));
}

Subspace der(const RestrictedLieAlgebra& L) { return solution_space(L, leibniz_rows(L)); }

Subspace der_p(const RestrictedLieAlgebra& L) {
  auto rows = leibniz_rows(L);
  auto extra = restrictedness_rows(L);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return solution_space(L, rows);
}

Subspace inner(const RestrictedLieAlgebra& L) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < L.dim(); ++i) gens.push_back(L.ad_basis(i).flatten());
  return Subspace::span(L.p(), L.dim() * L.dim(), gens);
}

std::optional<Vector> inner_witness(const RestrictedLieAlgebra& L, const FieldMatrix& D) {
  if (L.dim() == 0) return Vector{};
  return solve(inner_columns(L), D.flatten());
}

bool is_inner(const RestrictedLieAlgebra& L, const FieldMatrix& D) { return inner_witness(L, D).has_value(); }

std::size_t h1_adjoint_dim(const RestrictedLieAlgebra& L) {
  const Subspace dp = der_p(L);
  const Subspace inn = inner(L);
  if (!dp.contains(inn)) throw CertificationError("inner derivations are not all restricted");
  return dp.dim() - inn.dim();
}

bool outer_by_centralizer_criterion(const RestrictedLieAlgebra& L, const Subspace& I, const FieldMatrix& D) {
  if (!is_p_ideal(L, I)) throw PreconditionError("centralizer criterion: I is not a p-ideal");
  for (const auto& v : I.basis())
    if (!is_zero(D.apply(v))) throw PreconditionError("centralizer criterion: I is not in the kernel of D");
  const Subspace C = centralizer(L, I);
  std::vector<Vector> image;
  for (std::size_t j = 0; j < L.dim(); ++j) image.push_back(D.column(j));
  const Subspace im = Subspace::span(L.p(), L.dim(), image);
  if (!C.contains(im)) throw PreconditionError("centralizer criterion: image of D is not in Cent_L(I)");
  const Subspace LC = bracket_space(L, Subspace::full(L.p(), L.dim()), C);
  return !LC.contains(im);
}

Derivation construct_case_derivation(const RestrictedLieAlgebra& L, const Subspace& I, const Vector& x,
                                     const Vector& z) {
  if (I.codim() != 1 || !is_p_ideal(L, I)) throw PreconditionError("case derivation: I is not a codim-1 p-ideal");
  if (I.contains(x)) throw PreconditionError("case derivation: x lies in I");
  const Subspace ZI = I.intersect(centralizer(L, I));
  if (!ZI.contains(z)) throw PreconditionError("case derivation: z is not in the center of I");
  // functional vanishing on I with value 1 at x
  Vector fn = I.annihilator().basis().front();
  const PrimeField& f = L.field();
  Coord at_x = 0;
  for (std::size_t k = 0; k < x.size(); ++k) at_x = f.add(at_x, f.mul(fn[k], x[k]));
  fn = scale(f, f.inv(at_x), fn);
  FieldMatrix D(L.p(), L.dim(), L.dim());
  for (std::size_t r = 0; r < L.dim(); ++r)
    for (std::size_t c = 0; c < L.dim(); ++c) D(r, c) = f.mul(z[r], fn[c]);
  auto d = Derivation::classify(L, std::move(D));
  if (!d.flags().is_derivation) throw CertificationError("case derivation: Leibniz rule fails");
  if (!d.flags().is_restricted) throw CertificationError("case derivation: not restricted");
  return d;
}

std::uint64_t for_each_outer_restricted(const RestrictedLieAlgebra& L, std::uint64_t budget,
                                        const std::function<bool(const FieldMatrix&)>& visit) {
  const OuterSplit s = split_outer(L);
  if (s.outer_basis.empty()) return 0;
  const PrimeField& f = L.field();
  const std::size_t nn = L.dim() * L.dim();
  std::uint64_t examined = 0;
  Vector outer_coeff(s.outer_basis.size(), 0);
  while (increment(outer_coeff, L.p())) {
    Vector rep(nn, 0);
    for (std::size_t k = 0; k < outer_coeff.size(); ++k) axpy(f, outer_coeff[k], s.outer_basis[k], rep);
    Vector inner_coeff(s.inner_basis.size(), 0);
    do {
      if (++examined > budget)
        throw BudgetExceeded("restricted derivation enumeration exceeded budget of " + std::to_string(budget));
      Vector flat = rep;
      for (std::size_t k = 0; k < inner_coeff.size(); ++k) axpy(f, inner_coeff[k], s.inner_basis[k], flat);
      if (visit(as_matrix(L, flat))) return examined;
    } while (increment(inner_coeff, L.p()));
  }
  return examined;
}

WitnessSearch find_square_zero_outer(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  if (!is_nilpotent(L)) throw PreconditionError("find_square_zero_outer: algebra is not nilpotent");
  WitnessSearch result;
  const bool toral = maximal_torus(L).is_full();
  if (!toral && L.dim() > 1) {
    const Subspace ZL = center(L);
    for (const auto& I : codim1_max_p_ideals(L)) {
      const Subspace ZI = I.intersect(centralizer(L, I));
      if (!I.contains(ZL)) {
        Vector x;
        for (const auto& v : ZL.basis())
          if (!I.contains(v)) {
            x = v;
            break;
          }
        for (const auto& z : ZI.basis()) {
          try {
            auto d = construct_case_derivation(L, I, x, z);
            if (d.is_square_zero_outer()) {
              result.witness = std::move(d);
              result.route = SearchRoute::central_complement;
              return result;
            }
          } catch (const CertificationError&) {
          }
        }
      }
      if (centralizer(L, I) == ZL && !ZL.is_zero()) {
        Vector x;
        for (std::size_t i = 0; i < L.dim(); ++i)
          if (!I.contains(L.basis_vector(i))) {
            x = L.basis_vector(i);
            break;
          }
        for (const auto& z : ZL.basis()) {
          try {
            auto d = construct_case_derivation(L, I, x, z);
            if (d.is_square_zero_outer() && outer_by_centralizer_criterion(L, I, d.matrix())) {
              result.witness = std::move(d);
              result.route = SearchRoute::central_image;
              return result;
            }
          } catch (const CertificationError&) {
          }
        }
      }
    }
    if (!L.is_abelian()) {
      const Subspace A = maximal_abelian_p_ideal(L);
      if (auto cochain = gamma_nontrivial(L, A, A)) {
        auto d = lift_cocycle(L, A, A, cochain->matrix);
        if (d.is_square_zero_outer()) {
          result.witness = std::move(d);
          result.route = SearchRoute::cohomology_lift;
          return result;
        }
      }
    }
  }
  result.examined = for_each_outer_restricted(L, budget, [&](const FieldMatrix& D) {
    if (!(D * D).is_zero()) return false;
    auto d = Derivation::classify(L, D);
    if (!d.is_square_zero_outer()) throw CertificationError("enumerated outer derivation failed certification");
    result.witness = std::move(d);
    result.route = SearchRoute::exhaustive;
    return true;
  });
  return result;
}

std::optional<Derivation> find_nilpotent_outer(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  std::optional<Derivation> found;
  for_each_outer_restricted(L, budget, [&](const FieldMatrix& D) {
    if (!is_nilpotent_map(D)) return false;
    found = Derivation::classify(L, D);
    return true;
  });
  if (found && (found->flags().is_inner || !found->flags().is_restricted))
    throw CertificationError("nilpotent outer witness failed certification");
  return found;
}

bool nilpotent_outer_exists(const RestrictedLieAlgebra& L, std::uint64_t budget) {
  return find_nilpotent_outer(L, budget).has_value();
}

Derivation explicit_h1_char2_outer(const RestrictedLieAlgebra& L) {
  if (L.p() != 2 || L.dim() != 3 || L.is_abelian() || !is_nilpotent(L))
    throw PreconditionError("explicit outer derivation needs a 3-dim non-abelian nilpotent algebra over GF(2)");
  const Subspace Z = center(L);
  for (std::size_t i = 0; i < L.dim(); ++i)
    if (!Z.contains(L.pmap_basis(i))) throw PreconditionError("explicit outer derivation: p-map is not central");
  // D = identity on the transversal of Z, zero on Z
  std::vector<Vector> domain = Z.basis();
  std::vector<Vector> images(domain.size(), L.zero());
  for (auto t : Z.non_pivots()) {
    domain.push_back(L.basis_vector(t));
    images.push_back(L.basis_vector(t));
  }
  const FieldMatrix B = FieldMatrix::from_columns(L.p(), L.dim(), domain);
  FieldMatrix D(L.p(), L.dim(), L.dim());
  const FieldMatrix img = FieldMatrix::from_columns(L.p(), L.dim(), images);
  for (std::size_t j = 0; j < L.dim(); ++j) D.set_column(j, img.apply(*solve(B, L.basis_vector(j))));
  auto d = Derivation::classify(L, std::move(D));
  if (!d.flags().is_derivation || !d.flags().is_restricted || d.flags().is_inner)
    throw CertificationError("explicit outer derivation failed certification");
  return d;
}

}  // namespace rla
