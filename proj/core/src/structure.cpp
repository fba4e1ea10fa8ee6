#include "rla/structure.hpp"

namespace rla {

namespace {

Subspace zero_of(const RestrictedLieAlgebra& L) { return Subspace(L.p(), L.dim()); }

void require_nilpotent(const RestrictedLieAlgebra& L, const char* op) {
  if (!is_nilpotent(L)) throw PreconditionError(std::string(op) + ": algebra is not nilpotent");
}

// Lifts coordinates in a subspace basis back to ambient coordinates.
Vector lift(const PrimeField& f, const std::vector<Vector>& basis, const Vector& coords, std::size_t n) {
  Vector v(n, 0);
  for (std::size_t r = 0; r < coords.size(); ++r) axpy(f, coords[r], basis[r], v);
  return v;
}

}  // namespace

Subspace centralizer(const RestrictedLieAlgebra& L, const Subspace& S) {
  if (S.is_zero()) return Subspace::full(L.p(), L.dim());
  FieldMatrix stacked(L.p(), 0, L.dim());
  for (const auto& s : S.basis()) stacked = FieldMatrix::vstack(stacked, L.ad(s));
  return kernel(stacked);
}

Subspace center(const RestrictedLieAlgebra& L) {
  if (L.dim() == 0) return zero_of(L);
  FieldMatrix stacked(L.p(), 0, L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) stacked = FieldMatrix::vstack(stacked, L.ad_basis(i));
  return kernel(stacked);
}

Subspace normalizer(const RestrictedLieAlgebra& L, const Subspace& S) {
  const auto ann = S.annihilator().basis();
  std::vector<Vector> rows;
  for (const auto& s : S.basis()) {
    const FieldMatrix ads = L.ad(s);
    for (const auto& w : ann) rows.push_back(ads.transposed().apply(w));
  }
  if (rows.empty()) return Subspace::full(L.p(), L.dim());
  return kernel(FieldMatrix::from_rows(L.p(), L.dim(), rows));
}

Subspace bracket_space(const RestrictedLieAlgebra& L, const Subspace& S, const Subspace& T) {
  std::vector<Vector> gens;
  const auto tb = T.basis();
  for (const auto& a : S.basis())
    for (const auto& b : tb) gens.push_back(L.bracket(a, b));
  return Subspace::span(L.p(), L.dim(), gens);
}

Subspace derived(const RestrictedLieAlgebra& L) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) gens.push_back(L.bracket_basis(i, j));
  return Subspace::span(L.p(), L.dim(), gens);
}

std::vector<Subspace> lower_central_series(const RestrictedLieAlgebra& L) {
  const Subspace full = Subspace::full(L.p(), L.dim());
  std::vector<Subspace> series{full};
  while (!series.back().is_zero()) {
    Subspace next = bracket_space(L, full, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const RestrictedLieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

std::size_t nilpotency_class(const RestrictedLieAlgebra& L) { return lower_central_series(L).size() - 1; }

bool is_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  const auto b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!S.contains(L.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const RestrictedLieAlgebra& L, const Subspace& S) {
  for (const auto& s : S.basis())
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (!S.contains(L.ad_basis(i).apply(s))) return false;
  return true;
}

bool is_p_closed(const RestrictedLieAlgebra& L, const Subspace& S) {
  for (const auto& s : S.basis())
    if (!S.contains(L.ppow(s))) return false;
  return true;
}

bool is_p_subalgebra(const RestrictedLieAlgebra& L, const Subspace& S) {
  return is_subalgebra(L, S) && is_p_closed(L, S);
}

bool is_p_ideal(const RestrictedLieAlgebra& L, const Subspace& S) { return is_ideal(L, S) && is_p_closed(L, S); }

bool is_abelian_subspace(const RestrictedLieAlgebra& L, const Subspace& S) {
  const auto b = S.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!is_zero(L.bracket(b[i], b[j]))) return false;
  return true;
}

Subspace p_closure(const RestrictedLieAlgebra& L, const Subspace& S) {
  Subspace current = S;
  while (true) {
    std::vector<Vector> gens = current.basis();
    const auto b = current.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) gens.push_back(L.bracket(b[i], b[j]));
      gens.push_back(L.ppow(b[i]));
    }
    Subspace next = Subspace::span(L.p(), L.dim(), gens);
    if (next == current) return current;
    current = std::move(next);
  }
}

FieldMatrix center_pmap_matrix(const RestrictedLieAlgebra& L) {
  const Subspace Z = center(L);
  FieldMatrix P(L.p(), Z.dim(), Z.dim());
  const auto zb = Z.basis();
  for (std::size_t r = 0; r < zb.size(); ++r) P.set_column(r, Z.coordinates(L.ppow(zb[r])));
  return P;
}

Subspace maximal_torus(const RestrictedLieAlgebra& L) {
  require_nilpotent(L, "maximal_torus");
  const Subspace Z = center(L);
  if (Z.is_zero()) return zero_of(L);
  const FieldMatrix stable = center_pmap_matrix(L).power(Z.dim());
  const auto zb = Z.basis();
  std::vector<Vector> gens;
  for (std::size_t c = 0; c < stable.cols(); ++c) gens.push_back(lift(L.field(), zb, stable.column(c), L.dim()));
  return Subspace::span(L.p(), L.dim(), gens);
}

bool is_torus(const RestrictedLieAlgebra& L) { return L.is_abelian() && maximal_torus(L).is_full(); }

bool is_p_unipotent(const RestrictedLieAlgebra& L) { return maximal_torus(L).is_zero(); }

Subspace maximal_abelian_p_ideal(const RestrictedLieAlgebra& L) {
  require_nilpotent(L, "maximal_abelian_p_ideal");
  Subspace A = center(L);
  const Subspace full = Subspace::full(L.p(), L.dim());
  while (true) {
    const Subspace C = centralizer(L, A);
    if (C == A) return A;
    // x in C with [x, L] inside A, i.e. x + A central in L/A
    std::vector<Vector> rows;
    const auto ann = A.annihilator().basis();
    for (std::size_t i = 0; i < L.dim(); ++i) {
      const FieldMatrix adt = L.ad_basis(i).transposed();
      for (const auto& w : ann) rows.push_back(adt.apply(w));
    }
    Subspace W = C;
    if (!rows.empty()) W = W.intersect(kernel(FieldMatrix::from_rows(L.p(), L.dim(), rows)));
    // highest pivot first
    const auto wb = W.basis();
    const Vector* pick = nullptr;
    for (auto it = wb.rbegin(); it != wb.rend(); ++it)
      if (!A.contains(*it)) {
        pick = &*it;
        break;
      }
    if (pick == nullptr)
      throw CertificationError("maximal_abelian_p_ideal: centralizer grows but no central coset representative");
    Subspace next = p_closure(L, A + Subspace::span(L.p(), L.dim(), {*pick}));
    if (!is_abelian_subspace(L, next) || !is_p_ideal(L, next))
      throw CertificationError("maximal_abelian_p_ideal: extension is not an abelian p-ideal");
    A = std::move(next);
    if (A == full) return A;
  }
}

Subspace max_p_ideal_floor(const RestrictedLieAlgebra& L) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < L.dim(); ++i) gens.push_back(L.pmap_basis(i));
  return derived(L) + maximal_torus(L) + Subspace::span(L.p(), L.dim(), gens);
}

std::vector<Subspace> codim1_max_p_ideals(const RestrictedLieAlgebra& L) {
  require_nilpotent(L, "codim1_max_p_ideals");
  if (maximal_torus(L).is_full()) throw PreconditionError("codim1_max_p_ideals: algebra is a torus");
  const Subspace floor = max_p_ideal_floor(L);
  if (floor.is_full()) throw CertificationError("codim1_max_p_ideals: floor spans the whole algebra");
  const auto functionals = floor.annihilator().basis();
  const std::size_t k = functionals.size();
  const PrimeField& f = L.field();
  std::vector<Subspace> out;
  // normalized coefficient vectors: the first nonzero entry is 1
  for (std::size_t lead = 0; lead < k; ++lead) {
    const std::size_t tail = k - lead - 1;
    const std::uint64_t count = checked_power(L.p(), tail);
    Vector coeff(tail, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vector fn = functionals[lead];
      for (std::size_t t = 0; t < tail; ++t) axpy(f, coeff[t], functionals[lead + 1 + t], fn);
      out.push_back(Subspace::span(L.p(), L.dim(), {fn}).annihilator());
      for (auto& e : coeff) {
        if (++e < L.p()) break;
        e = 0;
      }
    }
  }
  return out;
}

}  // namespace rla
