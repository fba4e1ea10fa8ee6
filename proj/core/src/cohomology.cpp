#include "rla/cohomology.hpp"

#include <algorithm>

#include "rla/structure.hpp"

namespace rla {

namespace {

void require_p_ideal(const RestrictedLieAlgebra& L, const Subspace& S, const char* what) {
  if (S.ambient_dim() != L.dim() || !is_p_ideal(L, S))
    throw PreconditionError(std::string(what) + " is not a p-ideal");
}

}  // namespace

RestrictedModule RestrictedModule::create(RestrictedLieAlgebra acting, std::vector<FieldMatrix> action) {
  const std::size_t n = acting.dim();
  if (action.size() != n)
    throw ValidationError(ValidationKind::shape, {-1, -1, -1}, "module needs one matrix per basis element");
  const std::size_t m = n == 0 ? 0 : action.front().rows();
  for (const auto& a : action)
    if (a.rows() != m || a.cols() != m || a.p() != acting.p())
      throw ValidationError(ValidationKind::shape, {-1, -1, -1}, "module action matrices must be m x m over GF(p)");
  RestrictedModule M(std::move(acting), std::move(action), m);
  const auto& N = M.algebra_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldMatrix comm = M.action_[i] * M.action_[j] - M.action_[j] * M.action_[i];
      if (!(M.action(N.bracket_basis(i, j)) == comm))
        throw ValidationError(ValidationKind::representation, {int(i), int(j), -1},
                              "rho([x_i,x_j]) != [rho(x_i), rho(x_j)] at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!(M.action(N.pmap_basis(i)) == M.action_[i].power(N.p())))
      throw ValidationError(ValidationKind::module_restrictedness, {int(i), -1, -1},
                            "rho(x_i^[p]) != rho(x_i)^p at " + std::to_string(i));
  return M;
}

RestrictedModule RestrictedModule::adjoint(const RestrictedLieAlgebra& L) {
  std::vector<FieldMatrix> action;
  for (std::size_t i = 0; i < L.dim(); ++i) action.push_back(L.ad_basis(i));
  if (L.dim() == 0) return RestrictedModule(L, {}, 0);
  return create(L, std::move(action));
}

RestrictedModule RestrictedModule::trivial(const RestrictedLieAlgebra& L, std::size_t dim) {
  std::vector<FieldMatrix> action(L.dim(), FieldMatrix(L.p(), dim, dim));
  if (L.dim() == 0) return RestrictedModule(L, {}, dim);
  return create(L, std::move(action));
}

FieldMatrix RestrictedModule::action(const Vector& a) const {
  FieldMatrix m(algebra_.p(), dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) m = m + action_[i].scaled(a[i]);
  return m;
}

InducedModule induced_adjoint_module(const RestrictedLieAlgebra& L, const Subspace& ideal, const Subspace& W) {
  for (const auto& w : W.basis()) {
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (!W.contains(L.ad_basis(i).apply(w)))
        throw PreconditionError("induced module: carrier is not stable under ad(L)");
    for (const auto& v : ideal.basis())
      if (!is_zero(L.bracket(v, w))) throw PreconditionError("induced module: ideal does not centralize the carrier");
  }
  Quotient q = quotient(L, ideal);
  const auto wb = W.basis();
  std::vector<FieldMatrix> action;
  for (auto t : q.transversal) {
    FieldMatrix m(L.p(), W.dim(), W.dim());
    for (std::size_t r = 0; r < wb.size(); ++r) m.set_column(r, W.coordinates(L.ad_basis(t).apply(wb[r])));
    action.push_back(std::move(m));
  }
  RestrictedModule M = q.algebra.dim() == 0 ? RestrictedModule::trivial(q.algebra, W.dim())
                                            : RestrictedModule::create(q.algebra, std::move(action));
  return {std::move(q), W, std::move(M)};
}

bool is_restricted_cocycle(const RestrictedModule& M, const FieldMatrix& D) {
  const auto& N = M.algebra();
  const PrimeField& f = N.field();
  for (std::size_t i = 0; i < N.dim(); ++i)
    for (std::size_t j = i + 1; j < N.dim(); ++j) {
      const Vector lhs = D.apply(N.bracket_basis(i, j));
      const Vector rhs = sub(f, M.action_basis(i).apply(D.column(j)), M.action_basis(j).apply(D.column(i)));
      if (lhs != rhs) return false;
    }
  for (std::size_t i = 0; i < N.dim(); ++i)
    if (D.apply(N.pmap_basis(i)) != M.action_basis(i).power(N.p() - 1).apply(D.column(i))) return false;
  return true;
}

Subspace z1(const RestrictedModule& M) {
  const auto& N = M.algebra();
  const std::size_t n = N.dim();
  const std::size_t m = M.dim();
  const PrimeField& f = N.field();
  auto u = [n](std::size_t r, std::size_t c) { return r * n + c; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector row(m * n, 0);
        for (std::size_t s = 0; s < n; ++s) row[u(k, s)] = f.add(row[u(k, s)], N.bracket_basis(i, j)[s]);
        for (std::size_t r = 0; r < m; ++r) {
          row[u(r, j)] = f.sub(row[u(r, j)], M.action_basis(i)(k, r));
          row[u(r, i)] = f.add(row[u(r, i)], M.action_basis(j)(k, r));
        }
        rows.push_back(std::move(row));
      }
  for (std::size_t i = 0; i < n; ++i) {
    const FieldMatrix rp = M.action_basis(i).power(N.p() - 1);
    for (std::size_t k = 0; k < m; ++k) {
      Vector row(m * n, 0);
      for (std::size_t s = 0; s < n; ++s) row[u(k, s)] = f.add(row[u(k, s)], N.pmap_basis(i)[s]);
      for (std::size_t r = 0; r < m; ++r) row[u(r, i)] = f.sub(row[u(r, i)], rp(k, r));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(N.p(), m * n);
  return kernel(FieldMatrix::from_rows(N.p(), m * n, rows));
}

Subspace b1(const RestrictedModule& M) {
  const auto& N = M.algebra();
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < M.dim(); ++k) {
    FieldMatrix c(N.p(), M.dim(), N.dim());
    for (std::size_t j = 0; j < N.dim(); ++j) c.set_column(j, M.action_basis(j).column(k));
    gens.push_back(c.flatten());
  }
  return Subspace::span(N.p(), M.dim() * N.dim(), gens);
}

std::size_t h1_dim(const RestrictedModule& M) {
  const Subspace z = z1(M);
  const Subspace b = b1(M);
  if (!z.contains(b)) throw CertificationError("coboundaries are not all cocycles");
  return z.dim() - b.dim();
}

Cochain Cochain::classify(const RestrictedModule& M, FieldMatrix matrix) {
  Cochain c{std::move(matrix)};
  c.is_cocycle = is_restricted_cocycle(M, c.matrix);
  c.is_coboundary = b1(M).contains(c.matrix.flatten());
  return c;
}

Subspace invariants(const RestrictedModule& M) {
  const auto& N = M.algebra();
  if (N.dim() == 0 || M.dim() == 0) return Subspace::full(N.p(), M.dim());
  FieldMatrix stacked(N.p(), 0, M.dim());
  for (std::size_t i = 0; i < N.dim(); ++i) stacked = FieldMatrix::vstack(stacked, M.action_basis(i));
  return kernel(stacked);
}

namespace {

void require_unipotent(const RestrictedLieAlgebra& N, const char* op) {
  if (!is_nilpotent(N) || !is_p_unipotent(N))
    throw PreconditionError(std::string(op) + ": acting algebra is not p-unipotent");
}

}  // namespace

Subspace socle_unipotent(const RestrictedModule& M) {
  require_unipotent(M.algebra(), "socle_unipotent");
  return invariants(M);
}

Freeness is_free_over_unipotent(const RestrictedModule& M) {
  const auto& N = M.algebra();
  require_unipotent(N, "is_free_over_unipotent");
  std::vector<Vector> rad;
  for (std::size_t i = 0; i < N.dim(); ++i)
    for (std::size_t k = 0; k < M.dim(); ++k) rad.push_back(M.action_basis(i).column(k));
  const Subspace radical = Subspace::span(N.p(), M.dim(), rad);
  Freeness out;
  out.module_dim = M.dim();
  out.rank = M.dim() - radical.dim();
  out.enveloping_dim = checked_power(N.p(), N.dim());
  out.free = static_cast<std::uint64_t>(M.dim()) == static_cast<std::uint64_t>(out.rank) * out.enveloping_dim;
  if (out.free && invariants(M).dim() != out.rank)
    throw CertificationError("free module whose invariants do not match its rank");
  return out;
}

std::optional<Cochain> gamma_nontrivial(const RestrictedLieAlgebra& L, const Subspace& I, const Subspace& J) {
  require_p_ideal(L, I, "gamma: I");
  require_p_ideal(L, J, "gamma: J");
  const Subspace C = centralizer(L, I);
  if (!I.contains(J) || !C.contains(J)) throw PreconditionError("gamma: J is not inside I and Cent_L(I)");
  if (J.is_zero()) return std::nullopt;
  const InducedModule MJ = induced_adjoint_module(L, I, J);
  const InducedModule MC = induced_adjoint_module(L, I, C);
  const std::size_t d = MJ.quotient.algebra.dim();
  const Subspace coboundaries = b1(MC.module);
  const FieldMatrix embed = FieldMatrix::from_columns(L.p(), L.dim(), J.basis());
  for (const auto& flat : z1(MJ.module).basis()) {
    const FieldMatrix local = FieldMatrix::unflatten(L.p(), J.dim(), d, flat);
    const FieldMatrix global = embed * local;
    FieldMatrix in_c(L.p(), C.dim(), d);
    for (std::size_t j = 0; j < d; ++j) in_c.set_column(j, C.coordinates(global.column(j)));
    if (!coboundaries.contains(in_c.flatten())) return Cochain{global, true, false};
  }
  return std::nullopt;
}

Derivation lift_cocycle(const RestrictedLieAlgebra& L, const Subspace& I, const Subspace& J,
                        const FieldMatrix& cochain) {
  require_p_ideal(L, I, "lift: I");
  if (!I.contains(J)) throw PreconditionError("lift: J is not inside I");
  Quotient q = quotient(L, I);
  if (cochain.rows() != L.dim() || cochain.cols() != q.algebra.dim())
    throw PreconditionError("lift: cochain has the wrong shape");
  for (std::size_t j = 0; j < cochain.cols(); ++j)
    if (!J.contains(cochain.column(j))) throw PreconditionError("lift: cochain takes values outside J");
  auto d = Derivation::classify(L, cochain * q.projection);
  if (!d.flags().is_derivation || !d.flags().is_restricted || !d.flags().square_zero)
    throw CertificationError("lifted cocycle is not a square-zero restricted derivation");
  for (const auto& v : I.basis())
    if (!is_zero(d.matrix().apply(v))) throw CertificationError("lifted cocycle does not vanish on I");
  for (std::size_t j = 0; j < L.dim(); ++j)
    if (!J.contains(d.matrix().column(j))) throw CertificationError("lifted cocycle leaves J");
  return d;
}

std::optional<Subspace> find_p_complement(const RestrictedLieAlgebra& L, const Subspace& A, std::uint64_t budget) {
  const Subspace Z = center(L);
  if (!is_abelian_subspace(L, A) || !is_p_ideal(L, A))
    throw PreconditionError("find_p_complement: A is not an abelian p-ideal");
  if (!A.contains(Z)) throw PreconditionError("find_p_complement: A does not contain the center");
  const Subspace full = Subspace::full(L.p(), L.dim());
  auto certified = [&](const Subspace& H) {
    return (A + H) == full && A.intersect(H) == Z && is_p_subalgebra(L, H);
  };
  if (A.is_full()) {
    // only possible for abelian L, where Z = L
    if (certified(full)) return full;
    return std::nullopt;
  }
  const RestrictedLieAlgebra twisted = twist_pmap(L, A);
  for (const auto& C : complement_enumeration(A, budget)) {
    if (!is_p_subalgebra(twisted, C)) continue;
    Subspace H = Z + C;
    if (certified(H)) return H;
  }
  std::optional<Subspace> best;
  const int target = int(L.dim() - A.dim() + Z.dim());
  for_each_subspace(L.p(), L.dim(), target, budget, [&](const Subspace& H) {
    if (H.contains(Z) && certified(H) && (!best || H < *best)) best = H;
    return true;
  });
  return best;
}

}  // namespace rla
