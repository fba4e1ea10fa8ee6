#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rla/algebra.hpp"
#include "rla/derivations.hpp"
#include "rla/subspace.hpp"

namespace rla {

/// A restricted representation of N on GF(p)^m: one m x m matrix per basis
/// element of N, compatible with the bracket and with the p-map.
class RestrictedModule {
public:
  /// Throws ValidationError (representation / module_restrictedness) on failure.
  static RestrictedModule create(RestrictedLieAlgebra acting, std::vector<FieldMatrix> action);
  static RestrictedModule adjoint(const RestrictedLieAlgebra& L);
  static RestrictedModule trivial(const RestrictedLieAlgebra& L, std::size_t dim);

  const RestrictedLieAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  const FieldMatrix& action_basis(std::size_t i) const { return action_.at(i); }
  FieldMatrix action(const Vector& a) const;

private:
  RestrictedModule(RestrictedLieAlgebra acting, std::vector<FieldMatrix> action, std::size_t dim)
      : algebra_(std::move(acting)), action_(std::move(action)), dim_(dim) {}

  RestrictedLieAlgebra algebra_;
  std::vector<FieldMatrix> action_;
  std::size_t dim_;
};

/// W as a module for L/I under the adjoint action. W must be stable under
/// ad(L) and centralized by I; both are checked.
struct InducedModule {
  Quotient quotient;
  Subspace carrier;
  RestrictedModule module;
};
InducedModule induced_adjoint_module(const RestrictedLieAlgebra& L, const Subspace& ideal, const Subspace& carrier);

/// A linear map N -> M as an m x n matrix (column j is the image of x_j).
struct Cochain {
  FieldMatrix matrix;
  bool is_cocycle = false;
  bool is_coboundary = false;

  static Cochain classify(const RestrictedModule& M, FieldMatrix matrix);
};

bool is_restricted_cocycle(const RestrictedModule& M, const FieldMatrix& cochain);

/// Restricted 1-cocycles and 1-coboundaries as subspaces of GF(p)^(m*n),
/// row-major flattening of the m x n cochain matrix.
Subspace z1(const RestrictedModule& M);
Subspace b1(const RestrictedModule& M);
std::size_t h1_dim(const RestrictedModule& M);

Subspace invariants(const RestrictedModule& M);
/// Equals the invariants for p-unipotent acting algebras; throws otherwise.
Subspace socle_unipotent(const RestrictedModule& M);

struct Freeness {
  bool free = false;
  /// dim M / rad M, the minimal number of generators.
  std::size_t rank = 0;
  /// p^(dim N)
  std::uint64_t enveloping_dim = 0;
  std::size_t module_dim = 0;
};

/// Freeness over u(N) for p-unipotent N, where u(N) is local:
/// M is free iff dim M = rank * p^(dim N).
Freeness is_free_over_unipotent(const RestrictedModule& M);

/// A restricted cocycle of L/I with values in J (returned in L-coordinates,
/// an n x dim(L/I) matrix) whose image in H^1(L/I, Cent_L(I)) is nonzero.
/// Requires p-ideals I and J with J inside I and inside Cent_L(I).
std::optional<Cochain> gamma_nontrivial(const RestrictedLieAlgebra& L, const Subspace& ideal, const Subspace& values);

/// The composite L -> L/I -> J for a cochain of L/I in L-coordinates with
/// values in J. Throws PreconditionError for values outside J and
/// CertificationError unless the result is a restricted derivation with
/// D^2 = 0, I in its kernel and image in J.
Derivation lift_cocycle(const RestrictedLieAlgebra& L, const Subspace& ideal, const Subspace& values,
                        const FieldMatrix& cochain);

/// A p-subalgebra H with A + H = L and A & H = Z(L), for an abelian p-ideal A
/// containing Z(L). Complements of A that are p-subalgebras for the twisted
/// p-map are tried first, then every subspace of the right dimension.
/// nullopt is a complete refutation; BudgetExceeded otherwise.
std::optional<Subspace> find_p_complement(const RestrictedLieAlgebra& L, const Subspace& abelian_ideal,
                                          std::uint64_t budget = kDefaultSearchBudget);

}  // namespace rla
