#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "rla/algebra.hpp"
#include "rla/matrix.hpp"
#include "rla/subspace.hpp"

namespace rla {

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

struct DerivationFlags {
  bool is_derivation = false;
  bool is_restricted = false;
  bool is_inner = false;
  bool is_nilpotent = false;
  bool square_zero = false;
};

/// A linear map L -> L (column j is the image of x_j) together with its
/// classification, computed directly from the algebra's tables.
class Derivation {
public:
  /// Classifies `matrix`; does not require it to be a derivation.
  static Derivation classify(const RestrictedLieAlgebra& L, FieldMatrix matrix);

  const FieldMatrix& matrix() const noexcept { return matrix_; }
  const DerivationFlags& flags() const noexcept { return flags_; }
  /// Some a with matrix = ad(a), when inner.
  const std::optional<Vector>& inner_witness() const noexcept { return witness_; }

  /// Restricted, square-zero, derivation and not inner.
  bool is_square_zero_outer() const noexcept {
    return flags_.is_derivation && flags_.is_restricted && flags_.square_zero && !flags_.is_inner;
  }

private:
  Derivation(FieldMatrix m, DerivationFlags f, std::optional<Vector> w)
      : matrix_(std::move(m)), flags_(f), witness_(std::move(w)) {}

  FieldMatrix matrix_;
  DerivationFlags flags_;
  std::optional<Vector> witness_;
};

// Matrix spaces are subspaces of GF(p)^(n*n) via row-major flattening.
FieldMatrix as_matrix(const RestrictedLieAlgebra& L, const Vector& flat);

bool satisfies_leibniz(const RestrictedLieAlgebra& L, const FieldMatrix& D);
/// D(x_i^[p]) = (ad x_i)^{p-1} D(x_i) for every basis element.
bool restricted_on_basis(const RestrictedLieAlgebra& L, const FieldMatrix& D);
/// D(a^[p]) = (ad a)^{p-1} D(a) for one element a.
bool restricted_at(const RestrictedLieAlgebra& L, const FieldMatrix& D, const Vector& a);
bool is_nilpotent_map(const FieldMatrix& D);

Subspace der(const RestrictedLieAlgebra& L);
Subspace der_p(const RestrictedLieAlgebra& L);
Subspace inner(const RestrictedLieAlgebra& L);
/// a with D = ad(a) (free coordinates zero), or nullopt.
std::optional<Vector> inner_witness(const RestrictedLieAlgebra& L, const FieldMatrix& D);
bool is_inner(const RestrictedLieAlgebra& L, const FieldMatrix& D);
std::size_t h1_adjoint_dim(const RestrictedLieAlgebra& L);

/// Sufficient test for D not being inner, for D killing the p-ideal I and
/// mapping into its centralizer: image(D) outside [L, Cent_L(I)]. False means
/// inconclusive. Throws PreconditionError naming the violated hypothesis.
bool outer_by_centralizer_criterion(const RestrictedLieAlgebra& L, const Subspace& ideal, const FieldMatrix& D);

/// The map vanishing on the codimension-one p-ideal I and sending x to z.
/// Requires L = span(x) + I and z in the center of I; throws CertificationError
/// if the result is not a restricted derivation.
Derivation construct_case_derivation(const RestrictedLieAlgebra& L, const Subspace& ideal, const Vector& x,
                                     const Vector& z);

enum class SearchRoute {
  none,
  central_complement,  // x central outside a maximal p-ideal I, D(x) in Z(I)
  central_image,       // Cent_L(I) = Z(L), D(x) in Z(L)
  cohomology_lift,     // cocycle of L/A in A, A maximal abelian p-ideal
  exhaustive,
};
const char* to_string(SearchRoute r) noexcept;

struct WitnessSearch {
  std::optional<Derivation> witness;
  SearchRoute route = SearchRoute::none;
  /// Matrices inspected by the exhaustive stage (0 when a constructive route won).
  std::uint64_t examined = 0;
};

/// Outer restricted derivation with D^2 = 0, tried along the constructive routes
/// first and then by complete enumeration of der_p(L) modulo inner(L).
/// Absent means the enumeration finished without a witness.
/// Throws BudgetExceeded when the enumeration needs more than `budget` matrices.
WitnessSearch find_square_zero_outer(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultSearchBudget);

/// A nilpotent restricted derivation that is not inner, by complete enumeration.
std::optional<Derivation> find_nilpotent_outer(const RestrictedLieAlgebra& L,
                                               std::uint64_t budget = kDefaultSearchBudget);
bool nilpotent_outer_exists(const RestrictedLieAlgebra& L, std::uint64_t budget = kDefaultSearchBudget);

/// Visits every element of der_p(L) outside inner(L), grouped by outer coset.
/// Stops when the visitor returns true; returns the number visited.
std::uint64_t for_each_outer_restricted(const RestrictedLieAlgebra& L, std::uint64_t budget,
                                        const std::function<bool(const FieldMatrix&)>& visit);

/// For three-dimensional non-abelian nilpotent L over GF(2): identity modulo
/// the center, zero on the center. Certified restricted and outer.
Derivation explicit_h1_char2_outer(const RestrictedLieAlgebra& L);

}  // namespace rla
