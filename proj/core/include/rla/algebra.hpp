#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rla/errors.hpp"
#include "rla/matrix.hpp"
#include "rla/subspace.hpp"

namespace rla {

/// A finite-dimensional restricted Lie algebra over GF(p), given by structure
/// constants on a basis x_0..x_{n-1} and the p-map values on that basis.
///
/// Elements are coordinate vectors of length dim(). Construction validates
/// antisymmetry, the Jacobi identity on every basis triple and
/// ad(x_i^[p]) = (ad x_i)^p for every basis element; the p-map of an arbitrary
/// element is then the unique extension given by the Jacobson sum rule.
class RestrictedLieAlgebra {
public:
  /// `brackets[i * dim + j]` holds the coordinates of [x_i, x_j]; `pmap[i]`
  /// those of x_i^[p]. Throws ValidationError on any violated axiom.
  static RestrictedLieAlgebra create(std::uint32_t p, std::size_t dim, std::vector<Vector> brackets,
                                     std::vector<Vector> pmap, std::vector<std::string> labels = {});

  /// Convenience builder: brackets listed for i < j only, the rest zero.
  struct BracketEntry {
    std::size_t i;
    std::size_t j;
    Vector value;
  };
  static RestrictedLieAlgebra from_upper(std::uint32_t p, std::size_t dim, const std::vector<BracketEntry>& upper,
                                         std::vector<Vector> pmap, std::vector<std::string> labels = {});

  std::uint32_t p() const noexcept { return field_.p(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  const Vector& bracket_basis(std::size_t i, std::size_t j) const { return brackets_.at(i * dim_ + j); }
  const Vector& pmap_basis(std::size_t i) const { return pmap_.at(i); }
  const std::vector<Vector>& pmap_table() const noexcept { return pmap_; }
  const FieldMatrix& ad_basis(std::size_t i) const { return ad_.at(i); }

  Vector bracket(const Vector& a, const Vector& b) const;
  /// The matrix of v -> [a, v]; column j is [a, x_j].
  FieldMatrix ad(const Vector& a) const;
  /// p-power of an arbitrary element.
  Vector ppow(const Vector& a) const;
  /// ppow iterated k times.
  Vector ppow_iter(const Vector& a, std::size_t k) const;

  Vector basis_vector(std::size_t i) const { return unit_vector(dim_, i); }
  Vector zero() const { return zero_vector(dim_); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// labels()[i] when present, otherwise "x<i>".
  std::string label(std::size_t i) const;

  bool is_abelian() const noexcept;

  /// Identical structure constants and p-map tables.
  friend bool operator==(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
    return a.p() == b.p() && a.dim_ == b.dim_ && a.brackets_ == b.brackets_ && a.pmap_ == b.pmap_;
  }
  /// Byte serialization of the tables, used for sorting and hashing.
  std::vector<std::uint8_t> table_bytes() const;

private:
  RestrictedLieAlgebra(std::uint32_t p, std::size_t dim);
  void validate() const;

  PrimeField field_;
  std::size_t dim_;
  std::vector<Vector> brackets_;
  std::vector<Vector> pmap_;
  std::vector<FieldMatrix> ad_;
  std::vector<std::string> labels_;
};

/// Extends a p-map given on an arbitrary basis of `algebra` (as `basis[i] -> images[i]`)
/// to the element `a`, via the Jacobson sum rule. Only the bracket of `algebra` is used.
Vector extend_pmap(const RestrictedLieAlgebra& algebra, const FieldMatrix& basis_columns,
                   const std::vector<Vector>& images, const Vector& a);

/// The correction (u+v)^[p] - u^[p] - v^[p] = sum_k s_k(u, v).
Vector jacobson_correction(const RestrictedLieAlgebra& algebra, const Vector& u, const Vector& v);

struct Quotient {
  RestrictedLieAlgebra algebra;
  /// (n - dim I) x n matrix of the canonical projection.
  FieldMatrix projection;
  /// Coordinates of L whose images form the quotient basis, ascending.
  std::vector<std::size_t> transversal;
};

/// L/I with the induced bracket and p-map on the transversal of non-pivot
/// coordinates of I. Throws PreconditionError unless I is a p-ideal.
Quotient quotient(const RestrictedLieAlgebra& L, const Subspace& ideal);

RestrictedLieAlgebra direct_product(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b);

/// Replaces the p-map by the one that vanishes on the RREF basis of the abelian
/// p-ideal A and agrees with the old one on the transversal basis vectors.
RestrictedLieAlgebra twist_pmap(const RestrictedLieAlgebra& L, const Subspace& abelian_ideal);

}  // namespace rla
