#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rla/matrix.hpp"

namespace rla {

/// A subspace of GF(p)^n held by its canonical RREF basis, so equality of
/// subspaces is equality of basis matrices.
class Subspace {
public:
  /// The zero subspace of GF(p)^ambient.
  Subspace(std::uint32_t p, std::size_t ambient);
  /// Span of the given vectors; they need not be independent.
  static Subspace span(std::uint32_t p, std::size_t ambient, const std::vector<Vector>& vectors);
  /// Row space of m.
  static Subspace row_space(const FieldMatrix& m);
  static Subspace full(std::uint32_t p, std::size_t ambient);

  std::uint32_t p() const noexcept { return basis_.p(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t codim() const noexcept { return ambient_dim() - dim(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const FieldMatrix& basis_matrix() const noexcept { return basis_; }
  std::vector<Vector> basis() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Ascending coordinates that are not pivots; the standard transversal of any quotient.
  std::vector<std::size_t> non_pivots() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;
  /// v minus its component along the basis, i.e. the normal form of v + S.
  Vector reduce(const Vector& v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Vectors w with w . s = 0 for every s in the subspace.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Lexicographic order on (dim, basis bytes); used for deterministic enumeration.
  friend bool operator<(const Subspace& a, const Subspace& b);

private:
  explicit Subspace(RrefResult r);
  void require_ambient(std::size_t n) const;

  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All complements U of s (U + s = ambient, U & s = 0), sorted by canonical form.
/// Throws BudgetExceeded when p^(codim * dim) exceeds the budget.
std::vector<Subspace> complement_enumeration(const Subspace& s, std::uint64_t budget);

/// Visits every subspace of GF(p)^n of dimension k (all k when k < 0) in a
/// deterministic order: by dimension, then pivot set, then free entries.
/// The visitor returns false to stop early. Throws BudgetExceeded beyond budget.
void for_each_subspace(std::uint32_t p, std::size_t n, int k, std::uint64_t budget,
                       const std::function<bool(const Subspace&)>& visit);

/// Saturating p^e.
std::uint64_t checked_power(std::uint64_t p, std::uint64_t e);

}  // namespace rla
