#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rla/field.hpp"

namespace rla {

/// Dense row-major matrix over GF(p).
class FieldMatrix {
public:
  FieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  /// Builds from row vectors; entries are reduced mod p. Every row needs `cols` entries.
  static FieldMatrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<Vector>& rows);
  static FieldMatrix from_columns(std::uint32_t p, std::size_t rows, const std::vector<Vector>& cols);
  static FieldMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t p() const noexcept { return field_.p(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coord operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Coord& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) { data_.at(r * cols_ + c) = field_.reduce(v); }

  std::span<const Coord> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  const Vector& data() const noexcept { return data_; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  Vector apply(const Vector& v) const;
  FieldMatrix scaled(Coord s) const;
  FieldMatrix transposed() const;
  FieldMatrix power(std::uint64_t e) const;

  bool is_zero() const noexcept;
  /// Row-major flattening; the coordinate vector used for matrix spaces.
  Vector flatten() const { return data_; }
  static FieldMatrix unflatten(std::uint32_t p, std::size_t rows, std::size_t cols, const Vector& v);

  /// Stacks the rows of `a` on top of the rows of `b`.
  static FieldMatrix vstack(const FieldMatrix& a, const FieldMatrix& b);

  std::string to_string() const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
    return a.p() == b.p() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector data_;
};

struct RrefResult {
  FieldMatrix form;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form. Pivots are taken leftmost column first,
/// first nonzero row below the current one; the result is independent of row order
/// up to the row space.
RrefResult rref(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);

/// Particular solution of m x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const FieldMatrix& m, const Vector& b);

class Subspace;
Subspace kernel(const FieldMatrix& m);

}  // namespace rla
