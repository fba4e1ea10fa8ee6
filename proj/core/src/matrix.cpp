#include "rla/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "rla/subspace.hpp"

namespace rla {

FieldMatrix::FieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::from_rows(std::uint32_t p, std::size_t cols, const std::vector<Vector>& rows) {
  FieldMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.reduce(rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::from_columns(std::uint32_t p, std::size_t rows, const std::vector<Vector>& cols) {
  FieldMatrix m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

FieldMatrix FieldMatrix::identity(std::uint32_t p, std::size_t n) {
  FieldMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector FieldMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector FieldMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void FieldMatrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = field_.reduce(v[r]);
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_ || p() != o.p()) throw std::invalid_argument("matrix product shape mismatch");
  FieldMatrix out(p(), rows_, o.cols_);
  const std::uint32_t q = p();
  std::vector<std::uint32_t> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0U);
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] = (acc[j] + a * o(k, j)) % q;
    }
    for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = static_cast<Coord>(acc[j]);
  }
  return out;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  FieldMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  FieldMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], o.data_[i]);
  return out;
}

Vector FieldMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(rows_, 0);
  const std::uint32_t q = p();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint32_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc += std::uint32_t((*this)(i, k)) * v[k] % q;
    out[i] = static_cast<Coord>(acc % q);
  }
  return out;
}

FieldMatrix FieldMatrix::scaled(Coord s) const {
  FieldMatrix out(*this);
  for (auto& e : out.data_) e = field_.mul(s, e);
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(p(), cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

FieldMatrix FieldMatrix::power(std::uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
  FieldMatrix result = identity(p(), rows_);
  FieldMatrix base(*this);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

bool FieldMatrix::is_zero() const noexcept { return rla::is_zero(data_); }

FieldMatrix FieldMatrix::unflatten(std::uint32_t p, std::size_t rows, std::size_t cols, const Vector& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten length mismatch");
  FieldMatrix m(p, rows, cols);
  m.data_ = v;
  return m;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.cols_ || a.p() != b.p()) throw std::invalid_argument("vstack shape mismatch");
  FieldMatrix out(a.p(), a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return out;
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << int((*this)(r, c));
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const FieldMatrix& m) {
  FieldMatrix a(m);
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t r = lead_row;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != lead_row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(lead_row, j));
    const Coord inv = f.inv(a(lead_row, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) = f.mul(inv, a(lead_row, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead_row || a(i, c) == 0) continue;
      const Coord factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(lead_row, j)));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

std::optional<Vector> solve(const FieldMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  FieldMatrix aug(m.p(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = m.field().reduce(b[r]);
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.form(r, m.cols());
  return x;
}

Subspace kernel(const FieldMatrix& m) {
  auto red = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = f.neg(red.form(r, free));
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.p(), m.cols(), gens);
}

}  // namespace rla
