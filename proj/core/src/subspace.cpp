#include "rla/subspace.hpp"

#include <algorithm>
#include <limits>

namespace rla {

namespace {

FieldMatrix nonzero_rows(const RrefResult& r) {
  FieldMatrix out(r.form.p(), r.rank, r.form.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < r.form.cols(); ++c) out(i, c) = r.form(i, c);
  return out;
}

}  // namespace

std::uint64_t checked_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    result *= p;
  }
  return result;
}

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : basis_(p, 0, ambient) {}

Subspace::Subspace(RrefResult r) : basis_(nonzero_rows(r)), pivots_(std::move(r.pivots)) {}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return Subspace(p, ambient);
  return row_space(FieldMatrix::from_rows(p, ambient, vectors));
}

Subspace Subspace::row_space(const FieldMatrix& m) { return Subspace(rref(m)); }

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
  return row_space(FieldMatrix::identity(p, ambient));
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

void Subspace::require_ambient(std::size_t n) const {
  if (n != ambient_dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
}

Vector Subspace::reduce(const Vector& v) const {
  require_ambient(v.size());
  const PrimeField& f = basis_.field();
  Vector w(v);
  for (std::size_t r = 0; r < dim(); ++r) {
    const Coord c = w[pivots_[r]];
    if (c == 0) continue;
    const auto row = basis_.row(r);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(c, row[j]));
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return rla::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_ambient(other.ambient_dim());
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row_vector(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw std::invalid_argument("coordinates: vector outside subspace");
  Vector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  require_ambient(o.ambient_dim());
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  return row_space(FieldMatrix::vstack(basis_, o.basis_));
}

Subspace Subspace::annihilator() const {
  if (is_zero()) return full(p(), ambient_dim());
  return kernel(basis_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  require_ambient(o.ambient_dim());
  if (is_zero() || o.is_zero()) return Subspace(p(), ambient_dim());
  return (annihilator() + o.annihilator()).annihilator();
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.basis_.data() < b.basis_.data();
}

std::vector<Subspace> complement_enumeration(const Subspace& s, std::uint64_t budget) {
  const std::size_t d = s.dim();
  const auto transversal = s.non_pivots();
  const std::size_t c = transversal.size();
  const std::uint64_t count = checked_power(s.p(), c * d);
  if (count > budget)
    throw BudgetExceeded("complement enumeration needs " + std::to_string(count) + " candidates");
  const PrimeField f(s.p());
  const auto sbasis = s.basis();
  std::vector<Subspace> out;
  out.reserve(count);
  Vector phi(c * d, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < c; ++k) {
      Vector g = unit_vector(s.ambient_dim(), transversal[k]);
      for (std::size_t r = 0; r < d; ++r) axpy(f, phi[k * d + r], sbasis[r], g);
      gens.push_back(std::move(g));
    }
    out.push_back(Subspace::span(s.p(), s.ambient_dim(), gens));
    for (auto& e : phi) {
      if (++e < s.p()) break;
      e = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_subspace(std::uint32_t p, std::size_t n, int k, std::uint64_t budget,
                       const std::function<bool(const Subspace&)>& visit) {
  std::uint64_t visited = 0;
  const std::size_t kmin = k < 0 ? 0 : std::size_t(k);
  const std::size_t kmax = k < 0 ? n : std::min<std::size_t>(std::size_t(k), n);
  for (std::size_t dim = kmin; dim <= kmax; ++dim) {
    // pivot sets in lexicographic order
    std::vector<std::size_t> piv(dim);
    for (std::size_t i = 0; i < dim; ++i) piv[i] = i;
    while (true) {
      // free slots: (row, col) with col > pivot[row] and col not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = piv[r] + 1; c < n; ++c)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
      std::vector<Coord> fill(slots.size(), 0);
      while (true) {
        if (++visited > budget) throw BudgetExceeded("subspace enumeration budget exceeded");
        FieldMatrix m(p, dim, n);
        for (std::size_t r = 0; r < dim; ++r) m(r, piv[r]) = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) m(slots[s].first, slots[s].second) = fill[s];
        if (!visit(Subspace::row_space(m))) return;
        std::size_t s = 0;
        for (; s < fill.size(); ++s) {
          if (++fill[s] < p) break;
          fill[s] = 0;
        }
        if (s == fill.size()) break;
      }
      // next combination
      std::size_t i = dim;
      while (i > 0 && piv[i - 1] == n - dim + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < dim; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
}

}  // namespace rla
