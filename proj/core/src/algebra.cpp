#include "rla/algebra.hpp"

#include <sstream>

#include "rla/structure.hpp"

namespace rla {

const char* to_string(ValidationKind k) noexcept {
  switch (k) {
    case ValidationKind::shape: return "shape";
    case ValidationKind::antisymmetry: return "antisymmetry";
    case ValidationKind::jacobi: return "jacobi";
    case ValidationKind::p_compatibility: return "p-compatibility";
    case ValidationKind::representation: return "representation";
    case ValidationKind::module_restrictedness: return "module-restrictedness";
  }
  return "unknown";
}

RestrictedLieAlgebra::RestrictedLieAlgebra(std::uint32_t p, std::size_t dim) : field_(p), dim_(dim) {}

RestrictedLieAlgebra RestrictedLieAlgebra::create(std::uint32_t p, std::size_t dim, std::vector<Vector> brackets,
                                                  std::vector<Vector> pmap, std::vector<std::string> labels) {
  RestrictedLieAlgebra L(p, dim);
  if (brackets.size() != dim * dim)
    throw ValidationError(ValidationKind::shape, {-1, -1, -1}, "bracket table must have dim^2 entries");
  if (pmap.size() != dim)
    throw ValidationError(ValidationKind::shape, {-1, -1, -1}, "p-map table must have dim rows");
  if (!labels.empty() && labels.size() != dim)
    throw ValidationError(ValidationKind::shape, {-1, -1, -1}, "label count must equal dim");
  for (auto* table : {&brackets, &pmap})
    for (auto& v : *table) {
      if (v.size() != dim)
        throw ValidationError(ValidationKind::shape, {-1, -1, -1}, "table vector has wrong length");
      for (auto& c : v) c = static_cast<Coord>(c % p);
    }
  L.brackets_ = std::move(brackets);
  L.pmap_ = std::move(pmap);
  L.labels_ = std::move(labels);
  L.ad_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    FieldMatrix m(p, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, L.brackets_[i * dim + j]);
    L.ad_.push_back(std::move(m));
  }
  L.validate();
  return L;
}

RestrictedLieAlgebra RestrictedLieAlgebra::from_upper(std::uint32_t p, std::size_t dim,
                                                      const std::vector<BracketEntry>& upper,
                                                      std::vector<Vector> pmap, std::vector<std::string> labels) {
  const PrimeField f(p);
  std::vector<Vector> table(dim * dim, zero_vector(dim));
  for (const auto& e : upper) {
    if (e.i >= e.j || e.j >= dim || e.value.size() != dim)
      throw ValidationError(ValidationKind::shape, {int(e.i), int(e.j), -1}, "bracket entries need i < j < dim");
    Vector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = f.reduce(e.value[k]);
    table[e.j * dim + e.i] = scale(f, f.neg(1), v);
    table[e.i * dim + e.j] = std::move(v);
  }
  return create(p, dim, std::move(table), std::move(pmap), std::move(labels));
}

void RestrictedLieAlgebra::validate() const {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rla::is_zero(bracket_basis(i, i)))
      throw ValidationError(ValidationKind::antisymmetry, {int(i), int(i), -1},
                            "[" + label(i) + "," + label(i) + "] != 0");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!rla::is_zero(rla::add(field_, bracket_basis(i, j), bracket_basis(j, i))))
        throw ValidationError(ValidationKind::antisymmetry, {int(i), int(j), -1},
                              "[" + label(i) + "," + label(j) + "] != -[" + label(j) + "," + label(i) + "]");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = bracket(basis_vector(i), bracket_basis(j, k));
        s = rla::add(field_, s, bracket(basis_vector(j), bracket_basis(k, i)));
        s = rla::add(field_, s, bracket(basis_vector(k), bracket_basis(i, j)));
        if (!rla::is_zero(s))
          throw ValidationError(ValidationKind::jacobi, {int(i), int(j), int(k)},
                                "Jacobi identity fails on (" + label(i) + "," + label(j) + "," + label(k) + ")");
      }
  for (std::size_t i = 0; i < n; ++i)
    if (!(ad(pmap_[i]) == ad_[i].power(p())))
      throw ValidationError(ValidationKind::p_compatibility, {int(i), -1, -1},
                            "ad(" + label(i) + "^[p]) != (ad " + label(i) + ")^p");
}

std::string RestrictedLieAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "x" + std::to_string(i);
}

Vector RestrictedLieAlgebra::bracket(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw std::invalid_argument("bracket: element of another algebra");
  Vector out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0 || i == j) continue;
      axpy(field_, field_.mul(a[i], b[j]), brackets_[i * dim_ + j], out);
    }
  }
  return out;
}

FieldMatrix RestrictedLieAlgebra::ad(const Vector& a) const {
  if (a.size() != dim_) throw std::invalid_argument("ad: element of another algebra");
  FieldMatrix m(p(), dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i] != 0) m = m + ad_[i].scaled(a[i]);
  return m;
}

bool RestrictedLieAlgebra::is_abelian() const noexcept {
  for (const auto& v : brackets_)
    if (!rla::is_zero(v)) return false;
  return true;
}

std::vector<std::uint8_t> RestrictedLieAlgebra::table_bytes() const {
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(p()));
  out.push_back(static_cast<std::uint8_t>(dim_));
  for (const auto& v : brackets_) out.insert(out.end(), v.begin(), v.end());
  for (const auto& v : pmap_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

Vector jacobson_correction(const RestrictedLieAlgebra& L, const Vector& u, const Vector& v) {
  const PrimeField& f = L.field();
  const std::uint32_t p = L.p();
  const FieldMatrix ad_u = L.ad(u);
  const FieldMatrix ad_v = L.ad(v);
  // coefficients in t of ad(t u + v)^k (u), degree <= k
  std::vector<Vector> poly{u};
  for (std::uint32_t step = 0; step + 1 < p; ++step) {
    std::vector<Vector> next(poly.size() + 1, L.zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] = rla::add(f, next[d], ad_v.apply(poly[d]));
      next[d + 1] = rla::add(f, next[d + 1], ad_u.apply(poly[d]));
    }
    poly = std::move(next);
  }
  Vector total = L.zero();
  for (std::uint32_t k = 1; k < p; ++k) axpy(f, f.inv(static_cast<Coord>(k)), poly[k - 1], total);
  return total;
}

Vector RestrictedLieAlgebra::ppow(const Vector& a) const {
  if (a.size() != dim_) throw std::invalid_argument("ppow: element of another algebra");
  Vector acc = zero();
  Vector acc_pow = zero();
  bool started = false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    Vector term = scale(field_, a[i], basis_vector(i));
    // (lambda x)^[p] = lambda^p x^[p] = lambda x^[p] over a prime field
    Vector term_pow = scale(field_, a[i], pmap_[i]);
    if (!started) {
      acc = std::move(term);
      acc_pow = std::move(term_pow);
      started = true;
      continue;
    }
    Vector corr = jacobson_correction(*this, acc, term);
    acc_pow = rla::add(field_, rla::add(field_, acc_pow, term_pow), corr);
    acc = rla::add(field_, acc, term);
  }
  return acc_pow;
}

Vector RestrictedLieAlgebra::ppow_iter(const Vector& a, std::size_t k) const {
  Vector v(a);
  for (std::size_t i = 0; i < k; ++i) v = ppow(v);
  return v;
}

Vector extend_pmap(const RestrictedLieAlgebra& L, const FieldMatrix& basis_columns, const std::vector<Vector>& images,
                   const Vector& a) {
  const PrimeField& f = L.field();
  auto coeffs = solve(basis_columns, a);
  if (!coeffs) throw std::invalid_argument("extend_pmap: element outside the span of the basis");
  Vector acc = L.zero();
  Vector acc_pow = L.zero();
  bool started = false;
  for (std::size_t i = 0; i < coeffs->size(); ++i) {
    const Coord c = (*coeffs)[i];
    if (c == 0) continue;
    Vector term = scale(f, c, basis_columns.column(i));
    Vector term_pow = scale(f, c, images.at(i));
    if (!started) {
      acc = std::move(term);
      acc_pow = std::move(term_pow);
      started = true;
      continue;
    }
    Vector corr = jacobson_correction(L, acc, term);
    acc_pow = rla::add(f, rla::add(f, acc_pow, term_pow), corr);
    acc = rla::add(f, acc, term);
  }
  return acc_pow;
}

Quotient quotient(const RestrictedLieAlgebra& L, const Subspace& ideal) {
  if (ideal.ambient_dim() != L.dim() || ideal.p() != L.p())
    throw PreconditionError("quotient: subspace of another space");
  if (!is_p_ideal(L, ideal)) throw PreconditionError("quotient: subspace is not a p-ideal");
  const auto transversal = ideal.non_pivots();
  const std::size_t m = transversal.size();
  FieldMatrix proj(L.p(), m, L.dim());
  for (std::size_t j = 0; j < L.dim(); ++j) {
    const Vector r = ideal.reduce(L.basis_vector(j));
    for (std::size_t k = 0; k < m; ++k) proj(k, j) = r[transversal[k]];
  }
  std::vector<Vector> brackets(m * m);
  std::vector<Vector> pmap(m);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b)
      brackets[a * m + b] = proj.apply(L.bracket_basis(transversal[a], transversal[b]));
    pmap[a] = proj.apply(L.pmap_basis(transversal[a]));
    if (!L.labels().empty()) labels.push_back(L.label(transversal[a]));
  }
  auto Q = RestrictedLieAlgebra::create(L.p(), m, std::move(brackets), std::move(pmap), std::move(labels));
  return {std::move(Q), std::move(proj), transversal};
}

RestrictedLieAlgebra direct_product(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
  if (a.p() != b.p()) throw PreconditionError("direct_product: modulus mismatch");
  const std::size_t n = a.dim() + b.dim();
  auto embed = [n](const Vector& v, std::size_t offset) {
    Vector out(n, 0);
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  std::vector<Vector> brackets(n * n, zero_vector(n));
  std::vector<Vector> pmap(n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) brackets[i * n + j] = embed(a.bracket_basis(i, j), 0);
    pmap[i] = embed(a.pmap_basis(i), 0);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const std::size_t I = a.dim() + i;
    for (std::size_t j = 0; j < b.dim(); ++j) brackets[I * n + a.dim() + j] = embed(b.bracket_basis(i, j), a.dim());
    pmap[I] = embed(b.pmap_basis(i), a.dim());
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
    for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.labels().empty() ? "w" + std::to_string(i) : b.label(i));
  }
  return RestrictedLieAlgebra::create(a.p(), n, std::move(brackets), std::move(pmap), std::move(labels));
}

RestrictedLieAlgebra twist_pmap(const RestrictedLieAlgebra& L, const Subspace& A) {
  if (A.ambient_dim() != L.dim()) throw PreconditionError("twist_pmap: subspace of another space");
  if (!is_abelian_subspace(L, A)) throw PreconditionError("twist_pmap: subspace is not abelian");
  if (!is_p_ideal(L, A)) throw PreconditionError("twist_pmap: subspace is not a p-ideal");
  const std::size_t n = L.dim();
  std::vector<Vector> basis = A.basis();
  std::vector<Vector> images(basis.size(), L.zero());
  for (auto t : A.non_pivots()) {
    basis.push_back(L.basis_vector(t));
    images.push_back(L.pmap_basis(t));
  }
  const FieldMatrix columns = FieldMatrix::from_columns(L.p(), n, basis);
  std::vector<Vector> pmap(n);
  for (std::size_t i = 0; i < n; ++i) pmap[i] = extend_pmap(L, columns, images, L.basis_vector(i));
  std::vector<Vector> brackets;
  brackets.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) brackets.push_back(L.bracket_basis(i, j));
  return RestrictedLieAlgebra::create(L.p(), n, std::move(brackets), std::move(pmap), L.labels());
}

}  // namespace rla
