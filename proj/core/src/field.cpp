#include "rla/field.hpp"

#include <sstream>

namespace rla {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_supported_prime(std::uint32_t p) {
  if (p > kMaxPrime || !is_prime(p))
    throw std::invalid_argument("unsupported modulus " + std::to_string(p) +
                                " (need a prime <= 251)");
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) { require_supported_prime(p); }

Coord PrimeField::pow(Coord a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e != 0) {
    if (e & 1U) result = (result * base) % p_;
    base = (base * base) % p_;
    e >>= 1U;
  }
  return static_cast<Coord>(result);
}

Coord PrimeField::inv(Coord a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
  return pow(a, p_ - 2);
}

FieldScalar::FieldScalar(std::int64_t value, std::uint32_t p)
    : value_(PrimeField(p).reduce(value)), p_(p) {}

void FieldScalar::require_same(const FieldScalar& o) const {
  if (o.p_ != p_) throw std::invalid_argument("field scalars over different primes");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
  require_same(o);
  return {PrimeField(p_).add(value_, o.value_), p_};
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const {
  require_same(o);
  return {PrimeField(p_).sub(value_, o.value_), p_};
}

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
  require_same(o);
  return {PrimeField(p_).mul(value_, o.value_), p_};
}

FieldScalar FieldScalar::operator-() const { return {PrimeField(p_).neg(value_), p_}; }

FieldScalar FieldScalar::pow(std::uint64_t e) const { return {PrimeField(p_).pow(value_, e), p_}; }

FieldScalar FieldScalar::inverse() const { return {PrimeField(p_).inv(value_), p_}; }

Vector zero_vector(std::size_t n) { return Vector(n, 0); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) noexcept {
  for (Coord c : v)
    if (c != 0) return false;
  return true;
}

Vector add(const PrimeField& f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vector sub(const PrimeField& f, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vector scale(const PrimeField& f, Coord s, const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

void axpy(const PrimeField& f, Coord s, const Vector& b, Vector& a) {
  if (s == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], f.mul(s, b[i]));
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << int(v[i]);
  os << ')';
  return os.str();
}

}  // namespace rla
