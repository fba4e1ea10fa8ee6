#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rla {

/// Coordinates are stored as residues in [0, p); every supported prime fits a byte.
using Coord = std::uint8_t;
using Vector = std::vector<Coord>;

inline constexpr std::uint32_t kMaxPrime = 251;

bool is_prime(std::uint32_t n) noexcept;

/// Throws std::invalid_argument unless 2 <= p <= kMaxPrime and p is prime.
void require_supported_prime(std::uint32_t p);

/// Arithmetic in GF(p). A tiny value type carrying only the modulus.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Coord reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coord>(r);
  }
  Coord add(Coord a, Coord b) const noexcept {
    std::uint32_t s = std::uint32_t(a) + b;
    return static_cast<Coord>(s >= p_ ? s - p_ : s);
  }
  Coord sub(Coord a, Coord b) const noexcept {
    return static_cast<Coord>(a >= b ? a - b : a + p_ - b);
  }
  Coord neg(Coord a) const noexcept { return static_cast<Coord>(a == 0 ? 0 : p_ - a); }
  Coord mul(Coord a, Coord b) const noexcept {
    return static_cast<Coord>((std::uint32_t(a) * b) % p_);
  }
  Coord pow(Coord a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Coord inv(Coord a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

/// A single residue together with its modulus.
class FieldScalar {
public:
  FieldScalar(std::int64_t value, std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  Coord value() const noexcept { return value_; }

  FieldScalar operator+(const FieldScalar& o) const;
  FieldScalar operator-(const FieldScalar& o) const;
  FieldScalar operator*(const FieldScalar& o) const;
  FieldScalar operator-() const;
  FieldScalar pow(std::uint64_t e) const;
  FieldScalar inverse() const;

  friend bool operator==(const FieldScalar&, const FieldScalar&) = default;

private:
  void require_same(const FieldScalar& o) const;

  Coord value_;
  std::uint32_t p_;
};

// Vector helpers. All vectors passed together must have equal length.
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v) noexcept;
Vector add(const PrimeField& f, const Vector& a, const Vector& b);
Vector sub(const PrimeField& f, const Vector& a, const Vector& b);
Vector scale(const PrimeField& f, Coord s, const Vector& a);
/// a += s * b
void axpy(const PrimeField& f, Coord s, const Vector& b, Vector& a);

std::string to_string(const Vector& v);

}  // namespace rla
