#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "rla/subspace.hpp"

namespace rla {

enum class ValidationKind {
  shape,
  antisymmetry,
  jacobi,
  p_compatibility,
  representation,
  module_restrictedness,
};

const char* to_string(ValidationKind k) noexcept;

/// A structure failed one of its defining axioms. `where` names the offending
/// basis indices (unused slots are -1).
class ValidationError : public std::runtime_error {
public:
  ValidationError(ValidationKind kind, std::array<int, 3> where, const std::string& what)
      : std::runtime_error(what), kind_(kind), where_(where) {}

  ValidationKind kind() const noexcept { return kind_; }
  const std::array<int, 3>& where() const noexcept { return where_; }

private:
  ValidationKind kind_;
  std::array<int, 3> where_;
};

/// An operation was called outside its domain (not nilpotent, not a p-ideal, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A constructed object failed its post-construction certificate. This signals
/// a bug or a violated mathematical hypothesis, never bad user input.
class CertificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace rla
