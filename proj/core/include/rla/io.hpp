#pragma once

#include <stdexcept>
#include <string>

#include "rla/algebra.hpp"

namespace rla {

/// Malformed document: bad JSON, missing or unknown keys, wrong types or shapes.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses the algebra document
///   {"p": <prime>, "dim": <n>, "labels": [...], "brackets": [{"i", "j", "v"}...], "pmap": [[...]...]}
/// Brackets are listed for i < j only; omitted pairs are zero. Integers are
/// reduced mod p. Throws InputError for malformed input and ValidationError
/// when the tables violate an axiom.
RestrictedLieAlgebra parse_algebra(const std::string& text);
RestrictedLieAlgebra load_algebra(const std::string& path);

/// Canonical serialization: nonzero brackets only, i < j ascending.
std::string algebra_to_json(const RestrictedLieAlgebra& L, int indent = -1);

}  // namespace rla
