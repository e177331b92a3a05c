#pragma once

#include <string>
#include <variant>

#include "vpa/hurwitz.hpp"

namespace vpa {

/// Documents carry either algebra kind; the presence of "identity_index"
/// discriminates (absent = vector product algebra, present = unital
/// composition algebra).
using ParsedAlgebra = std::variant<VectorProductAlgebra, UnitalCompositionAlgebra>;

/// Parses a "vpa-1" JSON document. Validates the schema tag, the field
/// spec (p an odd prime), matrix shapes, symmetry of the Gram matrix, and
/// anti-symmetry of the structure constants (the latter only for vector
/// product documents). Errors name the offending JSON path.
ParsedAlgebra parse_algebra(const std::string& text);

/// Canonical serialization: fixed key order, canonical scalar strings,
/// no whitespace variance. parse(emit(x)) reproduces x exactly.
std::string emit_algebra(const VectorProductAlgebra& v);
std::string emit_algebra(const UnitalCompositionAlgebra& a);
std::string emit_algebra(const ParsedAlgebra& p);

} // namespace vpa
