#pragma once

#include <random>

#include "vpa/matrix.hpp"

namespace vpa {

/// Deterministic sample scalars for property checks: small fractions over Q,
/// uniform residues over F_p.
Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng);

Vec random_vector(const FieldSpec& f, std::size_t n, std::mt19937_64& rng);

} // namespace vpa
