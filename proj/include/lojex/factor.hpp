#pragma once

#include "lojex/upoly.hpp"

#include <vector>

namespace lojex {

/// Distinct irreducible factors over Q of a nonconstant polynomial, each
/// primitive with positive leading coefficient, ordered by degree and then
/// by coefficients. Multiplicities are dropped.
std::vector<QPoly> irreducible_factors(const QPoly &p);

} // namespace lojex
