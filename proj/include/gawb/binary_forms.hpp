#pragma once

#include <optional>
#include <vector>

#include "gawb/poly.hpp"

namespace gawb {

/// Total degree in `vars` if every term has the same degree there; nullopt
/// for the zero polynomial or mixed degrees.
std::optional<int> homogeneous_degree(const Poly& p, const std::vector<VarId>& vars);

/// Resultant of two binary forms in (x, y) via Bareiss elimination on the
/// Sylvester matrix. Nonzero iff the forms share no projective zero.
/// Throws DomainError for non-homogeneous input, constants, or other variables.
Rational binary_resultant(const Poly& f, const Poly& g, VarId x, VarId y);
Rational binary_resultant(const Poly& f, const Poly& g);

/// Dense determinant over Q by fraction-free elimination.
Rational bareiss_determinant(std::vector<std::vector<Rational>> m);

}  // namespace gawb
