#pragma once

#include <vector>

#include "projcalc/rational.hpp"

namespace projcalc {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(int n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Gauss–Jordan inverse; throws std::domain_error for a singular matrix.
RationalMatrix invert(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);

}  // namespace projcalc
