#pragma once

#include "mplt/scalar.hpp"

#include <vector>

namespace mplt {

using Matrix = std::vector<std::vector<Rational>>;

Matrix inverse(Matrix a);
// Basis of {x : a x = 0}; rows of a are the equations.
std::vector<std::vector<Rational>> nullspace(Matrix a, std::size_t ncols);
// Scales a rational vector to a primitive integer vector with first nonzero entry positive.
std::vector<Rational> primitive_integral(std::vector<Rational> v);

}  // namespace mplt
