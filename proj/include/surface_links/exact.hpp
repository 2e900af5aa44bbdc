#pragma once

// Exact congruence diagonalization of integer symmetric matrices.

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace surface_links {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<long long>>;

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  BigInt det;  // determinant; 1 for the empty matrix
  int signature() const { return positive - negative; }
  int rank() const { return positive + negative; }
};

// Throws std::invalid_argument for non-square or non-symmetric input.
Inertia inertia(const IntMatrix& a);
bool is_symmetric(const IntMatrix& a);

// Exact rational printed as "p" or "p/q".
std::string to_string(const Rational& r);

}  // namespace surface_links
