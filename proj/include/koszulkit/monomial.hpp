#pragma once

#include <string>
#include <vector>

namespace kzk {

// Exponent vector over the declared generators.
using Monomial = std::vector<int>;

int degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Graded reverse lexicographic order, generators ranked in declared order
// (earlier = larger). Among equal degrees a > b iff the last index where the
// exponents differ has a smaller exponent in a.
bool grevlex_greater(const Monomial& a, const Monomial& b);

// All degree-d monomials in n variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

// "x^2*y" style rendering with the given generator names; "1" for degree 0.
std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace kzk
