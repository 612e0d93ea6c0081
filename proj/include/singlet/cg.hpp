// Exact Clebsch-Gordan coefficients in the Condon-Shortley convention.

#pragma once

#include "singlet/halfint.hpp"
#include "singlet/radical.hpp"

namespace singlet {

// n!, memoized; thread-safe.
BigInt factorial(int n);

// <j1 m1 j2 m2 | j m>, exact. Returns 0 when m != m1 + m2 or the triangle
// rule fails. Every nonzero value is a single term sign*q*sqrt(r).
// Throws std::domain_error on malformed (j, m) pairs.
RadicalSum clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

// <j1,-m1,j2,-m2|j,-m> == (-1)^(j1+j2-j) <j1 m1 j2 m2|j m>, checked exactly.
bool cg_sign_flip_check(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

}  // namespace singlet
