#pragma once

#include "rdzeta/numeric.hpp"

namespace rdzeta {

// Bernoulli polynomials B_0..B_3, evaluated exactly.
//   B_1(x) = x - 1/2
//   B_2(x) = x^2 - x + 1/6
//   B_3(x) = x^3 - (3/2)x^2 + (1/2)x
Rat bernoulli_polynomial(int p, const Rat& x);

// 1-periodic extension B_p(frac(x)), with the symmetric convention
// that the period-1 function vanishes at integers for p = 1.
Rat periodic_bernoulli(int p, const Rat& x);

}  // namespace rdzeta
