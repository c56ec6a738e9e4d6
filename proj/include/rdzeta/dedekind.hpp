#pragma once

#include "rdzeta/numeric.hpp"

namespace rdzeta {

// Generalized Dedekind sum
//   S^p(h,k) = sum_{a=0}^{k-1} Bbar_{4-p}(a/k) * Bbar_p(h*a/k),   p in 1..3,
// computed by direct summation with an integer accumulator. Periodic in h
// modulo k. The closed forms below are independent oracles, never used as
// shortcuts inside this function.
Rat dedekind_sum(int p, const Int& h, const Int& k);

// S^3(+-1, m) = +-(-m^4 + 5m^2 - 4) / (120 m^3)
// S^2(+-1, m) = (m^4 + 10m^2 - 6) / (180 m^3)
Rat closed_form_unit(int p, int sign, const Int& m);

// For even m:
// S^3(m+-1, 2m) = S^1(m+-1, 2m) = -+(m^4 - 50m^2 + 4) / (960 m^3)
// S^2(m+-1, 2m) = (m^4 + 100m^2 - 6) / (1440 m^3)
Rat closed_form_near_half(int p, int sign, const Int& m);

}  // namespace rdzeta
