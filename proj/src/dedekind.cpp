#include "rdzeta/dedekind.hpp"

#include <cstdint>

#include "rdzeta/bernoulli.hpp"

namespace rdzeta {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

// Integerized periodic Bernoulli values for x in [0,k):
//   f1 = 2k * Bbar_1(x/k),  f2 = 6k^2 * Bbar_2(x/k),  f3 = 2k^3 * Bbar_3(x/k)
i128 f_scaled(int p, i64 x, i64 k) {
    switch (p) {
        case 1:
            return x == 0 ? 0 : i128(2 * x - k);
        case 2:
            return i128(6) * x * x - i128(6) * x * k + i128(k) * k;
        default:
            return i128(2) * x * x * x - i128(3) * x * x * k + i128(x) * k * k;
    }
}

i64 scale_den(int p, i64 k) {
    i64 s = p == 2 ? 6 : 2;
    for (int i = 0; i < p; ++i) s *= k;
    return s;
}

Int int_from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    Int hi(static_cast<unsigned long>(u >> 64));
    Int lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    Int r = (hi << 64) + lo;
    return neg ? Int(-r) : r;
}

// Direct-summation fallback in exact rationals, for moduli beyond the
// 128-bit accumulator range. Never hit at desk scale.
Rat dedekind_sum_rat(int p, const Int& h, const Int& k) {
    Rat s(0);
    for (Int a = 0; a < k; ++a) {
        Rat xa = make_rat(a, k);
        Rat xb = make_rat(mod_floor(h * a, k), k);
        s += periodic_bernoulli(4 - p, xa) * periodic_bernoulli(p, xb);
    }
    return s;
}

}  // namespace

Rat dedekind_sum(int p, const Int& h, const Int& k) {
    if (p < 1 || p > 3) throw std::domain_error("dedekind_sum: p must be in 1..3");
    if (k < 1) throw std::domain_error("dedekind_sum: modulus must be positive");
    if (k > 3000000) return dedekind_sum_rat(p, h, k);

    i64 ki = to_i64(k);
    i64 hi = to_i64(mod_floor(h, k));
    i128 acc = 0;
    i64 b = 0;
    for (i64 a = 0; a < ki; ++a) {
        acc += f_scaled(4 - p, a, ki) * f_scaled(p, b, ki);
        b += hi;
        if (b >= ki) b -= ki;
    }
    return make_rat(int_from_i128(acc), Int(scale_den(4 - p, ki)) * scale_den(p, ki));
}

Rat closed_form_unit(int p, int sign, const Int& m) {
    if (m < 1) throw std::domain_error("closed_form_unit: m must be positive");
    if (sign != 1 && sign != -1) throw std::domain_error("closed_form_unit: sign must be +-1");
    Int m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
    switch (p) {
        case 3:
            return make_rat(sign * (-m4 + 5 * m2 - 4), 120 * m3);
        case 2:
            return make_rat(m4 + 10 * m2 - 6, 180 * m3);
        default:
            throw std::domain_error("closed_form_unit: p must be 2 or 3");
    }
}

Rat closed_form_near_half(int p, int sign, const Int& m) {
    if (m < 2 || mod_floor(m, 2) != 0)
        throw std::domain_error("closed_form_near_half: m must be a positive even integer");
    if (sign != 1 && sign != -1) throw std::domain_error("closed_form_near_half: sign must be +-1");
    Int m2 = m * m, m3 = m2 * m, m4 = m2 * m2;
    switch (p) {
        case 1:
        case 3:
            // S^3(m+1,2m) = S^1(m+1,2m) = -(m^4-50m^2+4)/960m^3, odd in the offset
            return make_rat(-sign * (m4 - 50 * m2 + 4), 960 * m3);
        case 2:
            return make_rat(m4 + 100 * m2 - 6, 1440 * m3);
        default:
            throw std::domain_error("closed_form_near_half: p must be in 1..3");
    }
}

}  // namespace rdzeta
