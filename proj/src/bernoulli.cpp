#include "rdzeta/bernoulli.hpp"

namespace rdzeta {

Rat bernoulli_polynomial(int p, const Rat& x) {
    switch (p) {
        case 0:
            return Rat(1);
        case 1:
            return x - make_rat(1, 2);
        case 2:
            return x * x - x + make_rat(1, 6);
        case 3:
            return x * x * x - make_rat(3, 2) * x * x + make_rat(1, 2) * x;
        default:
            throw std::domain_error("bernoulli_polynomial: degree must be in 0..3");
    }
}

Rat periodic_bernoulli(int p, const Rat& x) {
    if (p < 1 || p > 3) throw std::domain_error("periodic_bernoulli: degree must be in 1..3");
    Int fl = floor_div(x.get_num(), x.get_den());
    Rat frac = x - Rat(fl);
    if (p == 1 && frac == 0) return Rat(0);
    return bernoulli_polynomial(p, frac);
}

}  // namespace rdzeta
