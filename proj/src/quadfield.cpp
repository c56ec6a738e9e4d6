#include "rdzeta/quadfield.hpp"

#include <sstream>
#include <vector>

#include "rdzeta/factor.hpp"

namespace rdzeta {

int QuadraticNumber::sign() const {
    if (v == 0) return sign_of(u);
    if (u == 0) return sign_of(v);
    if (u > 0 && v > 0) return 1;
    if (u < 0 && v < 0) return -1;
    // opposite signs: compare u^2 against v^2 d exactly
    int cmp = sign_of(u * u - v * v * d);
    if (cmp == 0) return 0;  // impossible for square-free d, kept for safety
    return u > 0 ? cmp : -cmp;
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    if (d != o.d) throw std::domain_error("quadratic numbers from different fields");
    return {u + o.u, v + o.v, d};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
    if (d != o.d) throw std::domain_error("quadratic numbers from different fields");
    return {u - o.u, v - o.v, d};
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    if (d != o.d) throw std::domain_error("quadratic numbers from different fields");
    // ((u1+v1 s)/2)((u2+v2 s)/2) = ((u1u2+v1v2 d) + (u1v2+u2v1) s)/4
    Int nu = u * o.u + v * o.v * d;
    Int nv = u * o.v + o.u * v;
    if (mod_floor(nu, 2) != 0 || mod_floor(nv, 2) != 0)
        throw std::domain_error("quadratic product leaves the half-integer lattice");
    return {nu / 2, nv / 2, d};
}

std::string QuadraticNumber::str() const {
    std::ostringstream os;
    os << "(" << u.get_str() << (v >= 0 ? "+" : "-") << Int(abs(v)).get_str() << "*sqrt("
       << d.get_str() << "))/2";
    return os.str();
}

QuadraticNumber fundamental_unit_cf(const Int& d) {
    if (d < 2 || is_square(d)) throw std::domain_error("fundamental_unit_cf: d must be a non-square >= 2");
    bool half = mod_floor(d, 4) == 1;
    Int s = isqrt(d);

    // Continued fraction of omega = (P0 + sqrt(d))/Q0, tracking (P,Q) states
    // until one repeats; the repeating block gives a purely periodic
    // quadratic irrational beta and the convergent matrix over one period.
    Int P = half ? 1 : 0;
    Int Q = half ? 2 : 1;
    std::vector<std::pair<Int, Int>> seen;
    std::vector<Int> partials;
    Int periodP, periodQ;
    std::size_t period_start = 0;
    while (true) {
        bool found = false;
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (seen[i].first == P && seen[i].second == Q) {
                period_start = i;
                periodP = P;
                periodQ = Q;
                found = true;
                break;
            }
        }
        if (found) break;
        if (Q <= 0) throw std::logic_error("fundamental_unit_cf: unexpected non-positive Q");
        seen.emplace_back(P, Q);
        Int a = floor_div(P + s, Q);
        partials.push_back(a);
        Int Pn = a * Q - P;
        Int Qn = exact_div(d - Pn * Pn, Q);
        P = Pn;
        Q = Qn;
    }

    // Convergents over the periodic block [a_{start}, ..., a_{end}].
    Int p1 = 1, p0 = 0, q1 = 0, q0 = 1;  // (p1,p0) current/previous numerators
    for (std::size_t i = period_start; i < partials.size(); ++i) {
        Int a = partials[i];
        Int pn = a * p1 + p0;
        Int qn = a * q1 + q0;
        p0 = p1;
        p1 = pn;
        q0 = q1;
        q1 = qn;
    }
    // beta = (periodP + sqrt(d))/periodQ is purely periodic; the unit is
    // eps = q_{l-1} * beta + q_{l-2}.
    Int u = 2 * (q1 * periodP + q0 * periodQ);
    Int v = 2 * q1;
    if (mod_floor(u, periodQ) != 0 || mod_floor(v, periodQ) != 0)
        throw std::logic_error("fundamental_unit_cf: unit not integral over the period state");
    QuadraticNumber eps(exact_div(u, periodQ), exact_div(v, periodQ), d);

    Rat nrm = eps.norm();
    if (nrm != Rat(1) && nrm != Rat(-1))
        throw std::logic_error("fundamental_unit_cf: candidate is not a unit");
    if (eps.sign() <= 0) eps = -eps;
    return eps;
}

FieldDescriptor make_field(const Int& n, int r) {
    if (n < 1) throw std::domain_error("make_field: n must be positive");
    if (r != 1 && r != 4) throw std::domain_error("make_field: r must be 1 or 4");
    if (r == 4 && mod_floor(n, 2) == 0)
        throw std::domain_error("make_field: r=4 requires odd n (4 divides n^2+4 otherwise)");
    Int d = n * n + r;
    FactorProfile f = factorize(d);
    for (auto& [p, e] : f.factors) {
        if (e > 1) {
            throw std::domain_error("make_field: d = " + d.get_str() +
                                    " is not square-free (divisible by " + Int(p * p).get_str() + ")");
        }
    }

    FieldDescriptor k;
    k.n = n;
    k.r = r;
    k.d = d;
    bool one_mod4 = mod_floor(d, 4) == 1;
    k.D = one_mod4 ? d : 4 * d;
    k.omega_kind = one_mod4 ? OmegaKind::half_one_plus_sqrt_d : OmegaKind::sqrt_d;

    if (d == 5) {
        k.epsilon = QuadraticNumber(Int(1), Int(1), d);  // n+sqrt(5) is not fundamental
    } else if (r == 1) {
        k.epsilon = QuadraticNumber(2 * n, Int(2), d);
    } else {
        k.epsilon = QuadraticNumber(n, Int(1), d);
    }

    QuadraticNumber cf = fundamental_unit_cf(d);
    if (!(cf == k.epsilon))
        throw std::logic_error("make_field: closed-form unit disagrees with CF oracle for d = " +
                               d.get_str());

    Rat nrm = k.epsilon.norm();
    if (nrm != Rat(-1))
        throw std::logic_error("make_field: N(epsilon) != -1 for d = " + d.get_str());
    k.epsilon_norm = -1;
    return k;
}

}  // namespace rdzeta
