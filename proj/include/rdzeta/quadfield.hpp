#pragma once

#include "rdzeta/numeric.hpp"

namespace rdzeta {

// Exact element (u + v*sqrt(d))/2 of Q(sqrt(d)), d square-free.
struct QuadraticNumber {
    Int u, v, d;

    QuadraticNumber() : u(0), v(0), d(0) {}
    QuadraticNumber(Int u_, Int v_, Int d_) : u(std::move(u_)), v(std::move(v_)), d(std::move(d_)) {}

    static QuadraticNumber from_integer(const Int& n, const Int& d) {
        return {2 * n, Int(0), d};
    }

    QuadraticNumber conjugate() const { return {u, -v, d}; }
    Rat norm() const { return make_rat(u * u - v * v * d, Int(4)); }
    Rat trace() const { return make_rat(u, Int(1)); }

    bool is_zero() const { return u == 0 && v == 0; }
    // Exact sign under the real embedding with sqrt(d) > 0.
    int sign() const;

    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    QuadraticNumber operator-() const { return {-u, -v, d}; }
    bool operator==(const QuadraticNumber& o) const { return u == o.u && v == o.v && d == o.d; }

    std::string str() const;
};

enum class OmegaKind { sqrt_d, half_one_plus_sqrt_d };

// k_{n,r} = Q(sqrt(n^2+r)), r in {1,4}: the narrow Richaud-Degert family.
struct FieldDescriptor {
    Int n;
    int r;
    Int d;  // n^2 + r, square-free
    Int D;  // fundamental discriminant
    OmegaKind omega_kind;
    QuadraticNumber epsilon;  // fundamental unit, > 1
    int epsilon_norm;         // N(epsilon), -1 throughout this family

    QuadraticNumber omega() const {
        return omega_kind == OmegaKind::sqrt_d ? QuadraticNumber(Int(0), Int(2), d)
                                               : QuadraticNumber(Int(1), Int(1), d);
    }
};

// Builds the field descriptor and cross-checks the closed-form unit
// against the continued-fraction oracle. Throws on non-square-free d
// (message names the offending square factor) and on r=4 with even n.
FieldDescriptor make_field(const Int& n, int r);

// Smallest unit > 1 of the ring of integers of Q(sqrt(d)), from the
// continued-fraction period of omega. Independent of make_field's
// closed forms.
QuadraticNumber fundamental_unit_cf(const Int& d);

}  // namespace rdzeta
