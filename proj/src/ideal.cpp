#include "rdzeta/ideal.hpp"

#include <sstream>

#include "rdzeta/factor.hpp"

namespace rdzeta {
namespace {

// Coordinates (x, y) with value = x + y*omega.
struct Coord {
    Int x, y;
};

Coord to_coords(const QuadraticNumber& q, OmegaKind kind) {
    if (kind == OmegaKind::sqrt_d) {
        // (u+v sqrt d)/2 = u/2 + (v/2) omega
        if (mod_floor(q.u, 2) != 0 || mod_floor(q.v, 2) != 0)
            throw std::domain_error("element is not in Z[sqrt d]: " + q.str());
        return {q.u / 2, q.v / 2};
    }
    // (u+v sqrt d)/2 = (u-v)/2 + v*omega
    if (mod_floor(q.u - q.v, 2) != 0)
        throw std::domain_error("element is not in Z[(1+sqrt d)/2]: " + q.str());
    return {(q.u - q.v) / 2, q.v};
}

QuadraticNumber from_coords(const Int& x, const Int& y, const Int& d, OmegaKind kind) {
    if (kind == OmegaKind::sqrt_d) return {2 * x, 2 * y, d};
    return {2 * x + y, y, d};
}

}  // namespace

QuadraticNumber IdealLattice::omega() const {
    return omega_kind == OmegaKind::sqrt_d ? QuadraticNumber(Int(0), Int(2), d)
                                           : QuadraticNumber(Int(1), Int(1), d);
}

QuadraticNumber IdealLattice::r2() const { return from_coords(B, C, d, omega_kind); }

bool IdealLattice::contains(const QuadraticNumber& x) const {
    Coord c = to_coords(x, omega_kind);
    if (mod_floor(c.y, C) != 0) return false;
    Int t = exact_div(c.y, C);
    return mod_floor(c.x - t * B, A) == 0;
}

std::string IdealLattice::str() const {
    std::ostringstream os;
    os << "[" << A.get_str() << ", " << r2().str() << "]";
    return os.str();
}

IdealLattice lattice_from_generators(const FieldDescriptor& k,
                                     const std::vector<QuadraticNumber>& gens) {
    // Hermite form of the span of the coordinate vectors.
    std::vector<Coord> v;
    for (auto& g : gens) {
        if (!g.is_zero()) v.push_back(to_coords(g, k.omega_kind));
    }
    if (v.empty()) throw std::domain_error("lattice_from_generators: zero module");

    // Reduce to a single vector with minimal positive y (gcd of all y),
    // clearing the y-components of the rest.
    Int C = 0, Bx = 0;
    for (auto& c : v) {
        if (c.y == 0) continue;
        if (C == 0) {
            C = c.y;
            Bx = c.x;
            continue;
        }
        // Euclid on the y-components, tracking x alongside.
        Int a = C, ax = Bx, b = c.y, bx = c.x;
        while (b != 0) {
            Int q = floor_div(a, b);
            Int t = a - q * b, tx = ax - q * bx;
            a = b;
            ax = bx;
            b = t;
            bx = tx;
        }
        C = a;
        Bx = ax;
    }
    Int A = 0;
    for (auto& c : v) {
        Int x = c.x;
        if (C != 0 && c.y != 0) x = c.x - exact_div(c.y, C) * Bx;  // project out
        A = gcd(A, x);
    }
    if (C == 0 || A == 0)
        throw std::domain_error("lattice_from_generators: module has rank < 2");
    if (C < 0) {
        C = -C;
        Bx = -Bx;
    }
    if (A < 0) A = -A;
    Bx = mod_floor(Bx, A);

    IdealLattice I;
    I.d = k.d;
    I.omega_kind = k.omega_kind;
    I.A = A;
    I.B = Bx;
    I.C = C;
    return I;
}

IdealLattice ideal_two_gen(const FieldDescriptor& k, const Int& g, const QuadraticNumber& alpha) {
    QuadraticNumber w = k.omega();
    QuadraticNumber gq = QuadraticNumber::from_integer(g, k.d);
    return lattice_from_generators(k, {gq, gq * w, alpha, alpha * w});
}

IdealLattice ideal_from_pair(const FieldDescriptor& k, const Int& g, const QuadraticNumber& alpha) {
    QuadraticNumber gq = QuadraticNumber::from_integer(g, k.d);
    IdealLattice I = lattice_from_generators(k, {gq, alpha});
    QuadraticNumber w = k.omega();
    for (const QuadraticNumber& b : {gq, alpha}) {
        QuadraticNumber prod = b * w;
        if (!I.contains(prod))
            throw std::domain_error("module is not an ideal: closure fails for " + b.str() +
                                    " * omega = " + prod.str());
    }
    return I;
}

IdealLattice ideal_mul(const FieldDescriptor& k, const IdealLattice& I, const IdealLattice& J) {
    if (I.d != J.d) throw std::domain_error("ideal_mul: ideals from different fields");
    QuadraticNumber i1 = I.r1(), i2 = I.r2(), j1 = J.r1(), j2 = J.r2();
    return lattice_from_generators(k, {i1 * j1, i1 * j2, i2 * j1, i2 * j2});
}

IdealLattice ideal_conjugate(const FieldDescriptor& k, const IdealLattice& I) {
    return lattice_from_generators(
        k, {I.r1(), I.r1() * k.omega(), I.r2().conjugate(), I.r2().conjugate() * k.omega()});
}

IdealLattice unit_ideal(const FieldDescriptor& k) {
    return ideal_two_gen(k, Int(1), k.omega());
}

IdealLattice principal_ideal(const FieldDescriptor& k, const QuadraticNumber& x) {
    if (x.is_zero()) throw std::domain_error("principal_ideal: zero element");
    return lattice_from_generators(k, {x, x * k.omega()});
}

std::pair<IdealLattice, IdealLattice> split_prime(const FieldDescriptor& k, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("split_prime: p must be prime");
    Int d = k.d;
    if (p == 2) {
        Int dm8 = mod_floor(d, 8);
        if (dm8 == 1) {
            QuadraticNumber a1(Int(1), Int(1), d), a2(Int(1), Int(-1), d);
            return {ideal_from_pair(k, Int(2), a1), ideal_from_pair(k, Int(2), a2)};
        }
        if (mod_floor(d, 4) == 2 || mod_floor(d, 4) == 3) {
            // ramified: (2) = (2, sqrt d)^2 when d = 2 mod 4
            QuadraticNumber sq = mod_floor(d, 4) == 2 ? QuadraticNumber(Int(0), Int(2), d)
                                                      : QuadraticNumber(Int(2), Int(2), d);
            IdealLattice I = ideal_from_pair(k, Int(2), sq);
            return {I, I};
        }
        throw std::domain_error("inert prime: 2 is inert (d = 5 mod 8)");
    }

    Int dm = mod_floor(d, p);
    if (dm == 0) {
        // ramified odd prime
        IdealLattice I = ideal_two_gen(k, p, QuadraticNumber(Int(0), Int(2), d));
        return {I, I};
    }
    // find s with s^2 = d (mod p); desk-scale p, linear scan is fine
    Int s = -1;
    for (Int t = 0; t < p; ++t) {
        if (mod_floor(t * t - d, p) == 0) {
            s = t;
            break;
        }
    }
    if (s < 0) throw std::domain_error("inert prime: " + p.get_str() + " is inert in Q(sqrt " +
                                       d.get_str() + ")");
    if (mod_floor(d, 4) == 1 && mod_floor(s, 2) == 0) s = p - s;  // make s odd so (s+sqrt d)/2 is integral
    QuadraticNumber a1, a2;
    if (mod_floor(d, 4) == 1) {
        a1 = QuadraticNumber(s, Int(1), d);
        a2 = QuadraticNumber(s, Int(-1), d);
    } else {
        a1 = QuadraticNumber(2 * s, Int(2), d);
        a2 = QuadraticNumber(2 * s, Int(-2), d);
    }
    return {ideal_from_pair(k, p, a1), ideal_from_pair(k, p, a2)};
}

Int delta_coefficient(const IdealLattice& I) {
    // delta = A*(r2' - r2) = -A * v(r2) * sqrt(d); v(r2) is C or 2C > 0
    QuadraticNumber r2 = I.r2();
    Int s = -I.A * r2.v;
    if (s == 0) throw std::logic_error("delta_coefficient: degenerate basis");
    return s;
}

}  // namespace rdzeta
