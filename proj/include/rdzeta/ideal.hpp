#pragma once

#include <vector>

#include "rdzeta/quadfield.hpp"

namespace rdzeta {

// Integral ideal as a rank-2 lattice in Hermite form over the integral
// basis (1, omega):
//   a = Z*A + Z*(B + C*omega),   0 <= B < A,  C | A,  C | B
// A is the smallest positive rational integer in the ideal and
// N(a) = A*C. The ordered Lang basis is (r1, r2) = (A, B + C*omega).
struct IdealLattice {
    Int d;  // field constant
    OmegaKind omega_kind;
    Int A, B, C;

    Int norm() const { return A * C; }
    QuadraticNumber r1() const { return QuadraticNumber::from_integer(A, d); }
    QuadraticNumber r2() const;
    QuadraticNumber omega() const;

    bool contains(const QuadraticNumber& x) const;
    bool operator==(const IdealLattice& o) const {
        return d == o.d && A == o.A && B == o.B && C == o.C;
    }
    std::string str() const;
};

// Canonical lattice spanned by the given generators (coordinates over
// (1, omega) must be integral). Internal helper for the operations below.
IdealLattice lattice_from_generators(const FieldDescriptor& k,
                                     const std::vector<QuadraticNumber>& gens);

// Z-module Z*g + Z*alpha, verified closed under multiplication by omega.
// Throws naming the failing closure product if the module is not an ideal.
IdealLattice ideal_from_pair(const FieldDescriptor& k, const Int& g, const QuadraticNumber& alpha);

// O_K-ideal generated by {g, alpha} (closure always holds by construction).
IdealLattice ideal_two_gen(const FieldDescriptor& k, const Int& g, const QuadraticNumber& alpha);

IdealLattice ideal_mul(const FieldDescriptor& k, const IdealLattice& I, const IdealLattice& J);

IdealLattice ideal_conjugate(const FieldDescriptor& k, const IdealLattice& I);

IdealLattice unit_ideal(const FieldDescriptor& k);

// Principal ideal (x) for a nonzero ring element x.
IdealLattice principal_ideal(const FieldDescriptor& k, const QuadraticNumber& x);

// Conjugate pair of prime ideals above p (equal pair when ramified),
// following the splitting shapes of the family: (2,(1+-sqrt d)/2) for
// d=1 mod 8, (2,sqrt d)^2 for d=2 mod 4, (p,(1+-sqrt d)/2) resp.
// (p,1+-sqrt d) for odd split p. Throws "inert prime" when p is inert.
std::pair<IdealLattice, IdealLattice> split_prime(const FieldDescriptor& k, const Int& p);

// delta(a) = r1 r2' - r1' r2 = s*sqrt(d); returns s (nonzero).
Int delta_coefficient(const IdealLattice& I);

}  // namespace rdzeta
