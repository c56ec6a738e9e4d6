#pragma once

#include <optional>

#include "rdzeta/forms.hpp"
#include "rdzeta/ideal.hpp"

namespace rdzeta {

// Integer matrix of the fundamental-unit action on an ideal basis:
//   eps*r1 = a*r1 + b*r2,  eps*r2 = c*r1 + d*r2,  det = N(eps), bc != 0.
// Computed both by the trace formulas and by exact linear solve; the two
// must agree.
struct UnitActionMatrix {
    Int a, b, c, d;
    Int det() const { return a * d - b * c; }
};

struct PartialZetaReport {
    IdealLattice ideal;
    UnitActionMatrix M;
    int sgn_delta;
    Rat value;
};

// zeta_k(-1) = (1/60) sum over |t| < sqrt(D), t^2 = D (mod 4), of sigma((D-t^2)/4).
Rat zagier_zeta_minus1(const FieldDescriptor& k);
Rat zagier_zeta_minus1_disc(const Int& D);

UnitActionMatrix unit_action_matrix(const FieldDescriptor& k, const IdealLattice& I);

// Lang's partial zeta value at -1 for the class whose inverse contains I.
PartialZetaReport lang_partial_zeta(const FieldDescriptor& k, const IdealLattice& I);

// Closed form for the principal class: (n^3+14n)/360 when d = 1 (mod 4),
// (4n^3+11n)/180 when d = 2 (mod 4). Invalid at n=2 (d=5 unit exception).
Rat closed_principal_zeta(const FieldDescriptor& k);

// Closed forms for the class above a split/ramified prime:
//   odd p | n, d = 1 (mod 4):  (n^3 + n(4p^4+10p^2)) / 360p^2
//   p = 2,   d = 1 (mod 8):    (n^3 + 104n) / 1440
//   odd p | n, d = 2 (mod 4):  (4n^3 + n(p^4+10p^2)) / 180p^2
//   p = 2,   d = 2 (mod 4):    (n^3 + 14n) / 180   (ramified)
Rat closed_split_class_zeta(const FieldDescriptor& k, const Int& p);

// Squared-class closed form (n^3 + n(4p^8+10p^4)) / 360p^4 for odd split p | n,
// d = 1 (mod 4).
Rat closed_split_class_squared_zeta(const FieldDescriptor& k, const Int& p);

// Sum of Lang partial zeta values over one ideal representative per class.
// Must equal zagier_zeta_minus1 exactly; a mismatch throws.
struct ClassZetaBreakdown {
    std::vector<PartialZetaReport> per_class;  // indexed like G's classes
    Rat total;
};
ClassZetaBreakdown zeta_minus1_by_classes(const FieldDescriptor& k, const ClassGroupDescriptor& G,
                                          bool check_against_zagier = true);

}  // namespace rdzeta
