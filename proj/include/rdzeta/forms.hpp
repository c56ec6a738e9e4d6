#pragma once

#include <cstdint>
#include <vector>

#include "rdzeta/ideal.hpp"

namespace rdzeta {

// Indefinite binary quadratic form a x^2 + b xy + c y^2 of positive
// non-square discriminant b^2 - 4ac. Hot paths run in int64; the
// discriminants in scope stay far below the overflow range.
struct BinaryForm {
    std::int64_t a, b, c;

    std::int64_t disc() const { return b * b - 4 * a * c; }
    bool operator==(const BinaryForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const BinaryForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

bool is_reduced(const BinaryForm& f);

// Reduction to an equivalent reduced form (standard indefinite rho walk).
BinaryForm reduce(const BinaryForm& f);

// One step of the reduction operator restricted to reduced forms; iterating
// it traverses the cycle of the class.
BinaryForm rho(const BinaryForm& f);

// Dirichlet composition; result is reduced.
BinaryForm compose(const BinaryForm& f, const BinaryForm& g);

BinaryForm principal_form(std::int64_t D);

// Full class-group structure of discriminant D from reduced-cycle
// enumeration and the composition table.
struct ClassGroupDescriptor {
    std::int64_t D = 0;
    std::vector<std::vector<BinaryForm>> cycles;  // one cycle per class
    std::vector<BinaryForm> reps;                 // lexicographically least reduced form per class
    std::vector<std::vector<int>> table;          // composition table on class indices
    std::vector<int> element_orders;
    std::vector<Int> invariant_factors;           // divisibility chain, product = h
    int principal = 0;                            // index of the principal class

    int h() const { return static_cast<int>(cycles.size()); }
    int compose_classes(int i, int j) const { return table[i][j]; }
    int inverse_class(int i) const;
    int class_of_reduced(const BinaryForm& f) const;
    // Number of prime discriminants dividing D (genus-theory mu).
    int mu() const;
};

ClassGroupDescriptor all_classes(std::int64_t D);

// Class index of an integral ideal (via the positively oriented basis-to-form map).
int ideal_to_class(const FieldDescriptor& k, const IdealLattice& I, const ClassGroupDescriptor& G);

// An integral ideal whose class maps to the given class index.
IdealLattice form_to_ideal(const FieldDescriptor& k, const ClassGroupDescriptor& G, int cls);

}  // namespace rdzeta
