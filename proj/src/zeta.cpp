#include "rdzeta/zeta.hpp"

#include "rdzeta/dedekind.hpp"
#include "rdzeta/factor.hpp"

namespace rdzeta {

Rat zagier_zeta_minus1_disc(const Int& D) {
    if (D <= 0 || is_square(D) || (mod_floor(D, 4) != 0 && mod_floor(D, 4) != 1))
        throw std::domain_error("zagier sum: not a positive non-square discriminant");
    Int s = isqrt(D);
    Int sum = 0;
    for (Int t = -s; t <= s; ++t) {
        Int tt = t * t;
        if (tt >= D) continue;  // strict |t| < sqrt(D)
        if (mod_floor(D - tt, 4) != 0) continue;
        sum += sigma(exact_div(D - tt, Int(4)));
    }
    return make_rat(sum, Int(60));
}

Rat zagier_zeta_minus1(const FieldDescriptor& k) { return zagier_zeta_minus1_disc(k.D); }

UnitActionMatrix unit_action_matrix(const FieldDescriptor& k, const IdealLattice& I) {
    QuadraticNumber r1 = I.r1(), r2 = I.r2();
    QuadraticNumber eps = k.epsilon, epsc = eps.conjugate();
    Int sdelta = delta_coefficient(I);  // delta = sdelta * sqrt(d)

    // Trace route: for x = (u+v sqrt d)/2, Tr(x / (s sqrt d)) = v/s.
    auto trace_entry = [&](const QuadraticNumber& num) {
        if (mod_floor(num.v, sdelta) != 0)
            throw std::logic_error("unit_action_matrix: non-integral trace entry");
        return exact_div(num.v, sdelta);
    };
    QuadraticNumber r2c = r2.conjugate();
    UnitActionMatrix M;
    M.a = trace_entry(r1 * r2c * eps);
    M.b = trace_entry(r1 * r1 * epsc);  // r1 rational, so r1*r1' = r1*r1
    M.c = trace_entry(r2 * r2c * eps);
    M.d = trace_entry(r1 * r2c * epsc);

    // Linear-solve route: express eps*r1 and eps*r2 in the basis (r1, r2).
    // r1 = A, r2 = (u2+v2 sqrt d)/2: coefficient of r2 is v/v2, remainder over A.
    auto solve_row = [&](const QuadraticNumber& x, Int& s1, Int& s2) {
        if (mod_floor(x.v, r2.v) != 0)
            throw std::logic_error("unit_action_matrix: linear solve non-integral (r2 coeff)");
        s2 = exact_div(x.v, r2.v);
        Int rem = x.u - s2 * r2.u;  // = 2*s1*A
        if (mod_floor(rem, 2 * I.A) != 0)
            throw std::logic_error("unit_action_matrix: linear solve non-integral (r1 coeff)");
        s1 = exact_div(rem, 2 * I.A);
    };
    Int a2, b2, c2, d2;
    solve_row(eps * r1, a2, b2);
    solve_row(eps * r2, c2, d2);
    if (a2 != M.a || b2 != M.b || c2 != M.c || d2 != M.d)
        throw std::logic_error("unit_action_matrix: trace and linear-solve routes disagree");

    if (M.det() != k.epsilon_norm)
        throw std::logic_error("unit_action_matrix: det(M) != N(eps)");
    if (M.b == 0 || M.c == 0) throw std::logic_error("unit_action_matrix: bc = 0");
    return M;
}

PartialZetaReport lang_partial_zeta(const FieldDescriptor& k, const IdealLattice& I) {
    PartialZetaReport rep;
    rep.ideal = I;
    rep.M = unit_action_matrix(k, I);
    Int sdelta = delta_coefficient(I);
    rep.sgn_delta = sign_of(sdelta);

    const Int &a = rep.M.a, &c = rep.M.c, &dd = rep.M.d;
    if (c == 0) throw std::domain_error("lang_partial_zeta: degenerate basis; re-order");
    Int cabs = abs(c);
    Int c3abs = cabs * cabs * cabs;  // c^3 * sgn(c)

    Rat s3a = dedekind_sum(3, a, cabs);
    Rat s2a = dedekind_sum(2, a, cabs);
    Rat s3d = dedekind_sum(3, dd, cabs);
    Rat s2d = dedekind_sum(2, dd, cabs);

    Int tr = a + dd;
    Rat bracket = Rat(tr * tr * tr - 6 * tr * k.epsilon_norm);
    bracket -= Rat(240 * c3abs) * s3a;
    bracket += Rat(180 * a * c3abs) * s2a;
    bracket -= Rat(240 * c3abs) * s3d;
    bracket += Rat(180 * dd * c3abs) * s2d;

    Rat n2 = I.r2().norm();  // r2 * r2'
    Rat pref = Rat(rep.sgn_delta) * n2 / (Rat(360) * Rat(I.norm()) * Rat(c * c * c));
    rep.value = pref * bracket;
    rep.value.canonicalize();
    return rep;
}

Rat closed_principal_zeta(const FieldDescriptor& k) {
    if (k.d == 5 && k.r == 1)
        throw std::domain_error("unit exception: closed form invalid at d=5 with eps != n+sqrt d");
    const Int& n = k.n;
    Int n3 = n * n * n;
    // The three branches come from the three fundamental-unit shapes:
    // eps = (n+sqrt d)/2 for r=4, eps = n+sqrt d for r=1.
    if (k.r == 4) return make_rat(n3 + 11 * n, Int(360));
    if (mod_floor(k.d, 4) == 1) return make_rat(n3 + 14 * n, Int(360));
    return make_rat(4 * n3 + 11 * n, Int(180));
}

Rat closed_split_class_zeta(const FieldDescriptor& k, const Int& p) {
    if (k.r != 1)
        throw std::domain_error("closed_split_class_zeta: derived for the n^2+1 unit shape only");
    const Int& n = k.n;
    Int n3 = n * n * n;
    bool one_mod4 = mod_floor(k.d, 4) == 1;
    if (p == 2) {
        if (one_mod4) {
            if (mod_floor(k.d, 8) != 1)
                throw std::domain_error("closed_split_class_zeta: 2 is inert (d = 5 mod 8)");
            return make_rat(n3 + 104 * n, Int(1440));
        }
        return make_rat(n3 + 14 * n, Int(180));
    }
    if (mod_floor(n, p) != 0)
        throw std::domain_error("closed_split_class_zeta: p does not divide n");
    Int p2 = p * p, p4 = p2 * p2;
    if (one_mod4) return make_rat(n3 + n * (4 * p4 + 10 * p2), 360 * p2);
    return make_rat(4 * n3 + n * (p4 + 10 * p2), 180 * p2);
}

Rat closed_split_class_squared_zeta(const FieldDescriptor& k, const Int& p) {
    // Valid only where the derivation holds: odd part of n is p^t, t >= 2
    // (so the squared prime still yields a two-element integral basis whose
    // Dedekind sums reduce through the unit-argument closed forms).
    if (k.r != 1 || mod_floor(k.d, 4) != 1)
        throw std::domain_error("closed_split_class_squared_zeta: case mismatch");
    Int odd = k.n;
    while (mod_floor(odd, 2) == 0) odd = exact_div(odd, Int(2));
    Int pt = odd;
    int t = 0;
    while (pt > 1 && mod_floor(pt, p) == 0) {
        pt = exact_div(pt, p);
        ++t;
    }
    if (pt != 1 || t < 2)
        throw std::domain_error("closed_split_class_squared_zeta: odd part of n is not p^t, t >= 2");
    const Int& n = k.n;
    Int p2 = p * p, p4 = p2 * p2, p8 = p4 * p4;
    return make_rat(n * n * n + n * (4 * p8 + 10 * p4), 360 * p4);
}

ClassZetaBreakdown zeta_minus1_by_classes(const FieldDescriptor& k, const ClassGroupDescriptor& G,
                                          bool check_against_zagier) {
    ClassZetaBreakdown out;
    out.total = Rat(0);
    for (int i = 0; i < G.h(); ++i) {
        IdealLattice I = form_to_ideal(k, G, i);
        out.per_class.push_back(lang_partial_zeta(k, I));
        out.total += out.per_class.back().value;
    }
    out.total.canonicalize();
    if (check_against_zagier && out.total != zagier_zeta_minus1(k))
        throw std::logic_error("zeta_minus1_by_classes: class sum disagrees with Zagier for d = " +
                               k.d.get_str());
    return out;
}

}  // namespace rdzeta
