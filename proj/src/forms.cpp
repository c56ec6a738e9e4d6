#include "rdzeta/forms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "rdzeta/factor.hpp"

namespace rdzeta {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 isqrt64(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

i64 pmod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

// g = u*a + v*b
i64 xgcd(i64 a, i64 b, i64& u, i64& v) {
    i64 u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
        t = v0 - q * v1;
        v0 = v1;
        v1 = t;
    }
    if (a < 0) {
        a = -a;
        u0 = -u0;
        v0 = -v0;
    }
    u = u0;
    v = v0;
    return a;
}

void check_disc(const BinaryForm& f) {
    i64 D = f.disc();
    if (D <= 0) throw std::domain_error("form discriminant must be positive");
    i64 s = isqrt64(D);
    if (s * s == D) throw std::domain_error("form discriminant must be non-square");
}

}  // namespace

bool is_reduced(const BinaryForm& f) {
    i64 D = f.disc();
    if (D <= 0 || f.b <= 0) return false;
    if (f.b * f.b >= D) return false;
    i64 ta = 2 * (f.a < 0 ? -f.a : f.a);
    // sqrt(D) - b < 2|a| < sqrt(D) + b, exact via squaring
    if ((ta + f.b) * (ta + f.b) <= D) return false;
    if (ta > f.b && (ta - f.b) * (ta - f.b) >= D) return false;
    return true;
}

BinaryForm rho(const BinaryForm& f) {
    i64 D = f.disc();
    i64 s = isqrt64(D);
    i64 ac = f.c < 0 ? -f.c : f.c;
    i64 t = 2 * ac;
    // b' = -b (mod 2|c|), placed in the standard window
    i64 bp;
    if (ac > s) {
        bp = pmod(-f.b, t);
        if (bp > ac) bp -= t;
    } else {
        bp = pmod(-f.b, t);
        i64 hi = s;  // window (s - 2|c|, s]
        bp = hi - pmod(hi - bp, t);
    }
    i64 cp = static_cast<i64>(((i128)bp * bp - D) / (4 * (i128)f.c));
    return {f.c, bp, cp};
}

BinaryForm reduce(const BinaryForm& f) {
    check_disc(f);
    BinaryForm g = f;
    for (int guard = 0; guard < 4096; ++guard) {
        if (is_reduced(g)) return g;
        g = rho(g);
    }
    throw std::logic_error("reduce: did not terminate");
}

BinaryForm principal_form(i64 D) {
    i64 s = isqrt64(D);
    i64 b = (s % 2 == (((D % 2) + 2) % 2)) ? s : s - 1;
    return {1, b, (b * b - D) / 4};
}

BinaryForm compose(const BinaryForm& f, const BinaryForm& g) {
    if (f.disc() != g.disc()) throw std::domain_error("compose: mismatched discriminants");
    // Work with positive-a representatives; in a reduced cycle the sign of a
    // alternates, so one rho step suffices.
    BinaryForm fp = reduce(f), gp = reduce(g);
    if (fp.a < 0) fp = rho(fp);
    if (gp.a < 0) gp = rho(gp);
    i64 a1 = fp.a, b1 = fp.b, c1 = fp.c;
    i64 a2 = gp.a, b2 = gp.b, c2 = gp.c;
    if (std::abs(a1) > std::abs(a2)) {
        std::swap(a1, a2);
        std::swap(b1, b2);
        std::swap(c1, c2);
    }
    i64 s = (b1 + b2) / 2;
    i64 n = b2 - s;

    i64 y1, dd;
    if (a1 != 0 && a2 % a1 == 0) {
        y1 = 0;
        dd = std::abs(a1);
    } else {
        i64 u, v;
        dd = xgcd(a2, a1, u, v);
        y1 = u;
    }
    i64 x2, y2, d1;
    if (s % dd == 0) {
        x2 = 0;
        y2 = -1;
        d1 = dd;
    } else {
        i64 u, v;
        d1 = xgcd(s, dd, u, v);
        x2 = u;
        y2 = -v;
    }
    i64 v1 = a1 / d1, v2 = a2 / d1;
    i64 r = pmod(y1 * y2 * n - x2 * c2, std::abs(v1));
    i64 b3 = b2 + 2 * v2 * r;
    i64 a3 = v1 * v2;
    i64 c3 = (c2 * d1 + r * (b2 + v2 * r)) / v1;
    return reduce(BinaryForm{a3, b3, c3});
}

int ClassGroupDescriptor::class_of_reduced(const BinaryForm& f) const {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (std::binary_search(cycles[i].begin(), cycles[i].end(), f)) return static_cast<int>(i);
    }
    throw std::logic_error("class_of_reduced: form not in any cycle");
}

int ClassGroupDescriptor::inverse_class(int i) const {
    for (int j = 0; j < h(); ++j)
        if (table[i][j] == principal) return j;
    throw std::logic_error("inverse_class: no inverse found");
}

int ClassGroupDescriptor::mu() const {
    FactorProfile f = factorize(Int(static_cast<long>(D)));
    return f.odd_prime_count + (mod_floor(Int(static_cast<long>(D)), 2) == 0 ? 1 : 0);
}

ClassGroupDescriptor all_classes(std::int64_t D) {
    if (D <= 0) throw std::domain_error("all_classes: discriminant must be positive");
    {
        i64 s0 = isqrt64(D);
        if (s0 * s0 == D) throw std::domain_error("all_classes: discriminant must be non-square");
    }
    ensure_sieve(static_cast<std::uint32_t>(D / 4 + 2));

    i64 s = isqrt64(D);
    // Enumerate reduced forms: b = D (mod 2), 0 < b <= s, a*c = (b^2-D)/4.
    std::vector<BinaryForm> forms;
    std::vector<std::pair<std::uint32_t, int>> fac;
    std::vector<i64> divs;
    for (i64 b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
        i64 m = (D - b * b) / 4;
        if (m <= 0) break;
        factorize_u32(static_cast<std::uint32_t>(m), fac);
        divs.assign(1, 1);
        for (auto& [p, e] : fac) {
            std::size_t base = divs.size();
            i64 pk = 1;
            for (int i = 1; i <= e; ++i) {
                pk *= p;
                for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
            }
        }
        for (i64 e : divs) {
            i64 ta = 2 * e;
            if ((ta + b) * (ta + b) <= D) continue;
            if (ta > b && (ta - b) * (ta - b) >= D) continue;
            forms.push_back({e, b, -(m / e)});
            forms.push_back({-e, b, m / e});
        }
    }
    std::sort(forms.begin(), forms.end());

    ClassGroupDescriptor G;
    G.D = D;
    std::map<BinaryForm, int> cycle_of;
    for (auto& f : forms) {
        if (cycle_of.count(f)) continue;
        int id = static_cast<int>(G.cycles.size());
        std::vector<BinaryForm> cyc;
        BinaryForm g = f;
        while (!cycle_of.count(g)) {
            cycle_of[g] = id;
            cyc.push_back(g);
            g = rho(g);
            if (!is_reduced(g)) throw std::logic_error("all_classes: rho left the reduced set");
        }
        if (!(g == f)) throw std::logic_error("all_classes: cycle did not close at its start");
        std::sort(cyc.begin(), cyc.end());
        G.cycles.push_back(std::move(cyc));
    }
    for (auto& cyc : G.cycles) G.reps.push_back(cyc.front());

    int h = G.h();
    G.principal = cycle_of.at(reduce(principal_form(D)));
    G.table.assign(h, std::vector<int>(h, 0));
    for (int i = 0; i < h; ++i) {
        for (int j = i; j < h; ++j) {
            int c = cycle_of.at(compose(G.reps[i], G.reps[j]));
            G.table[i][j] = c;
            G.table[j][i] = c;
        }
    }

    G.element_orders.assign(h, 0);
    for (int i = 0; i < h; ++i) {
        int x = i, ord = 1;
        while (x != G.principal) {
            x = G.table[x][i];
            ++ord;
            if (ord > h) throw std::logic_error("all_classes: element order exceeds group order");
        }
        G.element_orders[i] = ord;
    }

    // Invariant factors from order statistics, prime by prime: the counts
    // #{x : x^{p^k} = e} determine the conjugate partition of the p-group.
    std::map<i64, std::vector<int>> p_partitions;  // prime -> partition (descending)
    FactorProfile hf = factorize(Int(h));
    for (auto& [pz, e] : hf.factors) {
        i64 p = to_i64(pz);
        std::vector<i64> counts;  // counts[k] = #{x : ord(x) | p^k}
        counts.push_back(1);
        for (int k = 1;; ++k) {
            i64 pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            i64 c = 0;
            for (int i = 0; i < h; ++i)
                if (pk % G.element_orders[i] == 0) ++c;
            counts.push_back(c);
            if (c == counts[k - 1]) break;  // stabilized: full p-Sylow reached
        }
        std::vector<int> conj;  // conj[k-1] = #parts >= k
        for (std::size_t k = 1; k < counts.size(); ++k) {
            i64 ratio = counts[k] / counts[k - 1];
            int dk = 0;
            while (ratio > 1) {
                ratio /= p;
                ++dk;
            }
            if (dk > 0) conj.push_back(dk);
        }
        int nparts = conj.empty() ? 0 : conj.front();
        std::vector<int> parts;
        for (int i = 1; i <= nparts; ++i) {
            int lam = 0;
            for (int dk : conj)
                if (dk >= i) ++lam;
            parts.push_back(lam);
        }
        std::sort(parts.rbegin(), parts.rend());
        p_partitions[p] = parts;
    }
    std::size_t chain_len = 0;
    for (auto& [p, parts] : p_partitions) chain_len = std::max(chain_len, parts.size());
    std::vector<Int> inv(chain_len, Int(1));
    for (auto& [p, parts] : p_partitions) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Int pk = 1;
            for (int j = 0; j < parts[i]; ++j) pk *= static_cast<long>(p);
            inv[i] *= pk;
        }
    }
    std::reverse(inv.begin(), inv.end());  // ascending divisibility chain
    G.invariant_factors = std::move(inv);
    return G;
}

int ideal_to_class(const FieldDescriptor& k, const IdealLattice& I, const ClassGroupDescriptor& G) {
    Int q = gcd(gcd(I.A, I.B), I.C);
    Int a = exact_div(I.A, q), B = exact_div(I.B, q), C = exact_div(I.C, q);
    if (C != 1) throw std::logic_error("ideal_to_class: primitive part not in [a, b+omega] form");
    // oriented basis (a, -(B+omega)) -> form (a, -(2B+Tr omega), N(B+omega)/a)
    Int t = k.omega_kind == OmegaKind::half_one_plus_sqrt_d ? 1 : 0;
    Int bf = -(2 * B + t);
    QuadraticNumber beta = k.omega() + QuadraticNumber::from_integer(B, k.d);
    Rat nb = beta.norm();
    Int cf = exact_div(nb.get_num(), nb.get_den() * a);
    BinaryForm f{to_i64(a), to_i64(bf), to_i64(cf)};
    if (f.disc() != to_i64(k.D)) throw std::logic_error("ideal_to_class: discriminant mismatch");
    return G.class_of_reduced(reduce(f));
}

IdealLattice form_to_ideal(const FieldDescriptor& k, const ClassGroupDescriptor& G, int cls) {
    for (const BinaryForm& f : G.cycles[cls]) {
        if (f.a <= 0) continue;
        // [a, (-b + sqrt D)/2]
        QuadraticNumber beta = k.D == k.d ? QuadraticNumber(Int(-f.b), Int(1), k.d)
                                          : QuadraticNumber(Int(-f.b), Int(2), k.d);
        IdealLattice I = ideal_from_pair(k, Int(static_cast<long>(f.a)), beta);
        return I;
    }
    throw std::logic_error("form_to_ideal: cycle has no positive-a form");
}

}  // namespace rdzeta
