#include "rdzeta/factor.hpp"

#include <algorithm>
#include <mutex>

namespace rdzeta {
namespace {

std::vector<std::uint32_t> g_spf;  // g_spf[i] = smallest prime factor of i
std::mutex g_sieve_mutex;

void build_sieve(std::uint32_t limit) {
    g_spf.assign(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (g_spf[i] == 0) {
            for (std::uint64_t j = i; j <= limit; j += i)
                if (g_spf[j] == 0) g_spf[j] = i;
        }
    }
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for n < 2^64.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    u64 x = 2, y = 2, c = 1, d = 1;
    while (true) {
        x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mulmod(x, x, n) + c;
            if (x >= n) x -= n;
            y = mulmod(y, y, n) + c;
            if (y >= n) y -= n;
            y = mulmod(y, y, n) + c;
            if (y >= n) y -= n;
            u64 diff = x > y ? x - y : y - x;
            d = std::__gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_u64(u64 n, std::vector<std::pair<u64, int>>& out) {
    for (u64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.emplace_back(n, 1);
        return;
    }
    u64 d = pollard_rho(n);
    std::vector<std::pair<u64, int>> a, b;
    factor_u64(d, a);
    factor_u64(n / d, b);
    for (auto& [p, e] : a) {
        bool merged = false;
        for (auto& [q, f] : b)
            if (q == p) f += e, merged = true;
        if (!merged) b.emplace_back(p, e);
    }
    out.insert(out.end(), b.begin(), b.end());
}

}  // namespace

void ensure_sieve(std::uint32_t limit) {
    std::lock_guard<std::mutex> lock(g_sieve_mutex);
    if (g_spf.size() < static_cast<std::size_t>(limit) + 1) build_sieve(limit);
}

std::uint32_t sieve_limit() {
    return g_spf.empty() ? 0 : static_cast<std::uint32_t>(g_spf.size() - 1);
}

void factorize_u32(std::uint32_t m, std::vector<std::pair<std::uint32_t, int>>& out) {
    out.clear();
    while (m > 1) {
        std::uint32_t p = g_spf[m];
        int e = 0;
        while (m % p == 0) m /= p, ++e;
        out.emplace_back(p, e);
    }
}

std::int64_t sigma_u32(std::uint32_t m) {
    std::int64_t s = 1;
    while (m > 1) {
        std::uint32_t p = g_spf[m];
        std::int64_t pk = 1, term = 1;
        while (m % p == 0) {
            m /= p;
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

FactorProfile factorize(const Int& m) {
    if (m < 1) throw std::domain_error("factorize: argument must be positive");
    FactorProfile f;
    f.value = m;
    if (!m.fits_ulong_p())
        throw std::overflow_error("factorize: input exceeds 64-bit desk scale");
    u64 n = m.get_ui();
    std::vector<std::pair<u64, int>> raw;
    factor_u64(n, raw);
    std::sort(raw.begin(), raw.end());
    for (auto& [p, e] : raw) {
        f.factors.emplace_back(Int(static_cast<unsigned long>(p)), e);
        if (p != 2) ++f.odd_prime_count;
    }
    return f;
}

Int sigma(const Int& m) {
    if (m < 1) throw std::domain_error("sigma: argument must be positive");
    if (m.fits_ulong_p()) {
        u64 n = m.get_ui();
        if (sieve_limit() >= n) return Int(static_cast<long>(sigma_u32(static_cast<std::uint32_t>(n))));
    }
    FactorProfile f = factorize(m);
    Int s = 1;
    for (auto& [p, e] : f.factors) {
        Int pk = 1, term = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

bool is_squarefree(const Int& m) { return factorize(m).is_squarefree(); }

bool is_prime(const Int& m) {
    if (m < 2) return false;
    if (!m.fits_ulong_p()) throw std::overflow_error("is_prime: input exceeds 64-bit desk scale");
    return is_prime_u64(m.get_ui());
}

std::vector<Int> divisors(const FactorProfile& f) {
    std::vector<Int> ds{Int(1)};
    for (auto& [p, e] : f.factors) {
        std::size_t base = ds.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    return ds;
}

}  // namespace rdzeta
