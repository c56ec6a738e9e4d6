#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rdzeta/numeric.hpp"

namespace rdzeta {

// Complete prime factorization of a positive integer, primes strictly
// increasing. odd_prime_count is the number of distinct odd primes
// (the paper's script-N for n).
struct FactorProfile {
    Int value;
    std::vector<std::pair<Int, int>> factors;  // (prime, exponent)
    int odd_prime_count = 0;

    bool is_squarefree() const {
        for (auto& [p, e] : factors)
            if (e > 1) return false;
        return true;
    }
    // Exponent of p in value, 0 if p does not divide it.
    int exponent_of(const Int& p) const {
        for (auto& [q, e] : factors)
            if (q == p) return e;
        return 0;
    }
};

// Sum of positive divisors. Throws on m <= 0.
Int sigma(const Int& m);

// Trial division to 1e6 with a Miller-Rabin / Pollard-rho fallback;
// deterministic for inputs below 2^64 (desk scale is far below that).
FactorProfile factorize(const Int& m);

bool is_squarefree(const Int& m);

// All positive divisors of m, unsorted order deterministic.
std::vector<Int> divisors(const FactorProfile& f);

bool is_prime(const Int& m);

// Smallest-prime-factor sieve shared by the form-enumeration and
// Zagier paths. Grows on demand; not thread-safe to grow concurrently,
// call ensure_sieve once up front when parallelizing.
void ensure_sieve(std::uint32_t limit);
std::uint32_t sieve_limit();

// Fast paths for sieve-range inputs (used in hot loops).
std::int64_t sigma_u32(std::uint32_t m);
void factorize_u32(std::uint32_t m, std::vector<std::pair<std::uint32_t, int>>& out);

}  // namespace rdzeta
