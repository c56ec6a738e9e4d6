#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rdzeta/bernoulli.hpp"
#include "rdzeta/dedekind.hpp"

using namespace rdzeta;

namespace {

// Definition-level oracle, written straight from the periodic-Bernoulli
// definition with no integer-accumulator tricks.
Rat naive_sum(int p, long h, long k) {
    Rat s(0);
    for (long a = 0; a < k; ++a) {
        s += periodic_bernoulli(4 - p, make_rat(a, k)) * periodic_bernoulli(p, make_rat(h * a, k));
    }
    return s;
}

}  // namespace

TEST_CASE("spot values") {
    CHECK(dedekind_sum(2, Int(1), Int(1)) == make_rat(1, 36));
    CHECK(dedekind_sum(3, Int(3), Int(4)) == make_rat(3, 128));
    CHECK(dedekind_sum(2, Int(3), Int(4)) == make_rat(41, 1152));
    CHECK(dedekind_sum(3, Int(1), Int(2)) == Rat(0));
    CHECK_THROWS_AS(dedekind_sum(2, Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(dedekind_sum(4, Int(1), Int(3)), std::domain_error);
}

TEST_CASE("integer accumulator matches the rational definition") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> kd(1, 120), hd(-200, 200);
    for (int i = 0; i < 200; ++i) {
        long k = kd(rng), h = hd(rng);
        int p = 1 + static_cast<int>(rng() % 3);
        CHECK(dedekind_sum(p, Int(h), Int(k)) == naive_sum(p, h, k));
    }
}

TEST_CASE("closed form spot values") {
    CHECK(closed_form_unit(3, 1, Int(3)) == make_rat(-1, 81));
    CHECK(closed_form_unit(2, -1, Int(2)) == make_rat(5, 144));
    CHECK(closed_form_unit(3, -1, Int(1)) == Rat(0));
    CHECK_THROWS_AS(closed_form_unit(1, 1, Int(3)), std::domain_error);

    CHECK(closed_form_near_half(3, 1, Int(2)) == make_rat(3, 128));
    CHECK(closed_form_near_half(2, -1, Int(4)) == make_rat(185, 9216));
    CHECK(closed_form_near_half(1, 1, Int(2)) == make_rat(3, 128));
    CHECK_THROWS_AS(closed_form_near_half(2, 1, Int(3)), std::domain_error);
}

TEST_CASE("closed forms agree with direct summation") {
    for (long m = 1; m <= 200; ++m) {
        for (int p : {2, 3}) {
            CHECK(dedekind_sum(p, Int(1), Int(m)) == closed_form_unit(p, 1, Int(m)));
            CHECK(dedekind_sum(p, Int(-1), Int(m)) == closed_form_unit(p, -1, Int(m)));
        }
    }
    for (long m = 2; m <= 200; m += 2) {
        for (int p : {1, 2, 3}) {
            CHECK(dedekind_sum(p, Int(m + 1), Int(2 * m)) == closed_form_near_half(p, 1, Int(m)));
            CHECK(dedekind_sum(p, Int(m - 1), Int(2 * m)) == closed_form_near_half(p, -1, Int(m)));
        }
    }
}

TEST_CASE("periodicity and parity in h") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> kd(1, 500), hd(-1000, 1000);
    for (int i = 0; i < 150; ++i) {
        long k = kd(rng), h = hd(rng);
        int p = 1 + static_cast<int>(rng() % 3);
        CHECK(dedekind_sum(p, Int(h + k), Int(k)) == dedekind_sum(p, Int(h), Int(k)));
    }
    for (int i = 0; i < 150; ++i) {
        long k = kd(rng), h = hd(rng);
        CHECK(dedekind_sum(3, Int(-h), Int(k)) == -dedekind_sum(3, Int(h), Int(k)));
        CHECK(dedekind_sum(2, Int(-h), Int(k)) == dedekind_sum(2, Int(h), Int(k)));
    }
}

TEST_CASE("involution: h^2 = 1 (mod k) swaps S^1 and S^3") {
    for (long k = 1; k <= 60; ++k) {
        for (long h = 0; h < k; ++h) {
            if ((h * h) % k != 1 % k) continue;
            CHECK(dedekind_sum(1, Int(h), Int(k)) == dedekind_sum(3, Int(h), Int(k)));
        }
    }
}
