#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "heckelab/sieve.hpp"

using namespace heckelab;

namespace {

double trial_mangoldt(uint64_t n) {
    if (n < 2) return 0;
    uint64_t p = 0, m = n;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return std::log(double(n));
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(double(p)) : 0;
}

}  // namespace

TEST_CASE("definitional spot values") {
    const auto& sv = testing::sieve_20k();
    CHECK(sv.mangoldt[1] == 0.0);
    CHECK(sv.mobius[1] == 1);
    CHECK(sv.mangoldt[8] == std::log(2.0));
    CHECK(sv.mobius[8] == 0);
    CHECK(sv.mangoldt[10] == 0.0);
    CHECK(sv.mobius[10] == 1);
    CHECK(sv.mobius[30] == -1);
    CHECK(sv.smallest_factor[1] == 1);
    CHECK(sv.smallest_factor[12] == 2);
    CHECK(sv.smallest_factor[49] == 7);
    CHECK(sv.smallest_factor[9973] == 9973);
    CHECK(sv.is_prime(2));
    CHECK(sv.is_prime(9973));
    CHECK_FALSE(sv.is_prime(1));
    CHECK_FALSE(sv.is_prime(9975));
}

TEST_CASE("mangoldt agrees with trial division") {
    const auto& sv = testing::sieve_20k();
    for (uint64_t n = 1; n <= 10'000; ++n) CHECK(sv.mangoldt[n] == trial_mangoldt(n));
}

TEST_CASE("mobius divisor sums collapse") {
    const auto& sv = testing::sieve_20k();
    for (uint64_t n = 1; n <= 10'000; ++n) {
        int s = 0;
        for (uint64_t d = 1; d * d <= n; ++d) {
            if (n % d) continue;
            s += sv.mobius[d];
            if (d != n / d) s += sv.mobius[n / d];
        }
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("segment boundaries are seamless") {
    const SieveTables sv = build_sieve((1u << 20) + 200);
    for (uint64_t n = (1u << 20) - 64; n <= (1u << 20) + 64; ++n) {
        CHECK(sv.mangoldt[n] == trial_mangoldt(n));
        uint64_t spf = n;
        for (uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                spf = d;
                break;
            }
        CHECK(sv.smallest_factor[n] == spf);
    }
}

TEST_CASE("chebyshev scale sanity at 10^6") {
    const auto& sv = testing::sieve_1m();
    double psi = 0;
    for (uint64_t n = 1; n <= 1'000'000; ++n) psi += sv.mangoldt[n];
    const double ratio = psi / 1e6;
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
}

TEST_CASE("divisor power sums") {
    const auto& sv = testing::sieve_20k();
    CHECK(divisor_power_sum(2, 1, 4, sv).value == 8.0);   // 1+2+2+3
    CHECK(divisor_power_sum(5, 3, 1, sv).value == 1.0);   // tau_k(1) = 1
    // brute force sum of d(n)^2 over n <= 10
    double brute = 0;
    for (uint64_t n = 1; n <= 10; ++n) {
        int d = 0;
        for (uint64_t k = 1; k <= n; ++k) d += n % k == 0;
        brute += double(d) * d;
    }
    CHECK(brute == 83.0);
    CHECK(divisor_power_sum(2, 2, 10, sv).value == 83.0);
    CHECK_THROWS_AS(divisor_power_sum(2, 1, 30'000, sv), std::out_of_range);
    CHECK_THROWS_AS(divisor_power_sum(1, 1, 10, sv), std::invalid_argument);
}

TEST_CASE("divisor average ratio stays bounded") {
    const auto& sv = testing::sieve_1m();
    for (auto [k, l] : {std::pair{2, 1}, std::pair{2, 2}}) {
        const double lo = divisor_power_sum(k, l, 1u << 10, sv).ratio;
        const double hi = divisor_power_sum(k, l, 1u << 20, sv).ratio;
        CAPTURE(k);
        CAPTURE(l);
        CHECK(hi <= 2.0 * lo);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(build_sieve(0), std::invalid_argument);
    CHECK_THROWS_AS(build_sieve(kSieveHardCap + 1), std::invalid_argument);
    const SieveTables one = build_sieve(1);
    CHECK(one.mobius[1] == 1);
    CHECK(one.mangoldt[1] == 0.0);
}
