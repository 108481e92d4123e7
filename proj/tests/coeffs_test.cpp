#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "fixtures.hpp"
#include "heckelab/coeffs.hpp"
#include "heckelab/errors.hpp"
#include "tau_oracle.hpp"

using namespace heckelab;

TEST_CASE("oracle pins the first coefficients") {
    const auto tau = testing::naive_tau(12);
    const long long expected[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643,
                                  -115920, 534612, -370944};
    for (int n = 1; n <= 12; ++n) CHECK(tau[n] == __int128(expected[n]));
    CHECK(tau[6] == tau[2] * tau[3]);  // coprime product, forced at gcd = 1
}

TEST_CASE("table matches the oracle bit for bit") {
    const auto oracle = testing::naive_tau(1000);
    const TauTable tau = build_tau_table(1000);
    for (uint64_t n = 1; n <= 1000; ++n) CHECK(tau.value_i128(n) == oracle[n]);
}

TEST_CASE("tiny tables") {
    const TauTable t1 = build_tau_table(1);
    CHECK(t1.value_i128(1) == 1);
    const TauTable t3 = build_tau_table(3);
    CHECK(t3.value_i128(2) == -24);
    CHECK(t3.value_i128(3) == 252);
    const TauTable t7 = build_tau_table(7);
    CHECK(t7.value_i128(7) == -16744);
    CHECK(t7.value_i128(6) == t7.value_i128(2) * t7.value_i128(3));
}

TEST_CASE("rebuild with a different valid basis is identical") {
    const TauTable full = build_tau_table(2000);
    CrtBasis alt = CrtBasis::default_basis();
    std::reverse(alt.primes.begin(), alt.primes.end());
    alt.primes.pop_back();  // four primes still satisfy the bound at this size
    const TauTable other = build_tau_table(2000, alt);
    REQUIRE(full.limbs() == other.limbs());
    CHECK(full.data() == other.data());
}

TEST_CASE("argument and basis validation") {
    CHECK_THROWS_AS(build_tau_table(0), std::invalid_argument);
    CHECK_THROWS_AS(build_tau_table(kTauHardCap + 1), std::invalid_argument);
    CrtBasis thin{{{167772161u, 3}, {469762049u, 3}}};
    CHECK_THROWS_AS(build_tau_table(1'000'000, thin), ConfigError);
    CrtBasis shallow{{{12289u, 11}}};  // 3*2^12+1 cannot host the transform
    CHECK_THROWS_AS(build_tau_table(10'000, shallow), ConfigError);
    try {
        build_tau_table(1'000'000, thin);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("bits") != std::string::npos);
    }
}

TEST_CASE("normalization values") {
    const LambdaTable lam = normalize(build_tau_table(16));
    CHECK(lam[1] == 1.0);
    CHECK(lam[2] == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-14));
    CHECK(lam[4] == -0.71875);  // -1472 / 2^11, exact in binary
}

TEST_CASE("hecke product identity cases") {
    const auto& lam = testing::lambda_20k();
    CHECK(hecke_product(3, 4, lam) == lam[3] * lam[4]);  // gcd 1: single term
    CHECK(hecke_product(2, 2, lam) == doctest::Approx(lam[2] * lam[2] - 1.0).epsilon(1e-15));
    CHECK(hecke_product(2, 2, lam) == doctest::Approx(-0.71875).epsilon(1e-12));
    for (uint64_t k : {1ull, 7ull, 360ull, 19999ull}) CHECK(hecke_product(1, k, lam) == lam[k]);
    CHECK_THROWS_AS(hecke_product(200, 200, lam), std::out_of_range);
    CHECK_THROWS_AS(hecke_product(0, 5, lam), std::invalid_argument);
}

TEST_CASE("multiplicative structure on a small window") {
    const auto& lam = testing::lambda_20k();
    const auto& sv = testing::sieve_20k();
    for (uint64_t m = 2; m * m <= 4000; ++m)
        for (uint64_t n = m + 1; m * n <= 4000; ++n)
            if (std::gcd(m, n) == 1)
                CHECK(std::abs(lam[m * n] - lam[m] * lam[n]) <= 1e-9);
    for (uint64_t p = 2; p * p <= 10'000; ++p)
        if (sv.is_prime(p))
            CHECK(std::abs(lam[p * p] - (lam[p] * lam[p] - 1.0)) <= 1e-9);
}

TEST_CASE("hecke recursion at prime powers is exact") {
    const TauTable tau = build_tau_table(20'000);
    const auto& sv = testing::sieve_20k();
    for (uint64_t p = 2; p * p <= tau.n_max(); ++p) {
        if (!sv.is_prime(p)) continue;
        __int128 p11 = 1;
        for (int i = 0; i < 11; ++i) p11 *= p;
        __int128 tp = tau.value_i128(p), prev = 1, cur = tp;
        for (uint64_t q = p * p; q <= tau.n_max(); q *= p) {
            const __int128 next = tp * cur - p11 * prev;
            CHECK(next == tau.value_i128(q));
            prev = cur;
            cur = next;
        }
    }
}

TEST_CASE("deligne bound at unit-test scale") {
    const auto& lam = testing::lambda_20k();
    const auto& sv = testing::sieve_20k();
    for (uint64_t n = 1; n <= lam.n_max; ++n)
        CHECK(std::abs(lam[n]) <= double(divisor_count(n, sv)) + 1e-12);
}

TEST_CASE("cache round trip and corruption detection") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "heckelab_cache_test";
    fs::create_directories(dir);
    const std::string path = (dir / "tau.bin").string();

    const TauTable tau = build_tau_table(300);
    save_tau_cache(path, tau);
    const TauTable back = load_tau_cache(path);
    REQUIRE(back.n_max() == tau.n_max());
    CHECK(back.data() == tau.data());

    SUBCASE("bad magic") {
        auto bytes = [&] {
            std::ifstream is(path, std::ios::binary);
            return std::string(std::istreambuf_iterator<char>(is), {});
        }();
        bytes[0] = 'X';
        std::ofstream(path, std::ios::binary) << bytes;
        CHECK_THROWS_WITH_AS(load_tau_cache(path), doctest::Contains("TAU1"), std::runtime_error);
    }
    SUBCASE("corrupted early record") {
        auto bytes = [&] {
            std::ifstream is(path, std::ios::binary);
            return std::string(std::istreambuf_iterator<char>(is), {});
        }();
        // header is 16 bytes; flip a byte inside record 5
        bytes[16 + 4 * 8 + 2] ^= 0x40;
        std::ofstream(path, std::ios::binary) << bytes;
        CHECK_THROWS_WITH_AS(load_tau_cache(path), doctest::Contains("TAU1"), std::runtime_error);
    }
    fs::remove_all(dir);
}
