#pragma once

#include <cstdint>
#include <vector>

namespace heckelab {

inline constexpr uint64_t kSieveHardCap = 100'000'000;

struct SieveTables {
    uint64_t n_max = 0;
    std::vector<double> mangoldt;         // Lambda(n), natural log; index n
    std::vector<int8_t> mobius;           // mu(n) in {-1, 0, 1}
    std::vector<uint64_t> prime_bits;     // bit n set iff n prime
    std::vector<uint32_t> smallest_factor;  // spf(n); spf(1) = 1

    bool is_prime(uint64_t n) const {
        return n <= n_max && (prime_bits[n >> 6] >> (n & 63)) & 1;
    }
};

// Fills all four tables with a segmented sieve (2^20-entry segments).
SieveTables build_sieve(uint64_t n_max);

struct DivisorPowerSum {
    double value;  // sum_{n<=x} tau_k(n)^l
    double ratio;  // value / (x * ln(2x)^(k^l - 1))
};

// tau_k(n) counts ordered factorizations of n into k parts, computed from
// the smallest-factor table.
DivisorPowerSum divisor_power_sum(int k, int l, uint64_t x, const SieveTables& tables);

// Number of divisors; used by several bound checks.
uint64_t divisor_count(uint64_t n, const SieveTables& tables);

}  // namespace heckelab
