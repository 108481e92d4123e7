#include "heckelab/sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heckelab {

namespace {
constexpr uint64_t kSegment = 1u << 20;
}

SieveTables build_sieve(uint64_t n_max) {
    if (n_max == 0 || n_max > kSieveHardCap)
        throw std::invalid_argument("sieve n_max must be in [1, " + std::to_string(kSieveHardCap) +
                                    "]");
    SieveTables t;
    t.n_max = n_max;
    t.mangoldt.assign(n_max + 1, 0.0);
    t.mobius.assign(n_max + 1, 0);
    t.prime_bits.assign(n_max / 64 + 1, 0);
    t.smallest_factor.assign(n_max + 1, 0);
    t.mobius[1] = 1;
    t.smallest_factor[1] = 1;
    if (n_max == 1) return t;

    // base primes up to sqrt(n_max)
    uint64_t root = uint64_t(std::sqrt(double(n_max)));
    while (root * root > n_max) --root;
    while ((root + 1) * (root + 1) <= n_max) ++root;
    std::vector<uint32_t> base;
    {
        std::vector<char> comp(root + 1, 0);
        for (uint64_t i = 2; i <= root; ++i) {
            if (comp[i]) continue;
            base.push_back(uint32_t(i));
            for (uint64_t j = i * i; j <= root; j += i) comp[j] = 1;
        }
    }

    // smallest prime factor, one segment at a time; marking in ascending
    // prime order leaves the smallest factor in place
    for (uint64_t lo = 2; lo <= n_max; lo += kSegment) {
        const uint64_t hi = std::min(n_max, lo + kSegment - 1);
        for (uint32_t p : base) {
            uint64_t start = std::max<uint64_t>(uint64_t(p) * p, (lo + p - 1) / p * p);
            for (uint64_t m = start; m <= hi; m += p)
                if (t.smallest_factor[m] == 0) t.smallest_factor[m] = p;
        }
        // every composite has a factor <= sqrt(n_max), so unmarked means prime
        for (uint64_t n = lo; n <= hi; ++n) {
            if (t.smallest_factor[n] == 0) {
                t.smallest_factor[n] = uint32_t(n);
                t.prime_bits[n >> 6] |= uint64_t(1) << (n & 63);
            }
        }
    }

    // mu and Lambda from the factor chain
    for (uint64_t n = 2; n <= n_max; ++n) {
        uint64_t m = n;
        uint32_t p = t.smallest_factor[n];
        int omega = 0;
        bool squarefree = true;
        while (m > 1) {
            uint32_t q = t.smallest_factor[m];
            int e = 0;
            while (m % q == 0) {
                m /= q;
                ++e;
            }
            if (e > 1) squarefree = false;
            ++omega;
        }
        t.mobius[n] = squarefree ? (omega % 2 ? -1 : 1) : 0;
        // Lambda(n) = log p iff n is a power of p
        uint64_t r = n;
        while (r % p == 0) r /= p;
        if (r == 1) t.mangoldt[n] = std::log(double(p));
    }
    return t;
}

uint64_t divisor_count(uint64_t n, const SieveTables& tables) {
    uint64_t d = 1;
    while (n > 1) {
        uint32_t p = tables.smallest_factor[n];
        uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        d *= e + 1;
    }
    return d;
}

DivisorPowerSum divisor_power_sum(int k, int l, uint64_t x, const SieveTables& tables) {
    if (k < 2 || l < 1) throw std::invalid_argument("need k >= 2 and l >= 1");
    if (x == 0 || x > tables.n_max) throw std::out_of_range("x exceeds sieve table size");
    double sum = 0;
    for (uint64_t n = 1; n <= x; ++n) {
        // tau_k multiplicative: at p^e it counts multisets, C(e+k-1, k-1)
        double tk = 1;
        uint64_t m = n;
        while (m > 1) {
            uint32_t p = tables.smallest_factor[m];
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            double c = 1;
            for (int i = 1; i <= e; ++i) c = c * (k - 1 + i) / i;
            tk *= c;
        }
        sum += std::pow(tk, double(l));
    }
    double power = std::pow(double(k), double(l)) - 1.0;
    double denom = double(x) * std::pow(std::log(2.0 * double(x)), power);
    return {sum, sum / denom};
}

}  // namespace heckelab
