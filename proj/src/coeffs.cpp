#include "heckelab/coeffs.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"

namespace heckelab {

namespace {

// Fixed-width magnitude arithmetic for Garner reconstruction; wide enough
// for any product of the default basis.
constexpr int kAccLimbs = 6;
using Acc = std::array<uint64_t, kAccLimbs>;

void acc_mul_add(Acc& x, uint64_t mul, uint64_t add) {
    unsigned __int128 carry = add;
    for (auto& limb : x) {
        unsigned __int128 t = (unsigned __int128)limb * mul + carry;
        limb = uint64_t(t);
        carry = t >> 64;
    }
    assert(carry == 0);
}

int acc_cmp(const Acc& a, const Acc& b) {
    for (int i = kAccLimbs; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

// a = b - a, requires b >= a
void acc_rsub(Acc& a, const Acc& b) {
    uint64_t borrow = 0;
    for (int i = 0; i < kAccLimbs; ++i) {
        uint64_t t = b[i] - a[i];
        uint64_t b2 = t > b[i];
        uint64_t t2 = t - borrow;
        borrow = b2 | (t2 > t);
        a[i] = t2;
    }
    assert(borrow == 0);
}

Acc acc_from(const std::vector<uint64_t>& v) {
    Acc a{};
    assert(v.size() <= kAccLimbs);
    for (std::size_t i = 0; i < v.size(); ++i) a[i] = v[i];
    return a;
}

uint64_t mulmod_u32(uint64_t a, uint64_t b, uint32_t p) { return a * b % p; }

uint64_t powmod_u32(uint64_t b, uint64_t e, uint32_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod_u32(r, b, p);
        b = mulmod_u32(b, b, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

uint32_t TauTable::limbs_for(uint64_t n_max) {
    std::vector<uint64_t> bound = bigu::pow_u64(n_max, 6);
    bigu::mul_small(bound, 2);
    unsigned bits = bigu::bit_length(bound) + 1;  // sign bit
    return (bits + 63) / 64;
}

__int128 TauTable::value_i128(uint64_t n) const {
    auto r = raw(n);
    const bool neg = negative(n);
    const uint64_t ext = neg ? ~uint64_t(0) : 0;
    for (std::size_t i = 2; i < r.size(); ++i)
        if (r[i] != ext) throw std::overflow_error("tau value exceeds 128 bits");
    uint64_t lo = r[0];
    uint64_t hi = r.size() > 1 ? r[1] : ext;
    if (r.size() == 2 && ((hi >> 63) != uint64_t(neg)))
        throw std::overflow_error("tau value exceeds 128 bits");
    unsigned __int128 u = ((unsigned __int128)hi << 64) | lo;
    return (__int128)u;
}

long double TauTable::value_ld(uint64_t n) const {
    auto r = raw(n);
    const bool neg = negative(n);
    long double x = 0.0L;
    if (!neg) {
        for (std::size_t i = r.size(); i-- > 0;) x = x * 18446744073709551616.0L + (long double)r[i];
        return x;
    }
    // magnitude = (~r as a multi-limb unsigned) + 1
    for (std::size_t i = r.size(); i-- > 0;) x = x * 18446744073709551616.0L + (long double)(~r[i]);
    return -(x + 1.0L);
}

TauTable build_tau_table(uint64_t n_max, const CrtBasis& basis, int workers) {
    if (n_max == 0 || n_max > kTauHardCap)
        throw std::invalid_argument("n_max must be in [1, " + std::to_string(kTauHardCap) + "]");
    basis.require_sufficient(n_max);

    const std::size_t L = n_max;  // tau(n) is coefficient n-1 of the Euler product power
    const std::size_t M = transform_size(L);
    const std::size_t nprimes = basis.primes.size();

    // Residues of tau(n) mod each basis prime.
    std::vector<std::vector<uint32_t>> res(nprimes);
    for_each_index(nprimes, workers, [&](std::size_t pi) {
        const auto [p, g] = basis.primes[pi];
        Mont32 m(p);
        std::vector<uint32_t> a(M, 0);
        // cube of Euler's product: sum (-1)^k (2k+1) q^{k(k+1)/2}
        for (uint64_t k = 0;; ++k) {
            uint64_t idx = k * (k + 1) / 2;
            if (idx >= L) break;
            uint64_t v = 2 * k + 1;  // < p for every supported n_max
            a[idx] = m.to_mont(uint32_t(k % 2 ? p - v : v));
        }
        for (int s = 0; s < 3; ++s) square_series_mod(a, L, m, g);
        res[pi].resize(L);
        for (std::size_t j = 0; j < L; ++j) res[pi][j] = m.from_mont(a[j]);
        a.clear();
        a.shrink_to_fit();
    });

    // Garner: inv[i] = (p_0 ... p_{i-1})^{-1} mod p_i.
    std::vector<uint64_t> inv(nprimes, 1);
    for (std::size_t i = 1; i < nprimes; ++i) {
        const uint32_t p = basis.primes[i].p;
        uint64_t prod = 1;
        for (std::size_t j = 0; j < i; ++j) prod = mulmod_u32(prod, basis.primes[j].p % p, p);
        inv[i] = powmod_u32(prod, p - 2, p);
    }

    const Acc prod = acc_from(basis.product());
    Acc half = prod;
    {
        uint64_t carry = 0;
        for (int i = kAccLimbs; i-- > 0;) {
            uint64_t limb = half[i];
            half[i] = (limb >> 1) | (carry << 63);
            carry = limb & 1;
        }
    }

    TauTable tau(n_max, TauTable::limbs_for(n_max));
    const uint32_t W = tau.limbs();
    std::vector<uint64_t> digits(nprimes);
    for (uint64_t n = 1; n <= n_max; ++n) {
        const std::size_t j = n - 1;
        // mixed-radix digits
        for (std::size_t i = 0; i < nprimes; ++i) {
            const uint32_t p = basis.primes[i].p;
            uint64_t x = 0;  // value-so-far mod p, via Horner over earlier digits
            for (std::size_t t = i; t-- > 0;) x = (mulmod_u32(x, basis.primes[t].p % p, p) + digits[t]) % p;
            uint64_t r = res[i][j] % p;
            uint64_t d = r >= x ? r - x : r + p - x;
            digits[i] = mulmod_u32(d, inv[i], p);
        }
        // x = ((d_{k-1} p_{k-2} + d_{k-2}) p_{k-3} + ...) p_0 + d_0
        Acc x{};
        x[0] = digits[nprimes - 1];
        for (std::size_t i = nprimes - 1; i-- > 0;) acc_mul_add(x, basis.primes[i].p, digits[i]);

        auto out = tau.raw_mut(n);
        if (acc_cmp(x, half) > 0) {
            acc_rsub(x, prod);  // x = prod - x, the magnitude of the negative value
            uint64_t carry = 1;
            for (uint32_t w = 0; w < W; ++w) {
                uint64_t limb = ~x[w];
                uint64_t s = limb + carry;
                carry = s < limb ? 1 : 0;
                out[w] = s;
            }
        } else {
            for (uint32_t w = 0; w < W; ++w) out[w] = x[w];
        }
    }
    if (tau.value_i128(1) != 1) throw std::logic_error("tau reconstruction failed at n=1");
    return tau;
}

LambdaTable normalize(const TauTable& tau, int workers) {
    LambdaTable lam;
    lam.n_max = tau.n_max();
    lam.values.assign(tau.n_max() + 1, 0.0);
    constexpr uint64_t block = 1 << 14;
    const uint64_t nblocks = (tau.n_max() + block - 1) / block;
    for_each_index(nblocks, workers, [&](std::size_t bi) {
        const uint64_t lo = bi * block + 1;
        const uint64_t hi = std::min(tau.n_max(), (bi + 1) * block);
        for (uint64_t n = lo; n <= hi; ++n) {
            long double scale = expl(-5.5L * logl((long double)n));
            lam.values[n] = double(tau.value_ld(n) * scale);
        }
    });
    return lam;
}

double hecke_product(uint64_t m, uint64_t n, const LambdaTable& lam) {
    if (m == 0 || n == 0) throw std::invalid_argument("arguments must be positive");
    if (m > lam.n_max / n) throw std::out_of_range("m*n exceeds table size");
    uint64_t g = std::gcd(m, n);
    // distinct prime factors of the gcd; squarefree divisors carry the sign
    std::array<uint64_t, 16> pf{};
    int npf = 0;
    uint64_t t = g;
    for (uint64_t p = 2; p * p <= t; ++p) {
        if (t % p) continue;
        pf[npf++] = p;
        while (t % p == 0) t /= p;
    }
    if (t > 1) pf[npf++] = t;
    double sum = 0;
    for (unsigned mask = 0; mask < (1u << npf); ++mask) {
        uint64_t d = 1;
        for (int i = 0; i < npf; ++i)
            if (mask & (1u << i)) d *= pf[i];
        double sign = std::popcount(mask) % 2 ? -1.0 : 1.0;
        sum += sign * lam[m / d] * lam[n / d];
    }
    return sum;
}

namespace {

void put_u64le(std::ostream& os, uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<const char*>(b), 8);
}

void put_u32le(std::ostream& os, uint32_t v) {
    unsigned char b[4];
    for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
    os.write(reinterpret_cast<const char*>(b), 4);
}

uint64_t get_u64le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
    return v;
}

uint32_t get_u32le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(b[i]) << (8 * i);
    return v;
}

constexpr char kMagic[4] = {'T', 'A', 'U', '1'};

}  // namespace

void save_tau_cache(const std::string& path, const TauTable& tau) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open cache file for writing: " + path);
    os.write(kMagic, 4);
    put_u64le(os, tau.n_max());
    put_u32le(os, tau.limbs());
    for (uint64_t v : tau.data()) put_u64le(os, v);
    if (!os) throw std::runtime_error("write failed: " + path);
}

TauTable load_tau_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open cache file: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("TAU1 validation failed: bad magic in " + path);
    uint64_t n_max = get_u64le(is);
    uint32_t limbs = get_u32le(is);
    if (!is || n_max == 0 || n_max > kTauHardCap || limbs == 0 || limbs > 8)
        throw std::runtime_error("TAU1 validation failed: bad header in " + path);
    TauTable tau(n_max, limbs);
    for (uint64_t n = 1; n <= n_max; ++n)
        for (auto& w : tau.raw_mut(n)) w = get_u64le(is);
    if (!is) throw std::runtime_error("TAU1 validation failed: truncated data in " + path);

    const uint64_t check_n = std::min<uint64_t>(100, n_max);
    TauTable fresh = build_tau_table(check_n);
    for (uint64_t n = 1; n <= check_n; ++n)
        if (tau.value_i128(n) != fresh.value_i128(n))
            throw std::runtime_error("TAU1 validation failed: entry " + std::to_string(n) +
                                     " mismatches recomputation in " + path);
    return tau;
}

}  // namespace heckelab
