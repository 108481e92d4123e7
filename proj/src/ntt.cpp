#include "heckelab/ntt.hpp"

#include <bit>
#include <cassert>
#include <string>

#include "heckelab/errors.hpp"

namespace heckelab {

Mont32::Mont32(uint32_t p) : p_(p) {
    assert(p % 2 == 1 && p > 2);
    uint32_t inv = p;  // Newton: inv *= 2 - p*inv, doubles correct bits
    for (int i = 0; i < 5; ++i) inv *= 2u - p * inv;
    ninv_ = ~inv + 1u;  // -p^{-1} mod 2^32
    r1_ = uint32_t((uint64_t(1) << 32) % p);
    r2_ = uint32_t((uint64_t(r1_) * r1_) % p);
}

uint32_t Mont32::pow(uint32_t base, uint64_t e) const {
    uint32_t acc = r1_;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

namespace {

// Primitive n-th root of unity in the Montgomery domain; checks its order.
uint32_t root_of_unity(const Mont32& m, uint32_t root_g, std::size_t n, bool inverse) {
    uint32_t p = m.prime();
    if ((p - 1) % n != 0)
        throw ConfigError("modulus " + std::to_string(p) + " does not support transform length " +
                          std::to_string(n));
    uint32_t w = m.pow(m.to_mont(root_g), (p - 1) / n);
    if (n > 1 && m.pow(w, n / 2) != m.to_mont(p - 1))
        throw ConfigError("root of unity has wrong order mod " + std::to_string(p));
    return inverse ? m.inv(w) : w;
}

void fill_powers(std::vector<uint32_t>& tw, uint32_t wlen, std::size_t count, const Mont32& m) {
    tw[0] = m.one();
    for (std::size_t j = 1; j < count; ++j) tw[j] = m.mul(tw[j - 1], wlen);
}

}  // namespace

void forward_ntt(std::vector<uint32_t>& a, const Mont32& m, uint32_t root_g) {
    const std::size_t n = a.size();
    assert(std::has_single_bit(n));
    if (n == 1) return;
    const uint32_t w = root_of_unity(m, root_g, n, false);
    std::vector<uint32_t> tw(n / 2);
    // Gentleman-Sande: natural input, bit-reversed output.
    for (std::size_t len = n; len >= 2; len >>= 1) {
        const std::size_t half = len >> 1;
        const uint32_t wlen = m.pow(w, n / len);
        fill_powers(tw, wlen, half, m);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                uint32_t u = a[i + j], v = a[i + j + half];
                a[i + j] = m.add(u, v);
                a[i + j + half] = m.mul(m.sub(u, v), tw[j]);
            }
        }
    }
}

void inverse_ntt(std::vector<uint32_t>& a, const Mont32& m, uint32_t root_g) {
    const std::size_t n = a.size();
    assert(std::has_single_bit(n));
    if (n == 1) return;
    const uint32_t w = root_of_unity(m, root_g, n, true);
    std::vector<uint32_t> tw(n / 2);
    // Cooley-Tukey: bit-reversed input, natural output.
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const uint32_t wlen = m.pow(w, n / len);
        fill_powers(tw, wlen, half, m);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                uint32_t u = a[i + j], v = m.mul(a[i + j + half], tw[j]);
                a[i + j] = m.add(u, v);
                a[i + j + half] = m.sub(u, v);
            }
        }
    }
    const uint32_t ninv = m.inv(m.to_mont(uint32_t(n % m.prime())));
    for (auto& x : a) x = m.mul(x, ninv);
}

void square_series_mod(std::vector<uint32_t>& a, std::size_t length, const Mont32& m,
                       uint32_t root_g) {
    const std::size_t n = a.size();
    assert(std::has_single_bit(n) && n >= 2 * length - 1);
    forward_ntt(a, m, root_g);
    for (auto& x : a) x = m.mul(x, x);
    inverse_ntt(a, m, root_g);
    for (std::size_t i = length; i < n; ++i) a[i] = 0;  // drop wrapped-in upper half
}

std::size_t transform_size(std::size_t length) {
    return std::bit_ceil(std::max<std::size_t>(2, 2 * length - 1));
}

namespace bigu {

void mul_small(std::vector<uint64_t>& v, uint64_t m) {
    unsigned __int128 carry = 0;
    for (auto& limb : v) {
        unsigned __int128 t = (unsigned __int128)limb * m + carry;
        limb = uint64_t(t);
        carry = t >> 64;
    }
    if (carry) v.push_back(uint64_t(carry));
}

void add_small(std::vector<uint64_t>& v, uint64_t a) {
    for (auto& limb : v) {
        limb += a;
        if (limb >= a) return;  // no carry out
        a = 1;
    }
    if (a) v.push_back(a);
}

int cmp(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    std::size_t na = a.size(), nb = b.size();
    while (na > 0 && a[na - 1] == 0) --na;
    while (nb > 0 && b[nb - 1] == 0) --nb;
    if (na != nb) return na < nb ? -1 : 1;
    for (std::size_t i = na; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void sub(std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
    assert(cmp(a, b) >= 0);
    uint64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        uint64_t bi = i < b.size() ? b[i] : 0;
        uint64_t t = a[i] - bi;
        uint64_t borrow2 = t > a[i];
        uint64_t t2 = t - borrow;
        borrow = borrow2 | (t2 > t);
        a[i] = t2;
    }
}

std::vector<uint64_t> shr1(std::vector<uint64_t> v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] >>= 1;
        if (i + 1 < v.size()) v[i] |= v[i + 1] << 63;
    }
    return v;
}

unsigned bit_length(const std::vector<uint64_t>& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i]) return unsigned(64 * i) + unsigned(64 - std::countl_zero(v[i]));
    return 0;
}

std::vector<uint64_t> pow_u64(uint64_t base, unsigned exp) {
    std::vector<uint64_t> r{1};
    for (unsigned i = 0; i < exp; ++i) mul_small(r, base);
    return r;
}

}  // namespace bigu

CrtBasis CrtBasis::default_basis() {
    // p = c * 2^a + 1; two-adic valuations 30, 27, 27, 26, 25.
    return CrtBasis{{{3221225473u, 5},
                     {2281701377u, 3},
                     {2013265921u, 31},
                     {469762049u, 3},
                     {167772161u, 3}}};
}

std::vector<uint64_t> CrtBasis::product() const {
    std::vector<uint64_t> prod{1};
    for (const auto& q : primes) bigu::mul_small(prod, q.p);
    return prod;
}

void CrtBasis::require_sufficient(uint64_t n_max) const {
    if (primes.empty()) throw ConfigError("empty CRT basis");
    const std::size_t tlen = transform_size(n_max);
    for (const auto& q : primes) {
        if ((uint64_t(q.p) - 1) % tlen != 0)
            throw ConfigError("CRT modulus " + std::to_string(q.p) +
                              " lacks transform length 2^" +
                              std::to_string(std::countr_zero(tlen)) + " needed for n_max " +
                              std::to_string(n_max));
    }
    // coefficient magnitude < 2 * n_max^6, so 8 * n_max^6 leaves the
    // factor-4 margin for signed reconstruction
    std::vector<uint64_t> bound = bigu::pow_u64(n_max, 6);
    bigu::mul_small(bound, 8);
    if (bigu::cmp(product(), bound) <= 0)
        throw ConfigError("CRT basis product has " + std::to_string(bigu::bit_length(product())) +
                          " bits; need more than " + std::to_string(bigu::bit_length(bound)) +
                          " bits for n_max " + std::to_string(n_max));
}

}  // namespace heckelab
