#pragma once

#include <cstdint>
#include <vector>

namespace heckelab {

// Montgomery arithmetic mod an odd prime p < 2^32 (R = 2^32).
class Mont32 {
public:
    explicit Mont32(uint32_t p);

    uint32_t prime() const { return p_; }
    uint32_t one() const { return r1_; }

    uint32_t to_mont(uint32_t a) const { return mul(a % p_, r2_); }
    uint32_t from_mont(uint32_t a) const { return reduce(a); }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint64_t s = uint64_t(a) + b;
        return s >= p_ ? uint32_t(s - p_) : uint32_t(s);
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : uint32_t(uint64_t(a) + p_ - b);
    }
    uint32_t mul(uint32_t a, uint32_t b) const { return reduce(uint64_t(a) * b); }

    // Montgomery-domain base, plain exponent.
    uint32_t pow(uint32_t base, uint64_t e) const;
    uint32_t inv(uint32_t a) const { return pow(a, p_ - 2); }

    // t < p * 2^32; returns t * 2^-32 mod p.
    uint32_t reduce(uint64_t t) const {
        uint32_t m = uint32_t(t) * ninv_;
        uint64_t r = (t + uint64_t(m) * p_) >> 32;
        return r >= p_ ? uint32_t(r - p_) : uint32_t(r);
    }

private:
    uint32_t p_, ninv_, r1_, r2_;
};

// In-place radix-2 transform pair over Z/p. forward_ntt leaves the spectrum
// in bit-reversed order; inverse_ntt consumes that order and divides by n.
// Values are in the Montgomery domain throughout. n must be a power of two
// with n | p-1; root_g is a primitive root of p.
void forward_ntt(std::vector<uint32_t>& a, const Mont32& m, uint32_t root_g);
void inverse_ntt(std::vector<uint32_t>& a, const Mont32& m, uint32_t root_g);

// Squares the integer series held in a[0..length) mod p, truncating the
// result back to `length` coefficients. a.size() is the transform size and
// must be a power of two >= 2*length - 1.
void square_series_mod(std::vector<uint32_t>& a, std::size_t length, const Mont32& m,
                       uint32_t root_g);

struct NttPrime {
    uint32_t p;
    uint32_t g;  // primitive root
};

// Little-endian base-2^64 magnitude helpers used by the CRT layer.
namespace bigu {
void mul_small(std::vector<uint64_t>& v, uint64_t m);
void add_small(std::vector<uint64_t>& v, uint64_t a);
int cmp(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
// a -= b; requires a >= b
void sub(std::vector<uint64_t>& a, const std::vector<uint64_t>& b);
std::vector<uint64_t> shr1(std::vector<uint64_t> v);
unsigned bit_length(const std::vector<uint64_t>& v);
std::vector<uint64_t> pow_u64(uint64_t base, unsigned exp);  // base^exp
}  // namespace bigu

// Residue basis for exact coefficient reconstruction. All default moduli are
// NTT-friendly: p = c * 2^a + 1 with a >= 25, so transforms up to 2^25 work,
// enough for tables to 10^7 entries.
struct CrtBasis {
    std::vector<NttPrime> primes;

    static CrtBasis default_basis();

    std::vector<uint64_t> product() const;

    // Throws ConfigError unless every modulus supports the transform length
    // for n_max and the product strictly exceeds 4 * n_max^{11/2} * d_max
    // (checked via d(n) < 2*sqrt(n), i.e. product > 8 * n_max^6).
    void require_sufficient(uint64_t n_max) const;
};

// Transform size used for tables of `length` coefficients.
std::size_t transform_size(std::size_t length);

}  // namespace heckelab
