#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "heckelab/ntt.hpp"

namespace heckelab {

inline constexpr uint64_t kTauDefaultCap = 1'000'000;
inline constexpr uint64_t kTauHardCap = 10'000'000;

// Exact integer coefficients tau(n) of the discriminant form, stored as
// fixed-width little-endian two's-complement limbs. The width depends only
// on n_max, never on the residue basis used to build the table.
class TauTable {
public:
    TauTable(uint64_t n_max, uint32_t limbs)
        : n_max_(n_max), limbs_(limbs), data_(n_max * limbs, 0) {}

    uint64_t n_max() const { return n_max_; }
    uint32_t limbs() const { return limbs_; }
    std::span<const uint64_t> raw(uint64_t n) const {
        return {data_.data() + (n - 1) * limbs_, limbs_};
    }
    std::span<uint64_t> raw_mut(uint64_t n) { return {data_.data() + (n - 1) * limbs_, limbs_}; }
    const std::vector<uint64_t>& data() const { return data_; }

    bool negative(uint64_t n) const { return raw(n).back() >> 63; }
    // Exact value; throws std::overflow_error if it does not fit.
    __int128 value_i128(uint64_t n) const;
    long double value_ld(uint64_t n) const;
    double value_double(uint64_t n) const { return double(value_ld(n)); }

    // Limb width needed for |tau(n)| < 2 * n_max^6 plus a sign bit.
    static uint32_t limbs_for(uint64_t n_max);

private:
    uint64_t n_max_;
    uint32_t limbs_;
    std::vector<uint64_t> data_;
};

// Normalized Hecke eigenvalues lambda(n) = tau(n) * n^{-11/2}.
struct LambdaTable {
    uint64_t n_max = 0;
    std::vector<double> values;  // index n; values[0] unused

    double operator[](uint64_t n) const { return values[n]; }
};

// Builds tau(1..n_max) from the 8th power of the cube of Euler's product:
// the cube is the sparse series sum (-1)^k (2k+1) q^{k(k+1)/2}, squared three
// times by NTT convolution mod each basis prime, then reconstructed by
// signed CRT. Deterministic; result independent of the basis used.
TauTable build_tau_table(uint64_t n_max, const CrtBasis& basis = CrtBasis::default_basis(),
                         int workers = 1);

LambdaTable normalize(const TauTable& tau, int workers = 1);

// Right-hand side of the eigenvalue product relation:
// sum over d | gcd(m,n) of mu(d) * lambda(m/d) * lambda(n/d).
double hecke_product(uint64_t m, uint64_t n, const LambdaTable& lam);

// Binary cache: "TAU1", u64 n_max, u32 limb count, then n_max records of
// limb-count u64 words, everything little-endian. Loading recomputes
// entries 1..100 and rejects the file on any mismatch.
void save_tau_cache(const std::string& path, const TauTable& tau);
TauTable load_tau_cache(const std::string& path);

}  // namespace heckelab
