#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "heckelab/coeffs.hpp"
#include "heckelab/sieve.hpp"

namespace heckelab {

// Cut parameters for the dyadic block (N, 2N].
struct VaughanParams {
    uint64_t block_n;  // N
    double y;          // N^{1/3}
    double z;          // sqrt(2N)

    explicit VaughanParams(uint64_t N);
};

// The five summands splitting Lambda(n) on (N, 2N].
struct PieceVector {
    std::array<double, 5> values{};
    double sum() const { return values[0] + values[1] + values[2] + values[3] + values[4]; }
};

// Three-term divisor identity for Lambda(n), valid for n > y >= 2:
//   sum_{ab=n, b<=y} mu(b) log a
//   - sum_{abc=n, b<=y, c<=y} mu(b) Lambda(c)
//   + sum_{abc=n, b>y, c>y}   mu(b) Lambda(c)
double vaughan_classic(uint64_t n, double y, const SieveTables& sv);

// The five-piece refinement with the y/z cuts; requires N < n <= 2N, N >= 8.
PieceVector lambda_pieces(uint64_t n, const VaughanParams& params, const SieveTables& sv);

// S_i(N) = sum_{N < n <= 2N} Lambda_i(n) lambda(n) e(alpha sqrt(n)).
std::array<std::complex<double>, 5> component_sums(const VaughanParams& params, double alpha,
                                                   const LambdaTable& lam, const SieveTables& sv,
                                                   int workers = 1);

}  // namespace heckelab
