#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "heckelab/coeffs.hpp"
#include "heckelab/sieve.hpp"

namespace heckelab {

// e(alpha * sqrt(n)): the product alpha*sqrt(n) is reduced mod 1 in extended
// precision before scaling by 2*pi, so large phases keep full accuracy.
std::complex<double> sqrt_phase(double alpha, uint64_t n);

// S(N) = sum_{n<=N} lambda(n) Lambda(n) e(alpha sqrt(n)). Summation runs in
// fixed 2^16 chunks with compensated accumulation per chunk and a pairwise
// combine, so the value is bit-identical for any worker count.
std::complex<double> twisted_sum(uint64_t N, double alpha, const LambdaTable& lam,
                                 const SieveTables& sv, int workers = 1);

struct SumSeries {
    double alpha = 0;
    std::vector<uint64_t> grid;                 // ascending
    std::vector<std::complex<double>> values;   // S(grid[j])
    uint64_t n_max_used = 0;
    std::string built_at;  // ISO-8601 UTC
};

// Geometric grid ceil(n_min * ratio^j) clipped to [n_min, n_max]; each gap
// (N_j, N_{j+1}] is summed once and prefix-accumulated.
SumSeries build_series(double alpha, uint64_t n_min, uint64_t n_max, double ratio,
                       const LambdaTable& lam, const SieveTables& sv, int workers = 1);

struct DiagnosticSums {
    std::complex<double> additive_twist;  // sum lambda(n) e(alpha n)
    double eigen_sum;                     // sum lambda(n)
    double prime_eigen_sum;               // sum over primes p <= N of lambda(p)
    double mean_square;                   // (1/N) sum |lambda(n)|^2
    double additive_ratio;                // |additive_twist| / (sqrt(N) log(2N))
    double eigen_ratio;                   // |eigen_sum| / N^{1/3}
    double prime_ratio;                   // |prime_eigen_sum| * log(N) / sqrt(N)
};

DiagnosticSums diagnostic_sums(uint64_t N, double alpha, const LambdaTable& lam,
                               const SieveTables& sv);

}  // namespace heckelab
