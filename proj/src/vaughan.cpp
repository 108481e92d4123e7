#include "heckelab/vaughan.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "heckelab/errors.hpp"
#include "heckelab/parallel.hpp"
#include "heckelab/summation.hpp"
#include "heckelab/twisted.hpp"

namespace heckelab {

namespace {

std::vector<uint64_t> divisors_of(uint64_t n, const SieveTables& sv) {
    std::vector<uint64_t> divs{1};
    while (n > 1) {
        const uint32_t p = sv.smallest_factor[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        const std::size_t base = divs.size();
        uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

void check_tables(uint64_t n, const SieveTables& sv) {
    if (n > sv.n_max) throw std::out_of_range("n exceeds sieve table size");
}

}  // namespace

VaughanParams::VaughanParams(uint64_t N) : block_n(N) {
    if (N < 8) throw std::invalid_argument("block base N must be >= 8 so that y >= 2");
    y = std::cbrt(double(N));
    z = std::sqrt(2.0 * double(N));
}

double vaughan_classic(uint64_t n, double y, const SieveTables& sv) {
    if (y < 2.0) throw std::invalid_argument("cut parameter y must be >= 2");
    if (!(double(n) > y)) throw PreconditionError("identity requires n > y", double(n));
    check_tables(n, sv);

    const auto divs = divisors_of(n, sv);
    double smooth = 0, small_conv = 0, rough_conv = 0;
    for (uint64_t b : divs) {
        const int mu_b = sv.mobius[b];
        if (mu_b == 0) continue;
        if (double(b) <= y) smooth += mu_b * std::log(double(n / b));
        for (uint64_t c : divisors_of(n / b, sv)) {
            const double lc = sv.mangoldt[c];
            if (lc == 0.0) continue;
            if (double(b) <= y && double(c) <= y) small_conv += mu_b * lc;
            if (double(b) > y && double(c) > y) rough_conv += mu_b * lc;
        }
    }
    return smooth - small_conv + rough_conv;
}

PieceVector lambda_pieces(uint64_t n, const VaughanParams& params, const SieveTables& sv) {
    const uint64_t N = params.block_n;
    if (!(n > N && n <= 2 * N)) throw PreconditionError("n must lie in (N, 2N]", double(n));
    check_tables(n, sv);
    const double y = params.y, z = params.z;

    PieceVector pieces;
    const auto divs = divisors_of(n, sv);
    for (uint64_t b : divs) {
        const int mu_b = sv.mobius[b];
        if (mu_b == 0) continue;
        if (double(b) <= y) pieces.values[0] += mu_b * std::log(double(n / b));
        for (uint64_t c : divisors_of(n / b, sv)) {
            const double lc = sv.mangoldt[c];
            if (lc == 0.0) continue;
            const uint64_t a = n / b / c;
            if (double(b) <= y && double(c) <= y) {
                if (double(a) >= z) {
                    pieces.values[1] -= mu_b * lc;
                } else {
                    // b, c <= y and n > N force a > y
                    assert(double(a) > y);
                    pieces.values[2] -= mu_b * lc;
                }
            }
            if (double(c) > y && double(b) > y && double(b) < z) pieces.values[3] += mu_b * lc;
            if (double(b) >= z && double(c) > y) {
                // b >= z and n <= 2N force c <= z
                assert(double(c) <= z);
                pieces.values[4] += mu_b * lc;
            }
        }
    }
    return pieces;
}

std::array<std::complex<double>, 5> component_sums(const VaughanParams& params, double alpha,
                                                   const LambdaTable& lam, const SieveTables& sv,
                                                   int workers) {
    const uint64_t N = params.block_n;
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (2 * N > lam.n_max || 2 * N > sv.n_max) throw std::out_of_range("2N exceeds table sizes");

    const std::size_t nchunks = std::size_t((N + kSumChunk - 1) / kSumChunk);
    std::vector<std::array<std::complex<double>, 5>> partial(nchunks);
    for_each_index(nchunks, workers, [&](std::size_t c) {
        const uint64_t lo = N + uint64_t(c) * kSumChunk;
        const uint64_t hi = std::min(2 * N, lo + kSumChunk);
        std::array<CompensatedComplex, 5> acc;
        for (uint64_t n = lo + 1; n <= hi; ++n) {
            const PieceVector pieces = lambda_pieces(n, params, sv);
            const std::complex<double> phase = lam[n] * sqrt_phase(alpha, n);
            for (int i = 0; i < 5; ++i)
                if (pieces.values[i] != 0.0) acc[i].add(pieces.values[i] * phase);
        }
        for (int i = 0; i < 5; ++i) partial[c][i] = acc[i].value();
    });

    std::array<std::complex<double>, 5> out{};
    std::vector<std::complex<double>> column(nchunks);
    for (int i = 0; i < 5; ++i) {
        for (std::size_t c = 0; c < nchunks; ++c) column[c] = partial[c][i];
        out[i] = pairwise_reduce(column);
    }
    return out;
}

}  // namespace heckelab
