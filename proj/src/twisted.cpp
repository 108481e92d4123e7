#include "heckelab/twisted.hpp"

#include <cmath>
#include <ctime>
#include <numbers>
#include <stdexcept>

#include "heckelab/parallel.hpp"
#include "heckelab/summation.hpp"

namespace heckelab {

namespace {

constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// sum over n in (lo, hi]
std::complex<double> block_sum(uint64_t lo, uint64_t hi, double alpha, const LambdaTable& lam,
                               const SieveTables& sv, int workers) {
    if (hi <= lo) return {0.0, 0.0};
    const uint64_t count = hi - lo;
    const std::size_t nchunks = std::size_t((count + kSumChunk - 1) / kSumChunk);
    std::vector<std::complex<double>> partial(nchunks);
    for_each_index(nchunks, workers, [&](std::size_t c) {
        const uint64_t a = lo + uint64_t(c) * kSumChunk;
        const uint64_t b = std::min(hi, a + kSumChunk);
        CompensatedComplex acc;
        for (uint64_t n = a + 1; n <= b; ++n) {
            const double w = sv.mangoldt[n];
            if (w == 0.0) continue;
            acc.add(lam[n] * w * sqrt_phase(alpha, n));
        }
        partial[c] = acc.value();
    });
    return pairwise_reduce(partial);
}

}  // namespace

std::complex<double> sqrt_phase(double alpha, uint64_t n) {
    const long double t = (long double)alpha * sqrtl((long double)n);
    const long double frac = t - floorl(t);
    const double ang = double(kTwoPi * frac);
    return {std::cos(ang), std::sin(ang)};
}

std::complex<double> twisted_sum(uint64_t N, double alpha, const LambdaTable& lam,
                                 const SieveTables& sv, int workers) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (N == 0) throw std::invalid_argument("N must be positive");
    if (N > lam.n_max || N > sv.n_max) throw std::out_of_range("N exceeds table sizes");
    return block_sum(0, N, alpha, lam, sv, workers);
}

SumSeries build_series(double alpha, uint64_t n_min, uint64_t n_max, double ratio,
                       const LambdaTable& lam, const SieveTables& sv, int workers) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (n_min < 2) throw std::invalid_argument("n_min must be at least 2");
    if (!(ratio > 1.0) || !(ratio <= 2.0)) throw std::invalid_argument("ratio must be in (1, 2]");
    if (n_max > lam.n_max || n_max > sv.n_max) throw std::out_of_range("n_max exceeds table sizes");

    SumSeries s;
    s.alpha = alpha;
    s.n_max_used = std::min(lam.n_max, sv.n_max);
    s.built_at = utc_timestamp();
    for (int j = 0;; ++j) {
        double g = double(n_min) * std::pow(ratio, double(j));
        uint64_t N = uint64_t(std::ceil(g));
        if (N > n_max) break;
        if (N >= n_min && (s.grid.empty() || N > s.grid.back())) s.grid.push_back(N);
    }
    if (s.grid.empty()) throw std::invalid_argument("empty grid");

    s.values.resize(s.grid.size());
    std::complex<double> prefix = block_sum(0, s.grid[0], alpha, lam, sv, workers);
    s.values[0] = prefix;
    for (std::size_t j = 1; j < s.grid.size(); ++j) {
        prefix += block_sum(s.grid[j - 1], s.grid[j], alpha, lam, sv, workers);
        s.values[j] = prefix;
    }
    return s;
}

DiagnosticSums diagnostic_sums(uint64_t N, double alpha, const LambdaTable& lam,
                               const SieveTables& sv) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (N == 0) throw std::invalid_argument("N must be positive");
    if (N > lam.n_max || N > sv.n_max) throw std::out_of_range("N exceeds table sizes");
    CompensatedComplex twist;
    double esum = 0, psum = 0, sq = 0;
    for (uint64_t n = 1; n <= N; ++n) {
        const double v = lam[n];
        const long double t = (long double)alpha * (long double)n;
        const long double frac = t - floorl(t);
        const double ang = double(kTwoPi * frac);
        twist.add(v * std::complex<double>{std::cos(ang), std::sin(ang)});
        esum += v;
        if (sv.is_prime(n)) psum += v;
        sq += v * v;
    }
    DiagnosticSums d;
    d.additive_twist = twist.value();
    d.eigen_sum = esum;
    d.prime_eigen_sum = psum;
    d.mean_square = sq / double(N);
    d.additive_ratio = std::abs(d.additive_twist) / (std::sqrt(double(N)) * std::log(2.0 * double(N)));
    d.eigen_ratio = std::abs(esum) / std::cbrt(double(N));
    d.prime_ratio = N > 1 ? std::abs(psum) * std::log(double(N)) / std::sqrt(double(N)) : 0.0;
    return d;
}

}  // namespace heckelab
