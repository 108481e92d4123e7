#include "heckelab/verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

#include "heckelab/analysis.hpp"
#include "heckelab/coeffs.hpp"
#include "heckelab/errors.hpp"
#include "heckelab/oscillatory.hpp"
#include "heckelab/sieve.hpp"
#include "heckelab/twisted.hpp"
#include "heckelab/vaughan.hpp"

namespace heckelab {

namespace {

class Report {
public:
    explicit Report(std::ostream& os) : os_(os) {}

    void line(const std::string& name, double lhs, double rhs, double bound, bool pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-34s lhs=%-13.6g rhs=%-13.6g bound=%-11.6g %s", name.c_str(),
                      lhs, rhs, bound, pass ? "pass" : "FAIL");
        os_ << buf << '\n';
        if (!pass) ++failures_;
    }
    void skip(const std::string& name, const std::string& why) {
        os_ << name << " skipped: " << why << '\n';
    }
    int failures() const { return failures_; }

private:
    std::ostream& os_;
    int failures_ = 0;
};

double uniform01(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1p-53; }

double trial_division_mangoldt(uint64_t n) {
    if (n < 2) return 0;
    uint64_t p = 0, m = n;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            while (m % d == 0) m /= d;
            break;
        }
    }
    if (p == 0) return std::log(double(n));  // n prime
    if (m != 1) return 0;                    // second prime factor remains
    uint64_t r = n;
    while (r % p == 0) r /= p;
    return r == 1 ? std::log(double(p)) : 0;
}

}  // namespace

int run_verify(const RunConfig& config, std::ostream& report) {
    if (!(config.alpha > 0) || config.n_max == 0 || !(config.ratio > 1.0 && config.ratio <= 2.0))
        throw std::invalid_argument("invalid run configuration");
    Report rep(report);

    // ---- coefficient tables -------------------------------------------
    TauTable tau = [&] {
        if (!config.cache_path.empty()) {
            try {
                TauTable cached = load_tau_cache(config.cache_path);
                rep.line("tau_cache_validation", double(cached.n_max()), double(cached.n_max()),
                         0, true);
                if (cached.n_max() >= config.n_max) return cached;
                rep.skip("tau_cache_reuse", "cache smaller than configured n_max; rebuilding");
            } catch (const std::exception& e) {
                rep.line("tau_cache_validation", 0, 1, 0, false);
                report << "  " << e.what() << '\n';
            }
        }
        return build_tau_table(config.n_max);
    }();
    if (rep.failures()) return 1;  // bad cache is fatal by design
    const LambdaTable lam = normalize(tau);
    const uint64_t sieve_n = std::max<uint64_t>(config.n_max, 10'000);
    const SieveTables sv = build_sieve(sieve_n);

    rep.line("tau_leading_coefficient", double(tau.value_double(1)), 1.0, 0, tau.value_double(1) == 1.0);
    {
        // Hecke recursion at prime powers, exact integers. Capped at 10^6 so
        // every product below stays inside 128 bits.
        const uint64_t cap = std::min<uint64_t>(tau.n_max(), 1'000'000);
        bool ok = true;
        for (uint64_t p = 2; p * p <= cap && ok; ++p) {
            if (!sv.is_prime(p)) continue;
            __int128 p11 = 1;
            for (int i = 0; i < 11; ++i) p11 *= p;
            __int128 tp = tau.value_i128(p), prev = 1, cur = tp;
            for (uint64_t q = p * p; q <= cap; q *= p) {
                const __int128 next = tp * cur - p11 * prev;
                if (next != tau.value_i128(q)) {
                    ok = false;
                    break;
                }
                prev = cur;
                cur = next;
            }
        }
        rep.line("tau_hecke_recursion", ok ? 0 : 1, 0, 0, ok);
    }
    {
        // multiplicativity over all pairs with m*n <= min(1e4, n_max)
        const uint64_t cap = std::min<uint64_t>(10'000, lam.n_max);
        double worst = 0;
        for (uint64_t m = 2; m * m <= cap; ++m)
            for (uint64_t n = m; m * n <= cap; ++n)
                worst = std::max(worst, std::abs(lam[m * n] - hecke_product(m, n, lam)));
        rep.line("hecke_multiplicativity", worst, 0, 1e-9, worst <= 1e-9);
    }
    {
        double worst = -1e300;
        for (uint64_t n = 1; n <= lam.n_max; ++n)
            worst = std::max(worst, std::abs(lam[n]) - double(divisor_count(n, sv)));
        rep.line("deligne_bound", worst, 0, 1e-12, worst <= 1e-12);
    }
    {
        const uint64_t half = lam.n_max / 2;
        double s_half = 0, s_full = 0;
        for (uint64_t n = 1; n <= lam.n_max; ++n) {
            s_full += lam[n] * lam[n];
            if (n == half) s_half = s_full;
        }
        const double a_half = s_half / double(half), a_full = s_full / double(lam.n_max);
        const double rel = std::abs(a_full - a_half) / a_full;
        rep.line("rankin_selberg_stability", a_half, a_full, 0.1, rel <= 0.1);
    }

    // ---- sieve ---------------------------------------------------------
    {
        double worst = 0;
        for (uint64_t n = 1; n <= std::min<uint64_t>(10'000, sv.n_max); ++n)
            worst = std::max(worst, std::abs(sv.mangoldt[n] - trial_division_mangoldt(n)));
        rep.line("mangoldt_trial_division", worst, 0, 1e-12, worst <= 1e-12);
    }
    {
        bool ok = true;
        for (uint64_t n = 1; n <= std::min<uint64_t>(10'000, sv.n_max) && ok; ++n) {
            int s = 0;
            for (uint64_t d = 1; d * d <= n; ++d) {
                if (n % d) continue;
                s += sv.mobius[d];
                if (d != n / d) s += sv.mobius[n / d];
            }
            ok = s == (n == 1 ? 1 : 0);
        }
        rep.line("mobius_divisor_sums", ok ? 0 : 1, 0, 0, ok);
    }
    {
        double psi = 0;
        for (uint64_t n = 1; n <= sv.n_max; ++n) psi += sv.mangoldt[n];
        const double ratio = psi / double(sv.n_max);
        rep.line("chebyshev_psi_ratio", ratio, 1.0, 0.1, ratio >= 0.9 && ratio <= 1.1);
    }

    // ---- vaughan -------------------------------------------------------
    for (uint64_t N : {uint64_t(8), uint64_t(100), uint64_t(10'000)}) {
        if (2 * N > sv.n_max || 2 * N > lam.n_max) {
            rep.skip("vaughan_pieces_N" + std::to_string(N), "tables too small");
            continue;
        }
        VaughanParams params(N);
        double worst = 0;
        for (uint64_t n = N + 1; n <= 2 * N; ++n) {
            const PieceVector pieces = lambda_pieces(n, params, sv);
            worst = std::max(worst, std::abs(pieces.sum() - sv.mangoldt[n]));
        }
        rep.line("vaughan_pieces_N" + std::to_string(N), worst, 0, 1e-9, worst <= 1e-9);
    }
    {
        const uint64_t N = std::min<uint64_t>(10'000, std::min(sv.n_max, lam.n_max) / 2);
        if (N >= 8) {
            VaughanParams params(N);
            const auto comps = component_sums(params, config.alpha, lam, sv);
            std::complex<double> total{0, 0};
            for (const auto& c : comps) total += c;
            const std::complex<double> direct = twisted_sum(2 * N, config.alpha, lam, sv) -
                                                twisted_sum(N, config.alpha, lam, sv);
            const double dev = std::abs(total - direct);
            rep.line("vaughan_component_total", dev, 0, 1e-6, dev <= 1e-6);
        } else {
            rep.skip("vaughan_component_total", "tables too small");
        }
    }

    // ---- twisted sums --------------------------------------------------
    {
        const uint64_t N = std::min<uint64_t>(lam.n_max, 100'000);
        const auto s1 = twisted_sum(N, config.alpha, lam, sv, 1);
        const auto s2 = twisted_sum(N, config.alpha, lam, sv, 2);
        const auto s8 = twisted_sum(N, config.alpha, lam, sv, 8);
        const bool ok = s1 == s2 && s1 == s8;
        rep.line("twisted_sum_thread_invariance", std::abs(s1 - s2), 0, 0, ok);
    }
    if (lam.n_max >= 1000) {
        const SumSeries series =
            build_series(config.alpha, 100, std::min<uint64_t>(lam.n_max, 10'000), 1.5, lam, sv);
        double worst = 0;
        for (std::size_t j = 1; j < series.grid.size(); ++j) {
            std::complex<double> gap = twisted_sum(series.grid[j], config.alpha, lam, sv) -
                                       twisted_sum(series.grid[j - 1], config.alpha, lam, sv);
            worst = std::max(worst, std::abs(series.values[j] - series.values[j - 1] - gap));
        }
        rep.line("series_prefix_consistency", worst, 0, 1e-6, worst <= 1e-6);
    }

    // ---- oscillatory ---------------------------------------------------
    {
        PhaseFn lin{[](double x) { return x; }, [](double) { return 1.0; },
                    [](double) { return 0.0; }, 99};
        const auto q = oscillatory_integral(lin, 0, 3, 1e-10);
        rep.line("full_period_cancellation", std::abs(q.value), 0, 1e-10,
                 std::abs(q.value) <= 1e-10);
    }
    {
        PhaseFn fres{[](double x) { return 0.5 * x * x; }, [](double x) { return x; },
                     [](double) { return 1.0; }, 99};
        const auto sp = stationary_phase_eval(fres, -20, 20, 0);
        rep.line("fresnel_main_term", sp.error, 0, 0.05, sp.error <= 0.05);
        rep.line("fresnel_budget", sp.error, 0, 10 * sp.lambda_budget,
                 sp.error <= 10 * sp.lambda_budget);
    }
    {
        PhaseFn slow{[](double x) { return 0.4 * x + 1e-4 * x * x; },
                     [](double x) { return 0.4 + 2e-4 * x; }, [](double) { return 2e-4; }, 99};
        const auto pc = truncated_poisson_check(slow, 0, 100, 0.5);
        rep.line("truncated_poisson", pc.discrepancy, 0, 10 * pc.bound,
                 pc.discrepancy <= 10 * pc.bound);
    }
    {
        PhaseFn quad{[](double x) { return 0.5 * x * x; }, [](double x) { return x; },
                     [](double) { return 1.0; }, 99};
        const auto db = first_derivative_bound_check(quad, 1, 4);
        rep.line("first_derivative_bound", db.integral_abs, 0, db.bound,
                 db.integral_abs <= db.bound);
    }
    {
        bool ok = true;
        double worst_ratio = 0;
        double prev = 1e300;
        bool monotone = true;
        for (uint64_t N : {uint64_t(100), uint64_t(1000), uint64_t(10'000)}) {
            const auto tc = sqrt_transform_check(uint64_t(std::ceil(1.5 * double(N))), N,
                                                 config.alpha);
            const double scaled = tc.residual * std::pow(double(N), 0.25);
            worst_ratio = std::max(worst_ratio, scaled);
            ok = ok && scaled <= 10;
            monotone = monotone && tc.residual < prev;
            prev = tc.residual;
        }
        rep.line("sqrt_transform_scaled_residual", worst_ratio, 0, 10, ok);
        rep.line("sqrt_transform_residual_decay", monotone ? 0 : 1, 0, 0, monotone);
    }
    {
        std::mt19937_64 rng(config.seed);
        bool ok = true;
        double worst = 0;
        for (int inst = 0; inst < 20 && ok; ++inst) {
            const double delta = 0.1;
            std::vector<double> freqs(50);
            std::vector<std::complex<double>> cs(50);
            double cur = uniform01(rng);
            for (int i = 0; i < 50; ++i) {
                freqs[i] = cur;
                cur += delta * (1.0 + uniform01(rng));
                cs[i] = {2 * uniform01(rng) - 1, 2 * uniform01(rng) - 1};
            }
            for (double T : {1.0, 10.0}) {
                const auto ls = large_sieve_check(freqs, cs, T);
                worst = std::max(worst, ls.defect / ls.bound);
                ok = ok && ls.defect <= ls.bound;
            }
        }
        rep.line("large_sieve_defect", worst, 0, 1.0, ok);
    }

    // ---- analysis ------------------------------------------------------
    {
        SumSeries synth;
        synth.alpha = config.alpha;
        for (int j = 0; j < 12; ++j) {
            const uint64_t N = uint64_t(100) << j;
            synth.grid.push_back(N);
            synth.values.emplace_back(std::pow(double(N), 0.75), 0.0);
        }
        const FitResult fit = fit_exponent(synth, EnvelopeMode::pointwise);
        const double dev = std::abs(fit.exponent - 0.75);
        rep.line("fit_synthetic_exponent", fit.exponent, 0.75, 1e-12,
                 dev <= 1e-12 && fit.residual_rms <= 1e-12);
    }
    {
        try {
            const SumSeries real = build_series(config.alpha, 1000,
                                                std::min<uint64_t>(lam.n_max, 100'000),
                                                config.ratio, lam, sv);
            const FitResult fit = fit_exponent(real, EnvelopeMode::running_max);
            rep.line("fit_running_max_exponent", fit.exponent, 5.0 / 6.0 + 0.05, 0,
                     fit.exponent <= 5.0 / 6.0 + 0.05);
        } catch (const InsufficientData& e) {
            rep.skip("fit_running_max_exponent", e.what());
        } catch (const std::invalid_argument& e) {
            rep.skip("fit_running_max_exponent", e.what());
        } catch (const std::out_of_range& e) {
            rep.skip("fit_running_max_exponent", e.what());
        }
    }

    report << (rep.failures() == 0 ? "all checks passed\n"
                                   : std::to_string(rep.failures()) + " check(s) FAILED\n");
    return rep.failures() == 0 ? 0 : 1;
}

}  // namespace heckelab
