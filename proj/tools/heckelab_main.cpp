#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "heckelab/analysis.hpp"
#include "heckelab/coeffs.hpp"
#include "heckelab/series_io.hpp"
#include "heckelab/sieve.hpp"
#include "heckelab/twisted.hpp"
#include "heckelab/vaughan.hpp"
#include "heckelab/verify.hpp"

namespace {

// Relative output paths land under HECKELAB_OUT_DIR when it is set.
std::string resolve_out(const std::string& path) {
    const char* dir = std::getenv("HECKELAB_OUT_DIR");
    if (!dir || !*dir || path.empty()) return path;
    std::filesystem::path p(path);
    if (p.is_absolute()) return path;
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / p).string();
}

heckelab::TauTable obtain_tau(uint64_t n_max, const std::string& cache) {
    if (!cache.empty() && std::filesystem::exists(cache)) {
        heckelab::TauTable tau = heckelab::load_tau_cache(cache);
        if (tau.n_max() >= n_max) return tau;
        std::cerr << "cache covers only n <= " << tau.n_max() << ", rebuilding\n";
    }
    heckelab::TauTable tau = heckelab::build_tau_table(n_max);
    if (!cache.empty()) heckelab::save_tau_cache(resolve_out(cache), tau);
    return tau;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for Hecke-eigenvalue exponential sums over primes"};
    app.require_subcommand(1);

    // ---- tau ----
    uint64_t tau_n_max = heckelab::kTauDefaultCap;
    std::string tau_cache;
    bool tau_huge = false;
    auto* tau_cmd = app.add_subcommand("tau", "build the exact coefficient table");
    tau_cmd->add_option("--n-max", tau_n_max, "table size (default 10^6)");
    tau_cmd->add_option("--cache", tau_cache, "cache file to write (and reuse)");
    tau_cmd->add_flag("--huge", tau_huge, "allow n-max beyond 10^6 (up to 10^7; heavy)");

    // ---- sum ----
    double sum_alpha = 1.0, sum_ratio = 1.25;
    uint64_t sum_n_min = 1000, sum_n_max = heckelab::kTauDefaultCap;
    int sum_workers = 0;
    std::string sum_out, sum_cache;
    auto* sum_cmd = app.add_subcommand("sum", "evaluate the twisted sum over a geometric grid");
    sum_cmd->add_option("--alpha", sum_alpha, "phase multiplier (> 0)");
    sum_cmd->add_option("--n-min", sum_n_min, "first grid point (>= 2)");
    sum_cmd->add_option("--n-max", sum_n_max, "last grid point");
    sum_cmd->add_option("--ratio", sum_ratio, "grid ratio in (1, 2]");
    sum_cmd->add_option("--out", sum_out, "CSV output path (default stdout)");
    sum_cmd->add_option("--workers", sum_workers, "worker threads (0 = hardware)");
    sum_cmd->add_option("--cache", sum_cache, "tau cache file");

    // ---- vaughan ----
    uint64_t va_block = 10'000;
    double va_alpha = 1.0;
    std::string va_cache;
    auto* va_cmd = app.add_subcommand("vaughan", "component sums of the five-piece decomposition");
    va_cmd->add_option("--block-n", va_block, "dyadic block base N (>= 8)");
    va_cmd->add_option("--alpha", va_alpha, "phase multiplier (> 0)");
    va_cmd->add_option("--cache", va_cache, "tau cache file");

    // ---- fit ----
    std::string fit_in, fit_mode = "max", fit_svg;
    auto* fit_cmd = app.add_subcommand("fit", "fit the growth exponent of a series CSV");
    fit_cmd->add_option("--in", fit_in, "input CSV")->required();
    fit_cmd->add_option("--mode", fit_mode, "point or max (default max)")
        ->check(CLI::IsMember({"point", "max"}));
    fit_cmd->add_option("--svg", fit_svg, "write a log-log chart here");

    // ---- verify ----
    heckelab::RunConfig vc;
    auto* ver_cmd = app.add_subcommand("verify", "run every module's invariant suite");
    ver_cmd->add_option("--seed", vc.seed, "seed for the randomized checks");
    ver_cmd->add_option("--n-max", vc.n_max, "table scale (default 10^5)");
    ver_cmd->add_option("--alpha", vc.alpha, "phase multiplier");
    ver_cmd->add_option("--ratio", vc.ratio, "grid ratio");
    ver_cmd->add_option("--cache", vc.cache_path, "tau cache to validate and reuse");

    // ---- diag ----
    double diag_alpha = 1.0;
    uint64_t diag_n = 100'000;
    std::string diag_cache;
    auto* diag_cmd = app.add_subcommand("diag", "comparison sums and their normalized ratios");
    diag_cmd->add_option("--alpha", diag_alpha, "phase multiplier (> 0)");
    diag_cmd->add_option("--n", diag_n, "summation limit");
    diag_cmd->add_option("--cache", diag_cache, "tau cache file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*tau_cmd) {
            if (tau_n_max > heckelab::kTauDefaultCap && !tau_huge) {
                std::cerr << "n-max " << tau_n_max << " exceeds " << heckelab::kTauDefaultCap
                          << "; pass --huge to allow\n";
                return 2;
            }
            heckelab::TauTable tau = heckelab::build_tau_table(tau_n_max);
            if (!tau_cache.empty()) {
                heckelab::save_tau_cache(resolve_out(tau_cache), tau);
                std::cout << "wrote " << resolve_out(tau_cache) << '\n';
            }
            std::printf("tau table built: n_max=%llu limbs=%u tau(2)=%.17g\n",
                        (unsigned long long)tau.n_max(), tau.limbs(), tau.value_double(2));
        } else if (*sum_cmd) {
            heckelab::TauTable tau = obtain_tau(sum_n_max, sum_cache);
            heckelab::LambdaTable lam = heckelab::normalize(tau);
            heckelab::SieveTables sv = heckelab::build_sieve(sum_n_max);
            heckelab::SumSeries series =
                heckelab::build_series(sum_alpha, sum_n_min, sum_n_max, sum_ratio, lam, sv,
                                       sum_workers);
            if (sum_out.empty())
                std::cout << heckelab::format_series_csv(series);
            else
                heckelab::write_series_csv(resolve_out(sum_out), series);
        } else if (*va_cmd) {
            heckelab::TauTable tau = obtain_tau(2 * va_block, va_cache);
            heckelab::LambdaTable lam = heckelab::normalize(tau);
            heckelab::SieveTables sv = heckelab::build_sieve(2 * va_block);
            heckelab::VaughanParams params(va_block);
            const auto comps = heckelab::component_sums(params, va_alpha, lam, sv);
            const double norm = std::pow(double(va_block), 5.0 / 6.0);
            std::printf("N,alpha,i,re,im,abs,abs_over_N56\n");
            for (int i = 0; i < 5; ++i) {
                const double mag = std::abs(comps[i]);
                std::printf("%llu,%.17g,%d,%.17g,%.17g,%.17g,%.17g\n",
                            (unsigned long long)va_block, va_alpha, i + 1, comps[i].real(),
                            comps[i].imag(), mag, mag / norm);
            }
        } else if (*fit_cmd) {
            heckelab::SumSeries series = heckelab::read_series_csv(fit_in);
            const auto mode = fit_mode == "point" ? heckelab::EnvelopeMode::pointwise
                                                  : heckelab::EnvelopeMode::running_max;
            const heckelab::FitResult fit = heckelab::fit_exponent(series, mode);
            std::printf("exponent=%.6f log_constant=%.6f residual_rms=%.6f window=[%llu,%llu] mode=%s\n",
                        fit.exponent, fit.log_constant, fit.residual_rms,
                        (unsigned long long)fit.window_lo, (unsigned long long)fit.window_hi,
                        fit_mode == "point" ? "pointwise" : "running-max");
            const heckelab::ZEstimate z = heckelab::estimate_Z(series);
            std::printf("Z_hat=%.6f%+.6fi spread=%.6f\n", z.z_hat.real(), z.z_hat.imag(),
                        z.spread);
            if (!fit_svg.empty()) heckelab::write_series_svg(resolve_out(fit_svg), series);
        } else if (*ver_cmd) {
            if (!vc.out_dir.empty()) vc.out_dir = resolve_out(vc.out_dir);
            return heckelab::run_verify(vc, std::cout);
        } else if (*diag_cmd) {
            heckelab::TauTable tau = obtain_tau(diag_n, diag_cache);
            heckelab::LambdaTable lam = heckelab::normalize(tau);
            heckelab::SieveTables sv = heckelab::build_sieve(diag_n);
            const auto d = heckelab::diagnostic_sums(diag_n, diag_alpha, lam, sv);
            std::printf("additive_twist=%.10g%+.10gi  |.|/sqrt(N)log(2N)=%.6g\n",
                        d.additive_twist.real(), d.additive_twist.imag(), d.additive_ratio);
            std::printf("eigen_sum=%.10g  |.|/N^(1/3)=%.6g\n", d.eigen_sum, d.eigen_ratio);
            std::printf("prime_eigen_sum=%.10g  |.|logN/sqrt(N)=%.6g\n", d.prime_eigen_sum,
                        d.prime_ratio);
            std::printf("mean_square=%.10g\n", d.mean_square);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
