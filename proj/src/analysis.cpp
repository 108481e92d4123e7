#include "heckelab/analysis.hpp"

#include <cmath>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

FitResult fit_exponent(const SumSeries& series, EnvelopeMode mode) {
    std::vector<double> lx, ly;
    double env = 0;
    for (std::size_t j = 0; j < series.grid.size(); ++j) {
        const double mag = std::abs(series.values[j]);
        double y = mag;
        if (mode == EnvelopeMode::running_max) {
            env = std::max(env, mag);
            y = env;
        }
        if (y <= 0) continue;
        lx.push_back(std::log(double(series.grid[j])));
        ly.push_back(std::log(y));
    }
    if (lx.size() < 8)
        throw InsufficientData("exponent fit needs at least 8 usable grid points, got " +
                               std::to_string(lx.size()));

    const std::size_t n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = double(n) * sxx - sx * sx;
    const double slope = (double(n) * sxy - sx * sy) / denom;
    const double intercept = (sy - slope * sx) / double(n);
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (slope * lx[i] + intercept);
        rss += r * r;
    }
    FitResult out;
    out.exponent = slope;
    out.log_constant = intercept;
    out.residual_rms = std::sqrt(rss / double(n));
    out.window_lo = series.grid.front();
    out.window_hi = series.grid.back();
    out.mode = mode;
    return out;
}

ZEstimate estimate_Z(const SumSeries& series) {
    if (series.grid.size() < 8)
        throw InsufficientData("Z estimate needs at least 8 grid points, got " +
                               std::to_string(series.grid.size()));
    std::vector<std::complex<double>> z(series.grid.size());
    std::complex<double> mean{0, 0};
    for (std::size_t j = 0; j < z.size(); ++j) {
        z[j] = series.values[j] / std::pow(double(series.grid[j]), 0.75);
        mean += z[j];
    }
    mean /= double(z.size());
    double spread = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            spread = std::max(spread, std::abs(z[i] - z[j]));
    return {mean, spread};
}

}  // namespace heckelab
