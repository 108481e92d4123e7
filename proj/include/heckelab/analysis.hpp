#pragma once

#include <complex>
#include <cstdint>

#include "heckelab/twisted.hpp"

namespace heckelab {

enum class EnvelopeMode { pointwise, running_max };

struct FitResult {
    double exponent;      // slope of log|S| (or log running max) vs log N
    double log_constant;  // intercept
    double residual_rms;
    uint64_t window_lo, window_hi;
    EnvelopeMode mode;
};

// Ordinary least squares on the log-log series; needs >= 8 points with
// nonzero magnitude, else throws InsufficientData.
FitResult fit_exponent(const SumSeries& series, EnvelopeMode mode = EnvelopeMode::running_max);

struct ZEstimate {
    std::complex<double> z_hat;  // mean of S(N) / N^{3/4}
    double spread;               // max pairwise distance of the normalized values
};

ZEstimate estimate_Z(const SumSeries& series);

}  // namespace heckelab
