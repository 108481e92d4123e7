#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

namespace heckelab {

// Real phase with two derivative evaluators. The checks sample the
// derivatives, so they must be valid on the whole interval in play.
struct PhaseFn {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
    int smoothness = 2;  // continuous derivatives claimed
};

struct QuadratureResult {
    std::complex<double> value;
    double estimated_error = 0;
    long evaluations = 0;
};

struct QuadratureOptions {
    double tol = 1e-8;
    long max_evals = 2'000'000;
    int min_panels = 0;  // extra mesh control for convergence tests
};

// integral of e(f(x)) = exp(2 pi i f(x)) over [a,b]. Adaptive Gauss-Kronrod
// 7/15 panels, seeded at width <= 1/(4 max|f'| + 1) so each panel sees a
// bounded number of oscillations. Throws BudgetExceeded (carrying the best
// estimate) if tol is out of reach within the evaluation cap.
QuadratureResult oscillatory_integral(const PhaseFn& f, double a, double b,
                                      const QuadratureOptions& opts);
QuadratureResult oscillatory_integral(const PhaseFn& f, double a, double b, double tol = 1e-8);

struct PoissonCheck {
    std::complex<double> lhs;  // sum over integers a < n < b of e(f(n))
    std::complex<double> rhs;  // integral of e(f) over [a,b]
    double discrepancy;        // |lhs - rhs|
    double bound;              // 1/theta
};

// Truncated Poisson comparison under |f'| <= 1 - theta, f'' != 0 (sampled).
PoissonCheck truncated_poisson_check(const PhaseFn& f, double a, double b, double theta);

struct DerivBoundCheck {
    double integral_abs;
    double bound;  // (1/pi) (1/|f'(a)| + 1/|f'(b)|)
};

// First-derivative test in its reciprocal form, valid when f' f'' has no
// zero on [a,b]; throws std::logic_error if the computed integral ever
// exceeded the bound beyond quadrature error.
DerivBoundCheck first_derivative_bound_check(const PhaseFn& f, double a, double b);

struct StationaryPhaseCheck {
    std::complex<double> integral;
    std::complex<double> main_term;  // e(f(c) + 1/8) / sqrt(f''(c))
    double error;                    // |integral - main_term|
    double lambda_budget;            // (1/Lambda)(1/(b-c) + 1/(c-a) + 1/X)
};

// Stationary-phase main term at the interior critical point c, with the
// error budget driven by Lambda = min f'' and the sampled third/fourth
// derivative scales.
StationaryPhaseCheck stationary_phase_eval(const PhaseFn& f, double a, double b, double c);

struct TransformCheck {
    std::complex<double> lhs;       // e(-alpha sqrt(n))
    std::complex<double> rhs_main;  // e(-1/8) (2 pi sqrt(alpha))^{-1} n^{-1/4} * integral
    double residual;                // |lhs - rhs_main|
};

// Integral representation of e(-alpha sqrt(n)) over the dyadic block:
// phase f(t) = (t/2pi) log(t/(e x)) on [T, 4T], T = pi alpha sqrt(N),
// x = 2 pi alpha sqrt(n), N < n <= 2N. Residual should be O(N^{-1/4}).
TransformCheck sqrt_transform_check(uint64_t n, uint64_t N, double alpha);

struct LargeSieveCheck {
    double integral;  // exact cross-term expansion of the mean square
    double main;      // T * sum |a_n|^2
    double defect;    // |integral - main|
    double bound;     // sum |a_n|^2 / delta
};

// Mean square of sum a_n e(lambda_n t) over [0, T], integrated in closed
// form per cross term; delta is the smallest frequency gap.
LargeSieveCheck large_sieve_check(std::span<const double> lambdas,
                                  std::span<const std::complex<double>> coeffs, double T);

}  // namespace heckelab
