#include "heckelab/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

#include "heckelab/errors.hpp"

namespace heckelab {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;
constexpr double kPi = std::numbers::pi;

// e(x) with the argument reduced mod 1 in extended precision.
std::complex<double> unit(long double x) {
    const long double frac = x - floorl(x);
    const double ang = double(kTwoPiL * frac);
    return {std::cos(ang), std::sin(ang)};
}

// Gauss-Kronrod 7/15 on [-1,1].
constexpr double kXgk[15] = {
    -0.99145537112081261193, -0.94910791234275848260, -0.86486442335976909673,
    -0.74153118559939446009, -0.58608723546769114784, -0.40584515137739718426,
    -0.20778495500789850858, 0.0,
    0.20778495500789850858,  0.40584515137739718426,  0.58608723546769114784,
    0.74153118559939446009,  0.86486442335976909673,  0.94910791234275848260,
    0.99145537112081261193};
constexpr double kWgk[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr double kWg[15] = {0, 0.129484966168869693270611432679082, 0,
                            0.279705391489276667901467771423780, 0,
                            0.381830050505118944950369775488975, 0,
                            0.417959183673469387755102040816327, 0,
                            0.381830050505118944950369775488975, 0,
                            0.279705391489276667901467771423780, 0,
                            0.129484966168869693270611432679082, 0};

struct Panel {
    double a, b;
    std::complex<double> val;
    double err;
};

Panel eval_panel(const PhaseFn& f, double a, double b) {
    const double mid = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> k{0, 0}, g{0, 0};
    for (int i = 0; i < 15; ++i) {
        const std::complex<double> y = unit((long double)f.f(mid + h * kXgk[i]));
        k += kWgk[i] * y;
        if (kWg[i] != 0) g += kWg[i] * y;
    }
    return {a, b, k * h, std::abs(k - g) * h};
}

struct WorstFirst {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.err != y.err) return x.err < y.err;
        return x.a < y.a;  // deterministic tie-break
    }
};

double sampled_max_abs(const std::function<double(double)>& g, double a, double b, int n = 129) {
    double m = 0;
    for (int i = 0; i <= n; ++i) m = std::max(m, std::abs(g(a + (b - a) * i / n)));
    return m;
}

}  // namespace

QuadratureResult oscillatory_integral(const PhaseFn& f, double a, double b,
                                      const QuadratureOptions& opts) {
    if (!(a < b)) throw std::invalid_argument("need a < b");
    const double fmax = sampled_max_abs(f.df, a, b);
    long npanels = long(std::ceil((b - a) * (4.0 * fmax + 1.0)));
    npanels = std::clamp<long>(std::max<long>(npanels, opts.min_panels), 1, 1 << 16);

    long evals = 0;
    std::priority_queue<Panel, std::vector<Panel>, WorstFirst> heap;
    double total_err = 0;
    for (long i = 0; i < npanels; ++i) {
        const double pa = a + (b - a) * double(i) / double(npanels);
        const double pb = i + 1 == npanels ? b : a + (b - a) * double(i + 1) / double(npanels);
        Panel p = eval_panel(f, pa, pb);
        evals += 15;
        total_err += p.err;
        heap.push(p);
    }
    const double width_floor = (b - a) * 1e-14;
    while (total_err > opts.tol) {
        if (evals + 30 > opts.max_evals || heap.top().b - heap.top().a < width_floor) {
            // drain for the best estimate, then report the budget failure
            std::vector<Panel> rest;
            while (!heap.empty()) {
                rest.push_back(heap.top());
                heap.pop();
            }
            std::sort(rest.begin(), rest.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
            std::complex<double> v{0, 0};
            double e = 0;
            for (const auto& p : rest) {
                v += p.val;
                e += p.err;
            }
            throw BudgetExceeded("quadrature tolerance unreachable within evaluation cap", v, e,
                                 evals);
        }
        Panel worst = heap.top();
        heap.pop();
        total_err -= worst.err;
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = eval_panel(f, worst.a, mid);
        Panel right = eval_panel(f, mid, worst.b);
        evals += 30;
        total_err += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }
    std::vector<Panel> rest;
    while (!heap.empty()) {
        rest.push_back(heap.top());
        heap.pop();
    }
    std::sort(rest.begin(), rest.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadratureResult out;
    for (const auto& p : rest) {
        out.value += p.val;
        out.estimated_error += p.err;
    }
    out.evaluations = evals;
    return out;
}

QuadratureResult oscillatory_integral(const PhaseFn& f, double a, double b, double tol) {
    QuadratureOptions opts;
    opts.tol = tol;
    return oscillatory_integral(f, a, b, opts);
}

PoissonCheck truncated_poisson_check(const PhaseFn& f, double a, double b, double theta) {
    if (!(theta > 0 && theta < 1)) throw std::invalid_argument("theta must lie in (0,1)");
    if (!(a < b)) throw std::invalid_argument("need a < b");
    const int samples = 512;
    for (int i = 0; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        if (std::abs(f.df(x)) > 1.0 - theta)
            throw PreconditionError("|f'| exceeds 1 - theta at x = " + std::to_string(x), x);
        if (f.d2f(x) == 0.0)
            throw PreconditionError("f'' vanishes at x = " + std::to_string(x), x);
    }
    std::complex<double> lhs{0, 0};
    for (double n = std::floor(a) + 1; n < b; n += 1.0) {
        if (n <= a) continue;
        lhs += unit((long double)f.f(n));
    }
    const QuadratureResult integral = oscillatory_integral(f, a, b, 1e-8);
    return {lhs, integral.value, std::abs(lhs - integral.value), 1.0 / theta};
}

DerivBoundCheck first_derivative_bound_check(const PhaseFn& f, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("need a < b");
    const int samples = 512;
    for (int i = 0; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        if (f.df(x) == 0.0) throw PreconditionError("f' vanishes at x = " + std::to_string(x), x);
        if (f.d2f(x) == 0.0) throw PreconditionError("f'' vanishes at x = " + std::to_string(x), x);
    }
    const QuadratureResult integral = oscillatory_integral(f, a, b, 1e-9);
    const double bound = (1.0 / kPi) * (1.0 / std::abs(f.df(a)) + 1.0 / std::abs(f.df(b)));
    const double abs_val = std::abs(integral.value);
    if (abs_val > bound + integral.estimated_error + 1e-12)
        throw std::logic_error("first-derivative bound violated: |integral| = " +
                               std::to_string(abs_val) + " > " + std::to_string(bound));
    return {abs_val, bound};
}

StationaryPhaseCheck stationary_phase_eval(const PhaseFn& f, double a, double b, double c) {
    if (!(a < c && c < b)) throw PreconditionError("critical point must be interior", c);
    const double dmax = sampled_max_abs(f.df, a, b);
    if (std::abs(f.df(c)) > 1e-7 * (1.0 + dmax))
        throw PreconditionError("f'(c) does not vanish", c);

    const int samples = 512;
    double lambda_min = std::numeric_limits<double>::infinity();
    double d2max = 0;
    for (int i = 0; i <= samples; ++i) {
        const double x = a + (b - a) * i / samples;
        const double v = f.d2f(x);
        if (v < lambda_min) lambda_min = v;
        d2max = std::max(d2max, std::abs(v));
    }
    if (!(lambda_min > 0))
        throw PreconditionError("f'' must be bounded below by a positive Lambda", c);

    // third/fourth derivative scales from central differences of f''
    const double h = (b - a) / 4096.0;
    double m3 = 0, m4 = 0;
    for (int i = 1; i < 256; ++i) {
        const double x = a + (b - a) * i / 256.0;
        if (x - h < a || x + h > b) continue;
        const double up = f.d2f(x + h), dn = f.d2f(x - h), mid = f.d2f(x);
        m3 = std::max(m3, std::abs(up - dn) / (2 * h));
        m4 = std::max(m4, std::abs(up - 2 * mid + dn) / (h * h));
    }
    const double noise3 = 64 * std::numeric_limits<double>::epsilon() * d2max / h;
    const double noise4 = 64 * std::numeric_limits<double>::epsilon() * d2max / (h * h);
    double inv_x = 0;  // 1/X, zero when the phase is (numerically) quadratic
    if (m3 > noise3) inv_x = std::max(inv_x, m3 / lambda_min);
    if (m4 > noise4) inv_x = std::max(inv_x, std::sqrt(m4 / lambda_min));

    const QuadratureResult integral = oscillatory_integral(f, a, b, 1e-9 * (1.0 + b - a));
    const std::complex<double> main =
        unit((long double)f.f(c) + 0.125L) / std::sqrt(f.d2f(c));
    StationaryPhaseCheck out;
    out.integral = integral.value;
    out.main_term = main;
    out.error = std::abs(integral.value - main);
    out.lambda_budget = (1.0 / lambda_min) * (1.0 / (b - c) + 1.0 / (c - a) + inv_x);
    return out;
}

TransformCheck sqrt_transform_check(uint64_t n, uint64_t N, double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(n > N && n <= 2 * N)) throw PreconditionError("n must lie in (N, 2N]", double(n));
    const double T = kPi * alpha * std::sqrt(double(N));
    const double x = 2.0 * kPi * alpha * std::sqrt(double(n));
    PhaseFn phase;
    phase.f = [x](double t) { return t / (2 * kPi) * std::log(t / (std::exp(1.0) * x)); };
    phase.df = [x](double t) { return std::log(t / x) / (2 * kPi); };
    phase.d2f = [](double t) { return 1.0 / (2 * kPi * t); };
    phase.smoothness = 4;

    const QuadratureResult integral = oscillatory_integral(phase, T, 4 * T, 1e-8);
    const long double sqn = sqrtl((long double)n);
    const std::complex<double> lhs = unit(-(long double)alpha * sqn);
    const std::complex<double> rhs_main = unit(-0.125L) / (2.0 * kPi * std::sqrt(alpha)) *
                                          std::pow(double(n), -0.25) * integral.value;
    return {lhs, rhs_main, std::abs(lhs - rhs_main)};
}

LargeSieveCheck large_sieve_check(std::span<const double> lambdas,
                                  std::span<const std::complex<double>> coeffs, double T) {
    if (lambdas.empty() || lambdas.size() != coeffs.size())
        throw std::invalid_argument("need matching nonempty frequency/coefficient lists");
    if (!(T > 0)) throw std::invalid_argument("T must be positive");
    const std::size_t n = lambdas.size();

    double delta = std::numeric_limits<double>::infinity();
    {
        std::vector<double> sorted(lambdas.begin(), lambdas.end());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < n; ++i) delta = std::min(delta, sorted[i] - sorted[i - 1]);
        if (n > 1 && !(delta > 0)) throw std::invalid_argument("duplicate frequencies");
    }

    double s2 = 0;
    for (const auto& a : coeffs) s2 += std::norm(a);

    double integral = T * s2;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double beta = lambdas[i] - lambdas[j];
            // closed form: integral of e(beta t) over [0,T]
            const std::complex<double> num = unit((long double)beta * T) - 1.0;
            const std::complex<double> cross =
                coeffs[i] * std::conj(coeffs[j]) * num / std::complex<double>(0, 2 * kPi * beta);
            integral += 2 * cross.real();
        }
    }
    LargeSieveCheck out;
    out.integral = integral;
    out.main = T * s2;
    out.defect = std::abs(integral - out.main);
    out.bound = s2 / delta;  // delta = inf for a single frequency, so bound = 0 = defect
    return out;
}

}  // namespace heckelab
