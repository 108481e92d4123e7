#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace heckelab {

// CRT basis cannot represent the requested table (message names the
// required bit length / transform length).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A sampled hypothesis of one of the analytic checks failed; carries the
// offending abscissa when there is one.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what, double where = 0.0)
        : std::runtime_error(what), offending_x(where) {}
    double offending_x;
};

// Requested quadrature tolerance was not reached within the evaluation
// cap; carries the best estimate obtained so far.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::complex<double> value,
                   double estimated_error, long evaluations)
        : std::runtime_error(what),
          value(value),
          estimated_error(estimated_error),
          evaluations(evaluations) {}
    std::complex<double> value;
    double estimated_error;
    long evaluations;
};

// Fewer usable data points than a fit/estimate needs.
class InsufficientData : public std::runtime_error {
public:
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heckelab
