#pragma once

#include <cstddef>
#include <functional>

namespace mesofringe {

using RealFunction = std::function<double(double)>;

inline constexpr double kDefaultTolerance = 1e-10;

struct QuadratureOptions {
    double abs_tol = kDefaultTolerance;
    std::size_t max_subdivisions = 20000;
    // Equal-width panels the interval is split into before adaptation starts.
    // Raise it for integrands with features much narrower than [a, b].
    std::size_t initial_panels = 1;
};

struct IntegrationResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t evaluations = 0;
    std::size_t panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b].
/// Bisects the panel with the largest error estimate until the summed
/// estimate is at most opts.abs_tol. Throws IntegrationError once
/// max_subdivisions is exhausted, carrying the best estimate so far.
IntegrationResult integrate_adaptive(const RealFunction& f, double a, double b,
                                     const QuadratureOptions& opts = {});

inline double integrate(const RealFunction& f, double a, double b, double tol = kDefaultTolerance) {
    QuadratureOptions opts;
    opts.abs_tol = tol;
    return integrate_adaptive(f, a, b, opts).value;
}

/// Cauchy principal value of the integral of numerator(x) / (x - pole) over [a, b].
///
/// The caller passes only the regular numerator. The symmetric part
/// [pole - r, pole + r], r = min(pole - a, b - pole), is folded into
/// (numerator(pole + u) - numerator(pole - u)) / u on (0, r], which is
/// bounded at u = 0; the leftover one-sided piece is an ordinary integral.
IntegrationResult principal_value_adaptive(const RealFunction& numerator, double pole, double a,
                                           double b, const QuadratureOptions& opts = {});

inline double principal_value_integrate(const RealFunction& numerator, double pole, double a,
                                        double b, double tol = kDefaultTolerance) {
    QuadratureOptions opts;
    opts.abs_tol = tol;
    return principal_value_adaptive(numerator, pole, a, b, opts).value;
}

}  // namespace mesofringe
