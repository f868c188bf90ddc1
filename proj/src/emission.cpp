#include "mesofringe/emission.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/quadrature.hpp"
#include "mesofringe/special.hpp"

namespace mesofringe {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

void require_time(double t, const char* where) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError(std::string(where) + ": time must be finite and >= 0");
    }
}

// Implicit-trapezoid march of alpha' = -(sigma * alpha) with trapezoid
// convolution. kernel[j] = sigma(j h), stride picks every stride-th sample.
std::vector<Complex> trapezoid_march(const std::vector<Complex>& kernel, std::size_t stride,
                                     std::size_t steps, double h) {
    std::vector<Complex> s(steps + 1);
    for (std::size_t j = 0; j <= steps; ++j) s[j] = kernel[j * stride];

    std::vector<Complex> a(steps + 1);
    a[0] = 1.0;
    Complex deriv_prev = 0.0;
    const Complex denom = 1.0 + 0.25 * h * h * s[0];
    for (std::size_t n = 1; n <= steps; ++n) {
        Complex partial = 0.5 * s[n] * a[0];
        for (std::size_t j = 1; j < n; ++j) partial += s[j] * a[n - j];
        partial *= h;
        a[n] = (a[n - 1] + 0.5 * h * (deriv_prev - partial)) / denom;
        deriv_prev = -(partial + 0.5 * h * s[0] * a[n]);
    }
    return a;
}

}  // namespace

void validate(const TwoLevelEmitter& emitter) {
    if (!(emitter.omega0 > 0.0) || !std::isfinite(emitter.omega0)) {
        throw DomainError("TwoLevelEmitter: omega0 must be positive");
    }
    if (!(emitter.dipole_length >= 0.0) || !std::isfinite(emitter.dipole_length)) {
        throw DomainError("TwoLevelEmitter: dipole length must be non-negative");
    }
}

double emission_wavelength(const TwoLevelEmitter& emitter) {
    validate(emitter);
    return 2.0 * kPi * constants().c / emitter.omega0;
}

TwoLevelEmitter emitter_for_wavelength(double wavelength, double dipole_length) {
    if (!(wavelength > 0.0) || !std::isfinite(wavelength)) {
        throw DomainError("emitter_for_wavelength: wavelength must be positive");
    }
    TwoLevelEmitter emitter{2.0 * kPi * constants().c / wavelength, dipole_length};
    validate(emitter);
    return emitter;
}

double decay_rate(const TwoLevelEmitter& emitter) {
    validate(emitter);
    const auto& k = constants();
    const double w = emitter.omega0;
    const double d = emitter.dipole_length;
    return 4.0 / 3.0 * k.alpha_fs * w * w * w * d * d / (k.c * k.c);
}

void validate(const FormFactor& ff) {
    if (!std::isfinite(ff.omega0) || !std::isfinite(ff.detuning)) {
        throw DomainError("FormFactor: omega0 and detuning must be finite");
    }
    if (!(ff.bandwidth > 0.0) || !std::isfinite(ff.bandwidth)) {
        throw DomainError("FormFactor: bandwidth must be positive");
    }
    if (!(ff.peak >= 0.0) || !std::isfinite(ff.peak)) {
        throw DomainError("FormFactor: peak must be non-negative");
    }
}

double form_factor_at_detuning(const FormFactor& ff, double u) {
    const double offset = u - ff.detuning;
    switch (ff.kind) {
        case FormFactorKind::flat:
            return std::abs(offset) < ff.bandwidth ? ff.peak : 0.0;
        case FormFactorKind::lorentzian: {
            const double b2 = ff.bandwidth * ff.bandwidth;
            return ff.peak * b2 / (offset * offset + b2);
        }
    }
    return 0.0;
}

double golden_rule_rate(const FormFactor& ff) {
    validate(ff);
    return form_factor_at_detuning(ff, 0.0);
}

double lamb_shift(const FormFactor& ff, double rel_tol) {
    validate(ff);
    if (ff.peak == 0.0) return 0.0;

    double lo = 0.0;
    double hi = 0.0;
    if (ff.kind == FormFactorKind::flat) {
        lo = ff.detuning - ff.bandwidth;
        hi = ff.detuning + ff.bandwidth;
    } else {
        const double reach = std::abs(ff.detuning) + 50.0 * ff.bandwidth;
        lo = -reach;
        hi = reach;
    }

    QuadratureOptions opts;
    opts.abs_tol = rel_tol * ff.peak;
    opts.initial_panels = 16;
    const auto gamma_of = [&](double u) { return form_factor_at_detuning(ff, u); };

    double pv = 0.0;
    if (lo < 0.0 && 0.0 < hi) {
        pv = principal_value_adaptive(gamma_of, 0.0, lo, hi, opts).value;
    } else if (lo == 0.0 || hi == 0.0) {
        throw DomainError("lamb_shift: transition frequency sits on a band edge (log divergence)");
    } else {
        pv = integrate_adaptive([&](double u) { return gamma_of(u) / u; }, lo, hi, opts).value;
    }
    // P int Gamma / (w0 - w) = -P int Gamma(w0 + u) / u du.
    return 0.0 - pv / (2.0 * kPi);
}

std::complex<double> memory_kernel(const FormFactor& ff, double t) {
    validate(ff);
    require_time(t, "memory_kernel");
    const Complex phase = std::polar(1.0, -ff.detuning * t);
    switch (ff.kind) {
        case FormFactorKind::flat:
            // (gamma / 2 pi) 2 sin(Lambda t) / t, continuous at t = 0.
            return phase * (ff.peak * ff.bandwidth / kPi) * sinc(ff.bandwidth * t);
        case FormFactorKind::lorentzian:
            return phase * (0.5 * ff.peak * ff.bandwidth) * std::exp(-ff.bandwidth * t);
    }
    return 0.0;
}

std::complex<double> markov_amplitude(double gamma, double lamb, double t) {
    require_time(t, "markov_amplitude");
    return std::exp(Complex(-0.5 * gamma * t, -lamb * t));
}

DecayAmplitudeSeries markov_series(double gamma, double lamb, double t_max, std::size_t n_steps) {
    if (!(t_max > 0.0) || n_steps < 1) throw DomainError("markov_series: need t_max > 0 and n_steps >= 1");
    DecayAmplitudeSeries out;
    out.solver = SolverTag::markov;
    const auto n = static_cast<Eigen::Index>(n_steps);
    out.times = Eigen::VectorXd::LinSpaced(n + 1, 0.0, t_max);
    out.alpha.resize(n + 1);
    for (Eigen::Index i = 0; i <= n; ++i) out.alpha[i] = markov_amplitude(gamma, lamb, out.times[i]);
    return out;
}

std::size_t suggested_volterra_steps(const FormFactor& ff, double t_max) {
    validate(ff);
    const double scale = ff.bandwidth + std::abs(ff.detuning);
    const double steps = std::ceil(8.0 * scale * t_max);
    return std::max<std::size_t>(100, static_cast<std::size_t>(steps));
}

DecayAmplitudeSeries solve_nonmarkov(const FormFactor& ff, double t_max, std::size_t n_steps,
                                     const VolterraOptions& opts) {
    validate(ff);
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("solve_nonmarkov: t_max must be positive");
    if (n_steps < 100) throw DomainError("solve_nonmarkov: n_steps must be at least 100");

    const std::size_t fine_steps = 4 * n_steps;
    const double h_fine = t_max / static_cast<double>(fine_steps);
    std::vector<Complex> kernel(fine_steps + 1);
    for (std::size_t j = 0; j <= fine_steps; ++j) {
        kernel[j] = memory_kernel(ff, static_cast<double>(j) * h_fine);
    }

    const auto coarse = trapezoid_march(kernel, 4, n_steps, 4.0 * h_fine);
    const auto mid = trapezoid_march(kernel, 2, 2 * n_steps, 2.0 * h_fine);
    const auto fine = trapezoid_march(kernel, 1, fine_steps, h_fine);

    DecayAmplitudeSeries out;
    out.solver = SolverTag::volterra;
    const auto n = static_cast<Eigen::Index>(n_steps);
    out.times = Eigen::VectorXd::LinSpaced(n + 1, 0.0, t_max);
    out.alpha.resize(n + 1);
    double discrepancy = 0.0;
    for (std::size_t k = 0; k <= n_steps; ++k) {
        const Complex rough = (4.0 * mid[2 * k] - coarse[k]) / 3.0;
        const Complex sharp = (4.0 * fine[4 * k] - mid[2 * k]) / 3.0;
        discrepancy = std::max(discrepancy, std::abs(sharp - rough));
        out.alpha[static_cast<Eigen::Index>(k)] = sharp;
    }
    out.alpha[0] = 1.0;
    out.convergence = discrepancy;
    if (!(discrepancy <= opts.halving_tol)) {
        std::ostringstream msg;
        msg << "solve_nonmarkov: step halving changed alpha by " << discrepancy << " (tolerance "
            << opts.halving_tol << "); increase n_steps";
        throw ConvergenceError(msg.str(), discrepancy);
    }
    return out;
}

double beta_weight(double detuning, double t, double gamma, double coupling_sq) {
    require_time(t, "beta_weight");
    const double decay = std::exp(-0.5 * gamma * t);
    // |1 - e^{i u t} e^{-gamma t/2}|^2 = 1 - 2 e^{-gamma t/2} cos(u t) + e^{-gamma t}
    const double modulus = 1.0 - 2.0 * decay * std::cos(detuning * t) + decay * decay;
    return coupling_sq * modulus / (detuning * detuning + 0.25 * gamma * gamma);
}

double emission_probability(double gamma, double t) {
    require_time(t, "emission_probability");
    return -std::expm1(-gamma * t);
}

double emission_probability_numeric(double gamma, double t, double bandwidth, double tol) {
    require_time(t, "emission_probability_numeric");
    if (!(gamma > 0.0) || !(bandwidth > 0.0)) {
        throw DomainError("emission_probability_numeric: gamma and bandwidth must be positive");
    }
    // Work in s = (omega - omega0) / gamma; the integrand is even in s.
    const double tau = gamma * t;
    const double reach = bandwidth / gamma;
    const auto weight = [tau](double s) {
        return beta_weight(s, tau, 1.0, 1.0 / (2.0 * kPi));
    };
    QuadratureOptions opts;
    opts.abs_tol = 0.5 * tol;
    opts.initial_panels = static_cast<std::size_t>(std::clamp(std::ceil(reach * (1.0 + tau)), 8.0, 4096.0));
    return 2.0 * integrate_adaptive(weight, 0.0, reach, opts).value;
}

}  // namespace mesofringe
