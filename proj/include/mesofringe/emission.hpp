#pragma once

#include <complex>
#include <cstddef>
#include <limits>

#include <Eigen/Core>

namespace mesofringe {

/// Two-level emitter: transition frequency and dipole matrix element |<e|x|g>|.
struct TwoLevelEmitter {
    double omega0 = 0.0;         // rad/s
    double dipole_length = 0.0;  // m
};

void validate(const TwoLevelEmitter& emitter);

/// lambda_em = 2 pi c / omega0.
double emission_wavelength(const TwoLevelEmitter& emitter);
/// Emitter whose transition wavelength is lambda_em.
TwoLevelEmitter emitter_for_wavelength(double wavelength, double dipole_length = 0.0);

/// Golden-rule rate gamma = (4/3) alpha_fs omega0^3 |d|^2 / c^2.
double decay_rate(const TwoLevelEmitter& emitter);

enum class FormFactorKind { flat, lorentzian };

/// Spectral coupling density Gamma(omega) of the reservoir.
///
/// The line is centred at omega0 + detuning with height `peak` and
/// half-width `bandwidth`:
///   flat:       peak for |omega - omega0 - detuning| < bandwidth, else 0
///   lorentzian: peak bandwidth^2 / ((omega - omega0 - detuning)^2 + bandwidth^2)
/// A zero peak describes an uncoupled emitter.
struct FormFactor {
    FormFactorKind kind = FormFactorKind::lorentzian;
    double omega0 = 0.0;
    double bandwidth = 0.0;
    double peak = 0.0;
    double detuning = 0.0;
};

void validate(const FormFactor& ff);

/// Gamma(omega0 + u), u the detuning from the transition frequency.
double form_factor_at_detuning(const FormFactor& ff, double u);
inline double form_factor(const FormFactor& ff, double omega) {
    return form_factor_at_detuning(ff, omega - ff.omega0);
}

/// gamma = Gamma(omega0), the Markov-limit decay rate of this reservoir.
double golden_rule_rate(const FormFactor& ff);

/// Delta = P int dw/2pi Gamma(w) / (w0 - w). Lorentzian lines are truncated
/// to |w - w0| <= |detuning| + 50 bandwidth. Tolerance is relative to peak.
double lamb_shift(const FormFactor& ff, double rel_tol = 1e-10);

/// sigma(t) = int dw/2pi Gamma(w) exp(-i (w - w0) t), t >= 0 (closed forms).
std::complex<double> memory_kernel(const FormFactor& ff, double t);

/// Weisskopf-Wigner amplitude exp(-i Delta t - gamma t / 2).
std::complex<double> markov_amplitude(double gamma, double lamb, double t);

enum class SolverTag { markov, volterra };

/// Survival amplitude alpha(t) sampled on a uniform time grid.
struct DecayAmplitudeSeries {
    Eigen::VectorXd times;
    Eigen::VectorXcd alpha;
    SolverTag solver = SolverTag::markov;
    // Largest change between successive step-halvings (volterra only).
    double convergence = std::numeric_limits<double>::quiet_NaN();
};

DecayAmplitudeSeries markov_series(double gamma, double lamb, double t_max, std::size_t n_steps);

struct VolterraOptions {
    double halving_tol = 1e-6;
};

/// Step count resolving both the kernel memory time 1/bandwidth and any
/// detuning over [0, t_max]: max(100, ceil(8 (bandwidth + |detuning|) t_max)).
std::size_t suggested_volterra_steps(const FormFactor& ff, double t_max);

/// Solves alpha'(t) = -int_0^t sigma(tau) alpha(t - tau) dtau, alpha(0) = 1.
///
/// Trapezoid convolution with an implicit trapezoid step, run at h, h/2 and
/// h/4 (h = t_max / n_steps). The returned values are the Richardson
/// combination of the h/2 and h/4 runs at the n_steps + 1 coarse points; the
/// same combination from the h and h/2 runs must agree within
/// opts.halving_tol or ConvergenceError is thrown.
DecayAmplitudeSeries solve_nonmarkov(const FormFactor& ff, double t_max, std::size_t n_steps,
                                     const VolterraOptions& opts = {});

/// |beta(t)|^2 for a photon mode detuned by (omega_i - omega0):
///   coupling_sq |1 - exp(i detuning t - gamma t / 2)|^2 / (detuning^2 + gamma^2 / 4),
/// coupling_sq = |Phi_i|^2 / hbar^2.
double beta_weight(double detuning, double t, double gamma, double coupling_sq);

/// Total emission probability 1 - exp(-gamma t).
double emission_probability(double gamma, double t);

/// Same quantity summed mode by mode: integral of rho |beta(omega, t)|^2 over
/// a flat band |omega - omega0| < bandwidth with the golden-rule coupling
/// density rho |Phi|^2 / hbar^2 = gamma / 2 pi.
double emission_probability_numeric(double gamma, double t, double bandwidth, double tol = 1e-10);

}  // namespace mesofringe
