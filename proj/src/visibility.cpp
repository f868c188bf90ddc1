#include "mesofringe/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/quadrature.hpp"

namespace mesofringe {

namespace {
constexpr double kPi = std::numbers::pi;
}

DecoherenceScenario make_scenario(const Experiment& experiment, double d_over_lambda, double gamma_t0,
                                  std::optional<double> x_over_dx) {
    if (!(d_over_lambda > 0.0) || !std::isfinite(d_over_lambda)) {
        throw DomainError("make_scenario: d/lambda must be positive");
    }
    DecoherenceScenario scenario;
    scenario.experiment = experiment;
    scenario.emitter = emitter_for_wavelength(experiment.geometry.separation / d_over_lambda);
    scenario.gamma_t0 = gamma_t0;
    scenario.x_over_dx = x_over_dx;
    validate(scenario);
    return scenario;
}

void validate(const DecoherenceScenario& scenario) {
    validate(scenario.experiment);
    validate(scenario.emitter);
    if (!(scenario.gamma_t0 >= 0.0)) throw DomainError("DecoherenceScenario: gamma t0 must be >= 0");
    if (scenario.x_over_dx && !(*scenario.x_over_dx > 0.0 && std::isfinite(*scenario.x_over_dx))) {
        throw DomainError("DecoherenceScenario: X/dx must be positive");
    }
}

double d_over_lambda(const DecoherenceScenario& scenario) {
    return scenario.experiment.geometry.separation / emission_wavelength(scenario.emitter);
}

double recoil_speed(const DecoherenceScenario& scenario) {
    validate(scenario);
    const auto& k = constants();
    return k.hbar * scenario.emitter.omega0 / (scenario.experiment.beam.mass * k.c);
}

ScreenScales screen_scales(const DecoherenceScenario& scenario) {
    validate(scenario);
    const Experiment& e = scenario.experiment;
    ScreenScales s;
    s.flight_time = flight_time(e.geometry, e.beam);
    s.period = fringe_period(e);
    s.spread = scenario.x_over_dx ? s.period / *scenario.x_over_dx : screen_spread(e);
    s.recoil_drift = recoil_speed(scenario) * s.flight_time;
    return s;
}

double exact_angular_average(double x, const DecoherenceScenario& scenario, double tol) {
    const ScreenScales s = screen_scales(scenario);
    if (s.recoil_drift == 0.0) return far_field_intensity(x, s.period, s.spread);

    // Integrate the dimensionless shape; the normalisation is applied after.
    const auto shape = [&](double xi) {
        const double shifted = x + s.recoil_drift * xi;
        const double z = shifted / s.spread;
        return std::exp(-0.5 * z * z) * (1.0 + std::cos(2.0 * kPi * shifted / s.period));
    };
    QuadratureOptions opts;
    opts.abs_tol = tol;
    // Resolve the fringes crossed by the drift before adapting.
    opts.initial_panels = static_cast<std::size_t>(std::clamp(std::ceil(4.0 * s.recoil_drift / s.period), 1.0, 4096.0));
    const double integral = integrate_adaptive(shape, -1.0, 1.0, opts).value;

    const double ratio = s.spread / s.period;
    const double norm = (1.0 + std::exp(-2.0 * kPi * kPi * ratio * ratio)) * std::sqrt(2.0 * kPi) * s.spread;
    return 0.5 * integral / norm;
}

double decohered_intensity_exact(double x, const DecoherenceScenario& scenario) {
    const ScreenScales s = screen_scales(scenario);
    const double survive = std::exp(-scenario.gamma_t0);
    const double emitted = -std::expm1(-scenario.gamma_t0);
    const double coherent = far_field_intensity(x, s.period, s.spread);
    if (emitted == 0.0) return coherent;
    return survive * coherent + emitted * exact_angular_average(x, scenario);
}

double decohered_intensity_approx(double x, const DecoherenceScenario& scenario) {
    const ScreenScales s = screen_scales(scenario);
    const double v = visibility_closed(scenario.gamma_t0, d_over_lambda(scenario));
    if (v == 1.0) return far_field_intensity(x, s.period, s.spread);
    const double z = x / s.spread;
    const double envelope = std::exp(-0.5 * z * z) / (std::sqrt(2.0 * kPi) * s.spread);
    const double ratio = s.spread / s.period;
    const double norm = 1.0 + v * std::exp(-2.0 * kPi * kPi * ratio * ratio);
    return envelope * (1.0 + v * std::cos(2.0 * kPi * x / s.period)) / norm;
}

double extract_visibility(const Pattern& pattern, double period) {
    validate(pattern);
    if (!(period > 0.0)) throw DomainError("extract_visibility: period must be positive");
    const Eigen::VectorXd& x = pattern.x;
    if (x.size() < 2 || x[0] > -period || x[x.size() - 1] < period) {
        throw ResolutionError("extract_visibility: grid must span [-X, X]");
    }

    double widest = 0.0;
    for (Eigen::Index i = 1; i < x.size(); ++i) {
        if (x[i] >= -period && x[i - 1] <= period) widest = std::max(widest, x[i] - x[i - 1]);
    }
    if (widest > period / 20.0) {
        throw ResolutionError("extract_visibility: fewer than 20 samples per fringe period");
    }

    double hi = -std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (std::abs(x[i]) <= 0.5 * period) {
            hi = std::max(hi, pattern.intensity[i]);
            lo = std::min(lo, pattern.intensity[i]);
        }
    }
    if (hi + lo <= 0.0) return 0.0;
    return (hi - lo) / (hi + lo);
}

Eigen::MatrixXd visibility_surface(const Eigen::VectorXd& gamma_t0_grid, const Eigen::VectorXd& d_over_lambda_grid) {
    if (gamma_t0_grid.size() == 0 || d_over_lambda_grid.size() == 0) {
        throw DomainError("visibility_surface: grids must be non-empty");
    }
    if ((gamma_t0_grid.array() < 0.0).any()) throw DomainError("visibility_surface: gamma t0 must be >= 0");
    const Eigen::Index rows = gamma_t0_grid.size();
    const Eigen::Index cols = d_over_lambda_grid.size();
    const Eigen::ArrayXXd g = gamma_t0_grid.array().replicate(1, cols);
    const Eigen::ArrayXXd dl = d_over_lambda_grid.transpose().array().replicate(rows, 1);
    return visibility_closed(g, dl).matrix();
}

std::vector<Eigen::Index> visibility_local_maxima(double gamma_t0, const Eigen::VectorXd& d_over_lambda_grid) {
    std::vector<Eigen::Index> maxima;
    const Eigen::Index n = d_over_lambda_grid.size();
    if (n < 3) return maxima;
    Eigen::VectorXd g = Eigen::VectorXd::Constant(1, gamma_t0);
    const Eigen::VectorXd v = visibility_surface(g, d_over_lambda_grid).row(0).cwiseAbs().transpose();
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        if (v[i] > v[i - 1] && v[i] > v[i + 1]) maxima.push_back(i);
    }
    return maxima;
}

std::vector<AnomalousInterval> anomalous_intervals(double gamma_t0, const Eigen::VectorXd& d_over_lambda_grid) {
    std::vector<AnomalousInterval> out;
    const Eigen::Index n = d_over_lambda_grid.size();
    if (n < 2) return out;
    Eigen::VectorXd g = Eigen::VectorXd::Constant(1, gamma_t0);
    const Eigen::VectorXd v = visibility_surface(g, d_over_lambda_grid).row(0).cwiseAbs().transpose();
    bool open = false;
    AnomalousInterval current;
    for (Eigen::Index i = 1; i < n; ++i) {
        const bool rising = v[i] > v[i - 1];
        if (rising && !open) {
            current.begin = d_over_lambda_grid[i - 1];
            open = true;
        }
        if (!rising && open) {
            current.end = d_over_lambda_grid[i - 1];
            out.push_back(current);
            open = false;
        }
    }
    if (open) {
        current.end = d_over_lambda_grid[n - 1];
        out.push_back(current);
    }
    return out;
}

}  // namespace mesofringe
