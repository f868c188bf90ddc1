#include "mesofringe/doubleslit.hpp"

#include <cmath>
#include <numbers>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/parallel.hpp"

namespace mesofringe {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

constexpr double kPi = std::numbers::pi;

}  // namespace

void validate(const SlitGeometry& geometry) {
    if (!positive(geometry.slit_width) || !positive(geometry.separation) ||
        !positive(geometry.screen_distance)) {
        throw DomainError("SlitGeometry: slit width, separation and screen distance must be positive");
    }
}

void validate(const BeamParams& beam) {
    if (!positive(beam.mass) || !positive(beam.speed) || !positive(beam.mom_spread)) {
        throw DomainError("BeamParams: mass, speed and momentum spread must be positive");
    }
}

void validate(const Experiment& experiment) {
    validate(experiment.geometry);
    validate(experiment.beam);
    if (!std::isfinite(experiment.eta0)) throw DomainError("Experiment: eta0 must be finite");
}

double wavenumber(const BeamParams& beam) {
    validate(beam);
    return beam.mass * beam.speed / constants().hbar;
}

double de_broglie_wavelength(const BeamParams& beam) { return 2.0 * kPi / wavenumber(beam); }

double flight_time(const SlitGeometry& geometry, const BeamParams& beam) {
    validate(geometry);
    validate(beam);
    return geometry.screen_distance / beam.speed;
}

GaussianPacket1D slit_packet(const Experiment& experiment) {
    validate(experiment);
    GaussianPacket1D packet;
    packet.mom_spread = experiment.beam.mom_spread;
    packet.eta = experiment.eta0;
    packet.mass = experiment.beam.mass;
    return packet;
}

GaussianPacket1D screen_packet(const Experiment& experiment) {
    return free_evolve(slit_packet(experiment), flight_time(experiment.geometry, experiment.beam));
}

double screen_spread(const Experiment& experiment) { return spatial_spread(screen_packet(experiment)); }

double mom_spread_for_screen_spread(double mass, double t0, double target_spread, double eta0) {
    if (!positive(mass) || !positive(t0) || !positive(target_spread) || !std::isfinite(eta0)) {
        throw DomainError("mom_spread_for_screen_spread: mass, t0 and spread must be positive");
    }
    // With u = dp^2 and k = 2 t0 / (m hbar), dx(t0)^2 = D^2 becomes
    // k^2 u^2 + (2 eta0 k - 4 D^2 / hbar^2) u + (1 + eta0^2) = 0.
    const double hbar = constants().hbar;
    const double k = 2.0 * t0 / (mass * hbar);
    const double qa = k * k;
    const double qb = 2.0 * eta0 * k - 4.0 * target_spread * target_spread / (hbar * hbar);
    const double qc = 1.0 + eta0 * eta0;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
        throw DomainError("mom_spread_for_screen_spread: target spread is below the minimum reachable at t0");
    }
    const double u = (-qb + std::sqrt(disc)) / (2.0 * qa);
    return std::sqrt(u);
}

double normalization_N(double separation, double mom_spread) {
    if (!positive(separation) || !positive(mom_spread)) {
        throw DomainError("normalization_N: separation and momentum spread must be positive");
    }
    const double r = separation * mom_spread / constants().hbar;
    return 2.0 * (1.0 + std::exp(-0.5 * r * r));
}

double fringe_period(const SlitGeometry& geometry, const BeamParams& beam) {
    const double t0 = flight_time(geometry, beam);
    return constants().h * t0 / (beam.mass * geometry.separation);
}

double exact_intensity(const SlitGeometry& geometry, const BeamParams& beam, double eta0, double x) {
    const Experiment experiment{geometry, beam, eta0};
    const GaussianPacket1D at_screen = screen_packet(experiment);
    const double s = spatial_spread(at_screen);
    const double s2 = s * s;
    const double half_d = 0.5 * geometry.separation;
    const double n = normalization_N(geometry.separation, beam.mom_spread);

    const double left = std::exp(-(x + half_d) * (x + half_d) / (2.0 * s2));
    const double right = std::exp(-(x - half_d) * (x - half_d) / (2.0 * s2));
    const double cross = 2.0 * std::exp(-(x * x + half_d * half_d) / (2.0 * s2)) *
                         std::cos(at_screen.eta * geometry.separation * x / (2.0 * s2));
    return (left + right + cross) / (n * std::sqrt(2.0 * kPi * s2));
}

double far_field_intensity(double x, double period, double spread) {
    if (!positive(period) || !positive(spread)) {
        throw DomainError("far_field_intensity: period and spread must be positive");
    }
    const double z = x / spread;
    const double envelope = std::exp(-0.5 * z * z) / (std::sqrt(2.0 * kPi) * spread);
    const double ratio = spread / period;
    const double norm = 1.0 + std::exp(-2.0 * kPi * kPi * ratio * ratio);
    return envelope * (1.0 + std::cos(2.0 * kPi * x / period)) / norm;
}

double recoiled_intensity(double x, double v_x, double t0, double period, double spread) {
    return far_field_intensity(x - v_x * t0, period, spread);
}

Eigen::VectorXd make_grid(double x_min, double x_max, Eigen::Index n) {
    if (n < 2) throw DomainError("make_grid: need at least 2 points");
    if (!(std::isfinite(x_min) && std::isfinite(x_max) && x_max > x_min)) {
        throw DomainError("make_grid: need finite bounds with x_max > x_min");
    }
    return Eigen::VectorXd::LinSpaced(n, x_min, x_max);
}

Pattern tabulate(const std::function<double(double)>& density, const Eigen::VectorXd& grid,
                 PatternMeta meta) {
    Pattern pattern;
    pattern.x = grid;
    pattern.intensity.resize(grid.size());
    parallel_for(static_cast<std::size_t>(grid.size()), [&](std::size_t i) {
        const auto k = static_cast<Eigen::Index>(i);
        pattern.intensity[k] = density(grid[k]);
    });
    pattern.meta = std::move(meta);
    return pattern;
}

void validate(const Pattern& pattern) {
    if (pattern.x.size() != pattern.intensity.size()) throw DomainError("Pattern: column size mismatch");
    for (Eigen::Index i = 1; i < pattern.x.size(); ++i) {
        if (!(pattern.x[i] > pattern.x[i - 1])) throw DomainError("Pattern: grid not strictly increasing");
    }
    if (pattern.intensity.size() > 0 && pattern.intensity.minCoeff() < -1e-12) {
        throw DomainError("Pattern: negative intensity");
    }
}

}  // namespace mesofringe
