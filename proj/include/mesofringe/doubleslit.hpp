#pragma once

#include <functional>
#include <map>
#include <string>

#include <Eigen/Core>

#include "mesofringe/wavepacket.hpp"

namespace mesofringe {

struct SlitGeometry {
    double slit_width = 0.0;       // a, m
    double separation = 0.0;       // d, m (conventionally 2a)
    double screen_distance = 0.0;  // L, m
};

struct BeamParams {
    double mass = 0.0;        // kg
    double speed = 0.0;       // longitudinal v_z, m/s
    double mom_spread = 0.0;  // transverse delta p_x, kg m/s
};

/// Slits, beam and the initial chirp of each slit packet.
struct Experiment {
    SlitGeometry geometry;
    BeamParams beam;
    double eta0 = 0.0;
};

void validate(const SlitGeometry& geometry);
void validate(const BeamParams& beam);
void validate(const Experiment& experiment);

double wavenumber(const BeamParams& beam);             // k0 = m v_z / hbar
double de_broglie_wavelength(const BeamParams& beam);  // 2 pi / k0
double flight_time(const SlitGeometry& geometry, const BeamParams& beam);  // L / v_z

/// One slit's packet at the slit plane (centred on x = 0).
GaussianPacket1D slit_packet(const Experiment& experiment);
/// Packet at the screen, t = t0.
GaussianPacket1D screen_packet(const Experiment& experiment);
double screen_spread(const Experiment& experiment);

/// Transverse momentum spread that produces the given spread at the screen
/// after flight time t0. Takes the far-field (larger) root.
double mom_spread_for_screen_spread(double mass, double t0, double target_spread, double eta0 = 0.0);

/// N = 2 (1 + exp(-d^2 dp^2 / 2 hbar^2)).
double normalization_N(double separation, double mom_spread);

/// X = h t0 / (m d).
double fringe_period(const SlitGeometry& geometry, const BeamParams& beam);
inline double fringe_period(const Experiment& experiment) {
    return fringe_period(experiment.geometry, experiment.beam);
}

/// x-marginal of |psi_l + psi_r|^2 / N at the screen, two evolved Gaussians
/// centred at -d/2 and +d/2.
double exact_intensity(const SlitGeometry& geometry, const BeamParams& beam, double eta0, double x);
inline double exact_intensity(const Experiment& experiment, double x) {
    return exact_intensity(experiment.geometry, experiment.beam, experiment.eta0, x);
}

/// exp(-x^2/2s^2)/sqrt(2 pi s^2) [1 + cos(2 pi x / X)] / (1 + exp(-2 pi^2 s^2 / X^2)).
/// The trailing factor is the far-field limit of N/2 and keeps the pattern
/// normalised when X is comparable to the spread s.
double far_field_intensity(double x, double period, double spread);

/// Far-field pattern translated by the recoil drift v_x t0.
double recoiled_intensity(double x, double v_x, double t0, double period, double spread);

struct PatternMeta {
    std::string description;
    std::map<std::string, double> parameters;
};

/// Intensity sampled on a strictly increasing grid.
struct Pattern {
    Eigen::VectorXd x;
    Eigen::VectorXd intensity;
    PatternMeta meta;
};

/// n equally spaced points on [x_min, x_max]; needs n >= 2 and x_max > x_min.
Eigen::VectorXd make_grid(double x_min, double x_max, Eigen::Index n);

/// Evaluates density on every grid point (in parallel; order-independent).
Pattern tabulate(const std::function<double(double)>& density, const Eigen::VectorXd& grid,
                 PatternMeta meta = {});

/// Throws DomainError if the grid is not strictly increasing or an intensity
/// drops below -1e-12.
void validate(const Pattern& pattern);

}  // namespace mesofringe
