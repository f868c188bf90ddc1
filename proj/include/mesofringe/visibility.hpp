#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "mesofringe/doubleslit.hpp"
#include "mesofringe/emission.hpp"
#include "mesofringe/special.hpp"

namespace mesofringe {

/// An interference experiment whose molecules may emit one photon of
/// wavelength lambda_em before reaching the screen.
struct DecoherenceScenario {
    Experiment experiment;
    TwoLevelEmitter emitter;
    double gamma_t0 = 0.0;
    // Presentation override for X / dx(t0). When empty the spread comes from
    // free evolution of the beam.
    std::optional<double> x_over_dx;
};

DecoherenceScenario make_scenario(const Experiment& experiment, double d_over_lambda, double gamma_t0,
                                  std::optional<double> x_over_dx = std::nullopt);

void validate(const DecoherenceScenario& scenario);

/// Screen-plane scales derived from a scenario.
struct ScreenScales {
    double flight_time = 0.0;   // t0
    double period = 0.0;        // X
    double spread = 0.0;        // dx(t0)
    double recoil_drift = 0.0;  // v t0 with v = hbar omega0 / (m c)
};

ScreenScales screen_scales(const DecoherenceScenario& scenario);

double d_over_lambda(const DecoherenceScenario& scenario);
/// Photon recoil speed hbar omega0 / (m c).
double recoil_speed(const DecoherenceScenario& scenario);

/// V = e^{-g} + (1 - e^{-g}) sinc(2 pi d / lambda). Signed; |V| is the visibility.
template <typename Scalar>
    requires std::is_floating_point_v<Scalar>
Scalar visibility_closed(Scalar gamma_t0, Scalar d_over_lambda) {
    using std::exp;
    if (!(gamma_t0 >= Scalar(0))) throw DomainError("visibility_closed: gamma t0 must be >= 0");
    const Scalar w = exp(-gamma_t0);
    return w + (Scalar(1) - w) * sinc(Scalar(2) * std::numbers::pi_v<Scalar> * d_over_lambda);
}

/// Coefficient-wise form for array expressions of equal shape.
template <typename DerivedG, typename DerivedD>
typename DerivedG::PlainObject visibility_closed(const Eigen::ArrayBase<DerivedG>& gamma_t0,
                                                const Eigen::ArrayBase<DerivedD>& d_over_lambda) {
    using Scalar = typename DerivedG::Scalar;
    const typename DerivedG::PlainObject w = (-gamma_t0).exp();
    const typename DerivedD::PlainObject s = sinc(Scalar(2) * std::numbers::pi_v<Scalar> * d_over_lambda);
    return w + (Scalar(1) - w) * s;
}

/// Direction-averaged recoiled pattern (1/2) int_{-1}^{1} I(x + v t0 xi) dxi,
/// Gaussian envelope kept inside the integral.
double exact_angular_average(double x, const DecoherenceScenario& scenario, double tol = 1e-10);

/// e^{-g} I(x) + (1 - e^{-g}) <I_recoiled>(x) with the angular average by quadrature.
double decohered_intensity_exact(double x, const DecoherenceScenario& scenario);

/// Gaussian envelope times [1 + V cos(2 pi x / X)], normalised.
double decohered_intensity_approx(double x, const DecoherenceScenario& scenario);

/// (I_max - I_min) / (I_max + I_min) over the central window |x| <= X/2.
/// The grid must cover [-X, X] with spacing at most X/20 there.
double extract_visibility(const Pattern& pattern, double period);

/// Rows follow gamma_t0_grid, columns d_over_lambda_grid.
Eigen::MatrixXd visibility_surface(const Eigen::VectorXd& gamma_t0_grid, const Eigen::VectorXd& d_over_lambda_grid);

/// Indices of strict interior local maxima of |V| along d/lambda at fixed gamma t0.
std::vector<Eigen::Index> visibility_local_maxima(double gamma_t0, const Eigen::VectorXd& d_over_lambda_grid);

/// A stretch of d/lambda over which |V| grows as the photon wavelength shrinks.
struct AnomalousInterval {
    double begin = 0.0;
    double end = 0.0;
};

std::vector<AnomalousInterval> anomalous_intervals(double gamma_t0, const Eigen::VectorXd& d_over_lambda_grid);

}  // namespace mesofringe
