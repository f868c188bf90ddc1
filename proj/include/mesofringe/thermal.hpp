#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

namespace mesofringe {

/// Emissivity of a small curved carbon cluster.
inline constexpr double kFullereneEmissivity = 4.5e-5;
/// Internal temperature above which C60 starts to fragment, K.
inline constexpr double kFragmentationTemperature = 3000.0;

/// A hot molecule radiating as a grey body during its flight.
struct ThermalSource {
    double temperature = 0.0;  // K
    double area = 0.0;         // m^2
    double emissivity = kFullereneEmissivity;
    double flight_time = 0.0;  // s
};

void validate(const ThermalSource& source);

struct RecoilBudget {
    double delta_E = 0.0;    // radiated energy, J
    double n_photons = 0.0;  // expected photon count
    double delta_p = 0.0;    // random-walk momentum spread, kg m/s
};

/// J0 = (pi^2 / 60) kB^4 T^4 / (c^2 hbar^3), W/m^2.
double blackbody_intensity(double temperature);
/// Phi0 = (zeta(3) / 2 pi^2) kB^3 T^3 / (c^2 hbar^3), photons / (m^2 s).
double blackbody_photon_flux(double temperature);

/// kappa = sqrt(2 / zeta(3)) (pi^3 / 60) kB^{5/2} / (c^2 hbar^{3/2}).
double kappa_constant();
/// xi = (1800 zeta(3) / pi^4)^{1/5} hbar c^{4/5} / kB.
double xi_constant();

/// dE = e J0 A t0, n = e Phi0 A t0, dp = sqrt(e) kappa (A t0)^{1/2} T^{5/2}.
RecoilBudget emitted_budget(const ThermalSource& source);

/// T_dec = xi emissivity^{-1/5} / (A t0 d^2)^{1/5}.
double decoherence_temperature(double area, double flight_time, double separation, double emissivity = 1.0);

struct ThermalCoherence {
    bool coherent = false;
    // (h / 2d) / dp; empty when dp == 0 (unbounded).
    std::optional<double> margin;
};

/// Coherent iff dp <= h / (2 d).
ThermalCoherence coherence_ok(double delta_p, double separation);

struct TdecRow {
    double separation = 0.0;
    double temperature = 0.0;
    bool above_fragmentation = false;
};

std::vector<TdecRow> tdec_vs_separation_sweep(const Eigen::VectorXd& separations, double area,
                                              double flight_time, double emissivity);

}  // namespace mesofringe
