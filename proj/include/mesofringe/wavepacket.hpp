#pragma once

namespace mesofringe {

/// One transverse Gaussian mode. The momentum spread is stored rather than
/// the position spread: it is conserved by free flight, and the position
/// spread follows from it and the chirp.
struct GaussianPacket1D {
    double mean_pos = 0.0;    // m
    double mean_mom = 0.0;    // kg m/s
    double mom_spread = 0.0;  // kg m/s, > 0
    double eta = 0.0;         // chirp, dimensionless
    double phase = 0.0;       // rad
    double mass = 0.0;        // kg, > 0
};

/// Throws DomainError unless mom_spread > 0 and mass > 0 (all fields finite).
void validate(const GaussianPacket1D& packet);

/// Free flight for a time t >= 0.
GaussianPacket1D free_evolve(const GaussianPacket1D& packet, double t);

/// delta_x = (hbar / 2 delta_p) sqrt(1 + eta^2).
double spatial_spread(const GaussianPacket1D& packet);

/// Normalised Gaussian |psi(x)|^2.
double position_density(const GaussianPacket1D& packet, double x);

}  // namespace mesofringe
