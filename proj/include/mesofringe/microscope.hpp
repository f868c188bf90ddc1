#pragma once

#include "mesofringe/doubleslit.hpp"

namespace mesofringe {

/// Which-path probe: a laser spot placed a distance spot_distance before the
/// screen (spot_distance == L puts it at the slits).
struct MicroscopeSetup {
    double laser_wavelength = 0.0;  // m
    double spot_distance = 0.0;     // l, m, 0 < l <= L
    SlitGeometry geometry;
    double particle_momentum = 0.0;  // kg m/s
};

void validate(const MicroscopeSetup& setup);

/// Momentum uncertainty h / lambda_L imparted by one scattered photon.
double momentum_kick(double laser_wavelength);

/// Screen displacement (h / (lambda_L p)) l caused by the kick.
double pattern_shake(const MicroscopeSetup& setup);

/// Distance h L / (2 p d) between a fringe maximum and the adjacent minimum.
double fringe_halfspacing(double momentum, double separation, double screen_distance);

struct CoherenceVerdict {
    bool coherent = false;
    double margin = 0.0;  // lambda_L / (2 d l / L); coherent iff margin >= 1
};

CoherenceVerdict coherence_condition(const MicroscopeSetup& setup);

}  // namespace mesofringe
