#include "mesofringe/microscope.hpp"

#include <cmath>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"

namespace mesofringe {

void validate(const MicroscopeSetup& setup) {
    validate(setup.geometry);
    if (!(setup.laser_wavelength > 0.0) || !std::isfinite(setup.laser_wavelength)) {
        throw DomainError("MicroscopeSetup: laser wavelength must be positive");
    }
    if (!(setup.particle_momentum > 0.0) || !std::isfinite(setup.particle_momentum)) {
        throw DomainError("MicroscopeSetup: particle momentum must be positive");
    }
    if (!(setup.spot_distance > 0.0 && setup.spot_distance <= setup.geometry.screen_distance)) {
        throw DomainError("MicroscopeSetup: spot distance must lie in (0, L]");
    }
}

double momentum_kick(double laser_wavelength) {
    if (!(laser_wavelength > 0.0)) throw DomainError("momentum_kick: wavelength must be positive");
    return constants().h / laser_wavelength;  // inf wavelength gives 0
}

double pattern_shake(const MicroscopeSetup& setup) {
    validate(setup);
    return momentum_kick(setup.laser_wavelength) / setup.particle_momentum * setup.spot_distance;
}

double fringe_halfspacing(double momentum, double separation, double screen_distance) {
    if (!(momentum > 0.0 && separation > 0.0 && screen_distance > 0.0)) {
        throw DomainError("fringe_halfspacing: inputs must be positive");
    }
    return constants().h * screen_distance / (2.0 * momentum * separation);
}

CoherenceVerdict coherence_condition(const MicroscopeSetup& setup) {
    validate(setup);
    const SlitGeometry& g = setup.geometry;
    const double threshold = 2.0 * g.separation * setup.spot_distance / g.screen_distance;
    const double margin = setup.laser_wavelength / threshold;
    return {margin >= 1.0, margin};
}

}  // namespace mesofringe
