#include "mesofringe/wavepacket.hpp"

#include <cmath>
#include <numbers>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"

namespace mesofringe {

void validate(const GaussianPacket1D& packet) {
    const bool finite = std::isfinite(packet.mean_pos) && std::isfinite(packet.mean_mom) &&
                        std::isfinite(packet.mom_spread) && std::isfinite(packet.eta) &&
                        std::isfinite(packet.phase) && std::isfinite(packet.mass);
    if (!finite) throw DomainError("GaussianPacket1D: non-finite field");
    if (!(packet.mom_spread > 0.0)) throw DomainError("GaussianPacket1D: momentum spread must be positive");
    if (!(packet.mass > 0.0)) throw DomainError("GaussianPacket1D: mass must be positive");
}

GaussianPacket1D free_evolve(const GaussianPacket1D& packet, double t) {
    validate(packet);
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("free_evolve: time must be finite and >= 0");
    const double hbar = constants().hbar;
    const double m = packet.mass;
    const double dp = packet.mom_spread;

    GaussianPacket1D out = packet;
    out.mean_pos = packet.mean_pos + packet.mean_mom * t / m;
    out.eta = packet.eta + 2.0 * dp * dp * t / (m * hbar);
    out.phase = packet.phase + packet.mean_mom * packet.mean_mom * t / (2.0 * m * hbar) +
                0.5 * (std::atan(out.eta) - std::atan(packet.eta));
    return out;
}

double spatial_spread(const GaussianPacket1D& packet) {
    validate(packet);
    return constants().hbar / (2.0 * packet.mom_spread) * std::hypot(1.0, packet.eta);
}

double position_density(const GaussianPacket1D& packet, double x) {
    const double dx = spatial_spread(packet);
    const double z = (x - packet.mean_pos) / dx;
    return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * dx);
}

}  // namespace mesofringe
