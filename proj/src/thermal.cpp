#include "mesofringe/thermal.hpp"

#include <cmath>
#include <numbers>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"

namespace mesofringe {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_temperature(double temperature) {
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw DomainError("thermal: temperature must be finite and >= 0");
    }
}

}  // namespace

void validate(const ThermalSource& source) {
    require_temperature(source.temperature);
    if (!positive(source.area)) throw DomainError("ThermalSource: area must be positive");
    if (!positive(source.flight_time)) throw DomainError("ThermalSource: flight time must be positive");
    if (!(source.emissivity > 0.0 && source.emissivity <= 1.0)) {
        throw DomainError("ThermalSource: emissivity must lie in (0, 1]");
    }
}

double blackbody_intensity(double temperature) {
    require_temperature(temperature);
    const auto& k = constants();
    const double kt = k.kB * temperature;
    return kPi * kPi / 60.0 * kt * kt * kt * kt / (k.c * k.c * k.hbar * k.hbar * k.hbar);
}

double blackbody_photon_flux(double temperature) {
    require_temperature(temperature);
    const auto& k = constants();
    const double kt = k.kB * temperature;
    return k.zeta3 / (2.0 * kPi * kPi) * kt * kt * kt / (k.c * k.c * k.hbar * k.hbar * k.hbar);
}

double kappa_constant() {
    const auto& k = constants();
    return std::sqrt(2.0 / k.zeta3) * std::pow(kPi, 3) / 60.0 * std::pow(k.kB, 2.5) /
           (k.c * k.c * std::pow(k.hbar, 1.5));
}

double xi_constant() {
    const auto& k = constants();
    return std::pow(1800.0 * k.zeta3 / std::pow(kPi, 4), 0.2) * k.hbar * std::pow(k.c, 0.8) / k.kB;
}

RecoilBudget emitted_budget(const ThermalSource& source) {
    validate(source);
    const double exposure = source.area * source.flight_time;
    RecoilBudget budget;
    budget.delta_E = source.emissivity * blackbody_intensity(source.temperature) * exposure;
    budget.n_photons = source.emissivity * blackbody_photon_flux(source.temperature) * exposure;
    budget.delta_p = std::sqrt(source.emissivity) * kappa_constant() * std::sqrt(exposure) *
                     std::pow(source.temperature, 2.5);
    return budget;
}

double decoherence_temperature(double area, double flight_time, double separation, double emissivity) {
    if (!positive(area) || !positive(flight_time) || !positive(separation)) {
        throw DomainError("decoherence_temperature: area, flight time and separation must be positive");
    }
    if (!(emissivity > 0.0 && emissivity <= 1.0)) {
        throw DomainError("decoherence_temperature: emissivity must lie in (0, 1]");
    }
    return xi_constant() * std::pow(emissivity, -0.2) /
           std::pow(area * flight_time * separation * separation, 0.2);
}

ThermalCoherence coherence_ok(double delta_p, double separation) {
    if (!(delta_p >= 0.0) || !positive(separation)) {
        throw DomainError("coherence_ok: need dp >= 0 and separation > 0");
    }
    const double bound = constants().h / (2.0 * separation);
    if (delta_p == 0.0) return {true, std::nullopt};
    return {delta_p <= bound, bound / delta_p};
}

std::vector<TdecRow> tdec_vs_separation_sweep(const Eigen::VectorXd& separations, double area,
                                              double flight_time, double emissivity) {
    if (separations.size() == 0) throw DomainError("tdec_vs_separation_sweep: empty separation grid");
    std::vector<TdecRow> rows;
    rows.reserve(static_cast<std::size_t>(separations.size()));
    for (Eigen::Index i = 0; i < separations.size(); ++i) {
        if (i > 0 && !(separations[i] > separations[i - 1])) {
            throw DomainError("tdec_vs_separation_sweep: separations must be strictly increasing");
        }
        const double t = decoherence_temperature(area, flight_time, separations[i], emissivity);
        rows.push_back({separations[i], t, t > kFragmentationTemperature});
    }
    return rows;
}

}  // namespace mesofringe
