#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/thermal.hpp"
#include "oracles.hpp"

using namespace mesofringe;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kArea = 1.539e-18;
constexpr double kFlight = 9.47e-3;
constexpr double kZeta3 = 1.2020569031595942854;

ThermalSource c60(double temperature, double emissivity = kFullereneEmissivity, double flight = kFlight) {
    ThermalSource s;
    s.temperature = temperature;
    s.area = kArea;
    s.emissivity = emissivity;
    s.flight_time = flight;
    return s;
}

// Temperature where dp(T) = h / (2 d), by bisection on a log scale.
double crossing_temperature(double separation, double emissivity) {
    const double target = constants().h / (2.0 * separation);
    double lo = 1.0, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
        const double mid = std::sqrt(lo * hi);
        if (emitted_budget(c60(mid, emissivity)).delta_p < target) lo = mid;
        else hi = mid;
    }
    return std::sqrt(lo * hi);
}

}  // namespace

TEST_CASE("Stefan-Boltzmann law and scaling of the black-body intensity") {
    for (double t : {300.0, 1000.0, 2000.0, 3500.0}) {
        CHECK(blackbody_intensity(t) / std::pow(t, 4) == Approx(oracle::kSigmaSB).epsilon(1e-3));
        CHECK(blackbody_intensity(2.0 * t) == Approx(16.0 * blackbody_intensity(t)).epsilon(1e-14));
        CHECK(blackbody_photon_flux(2.0 * t) == Approx(8.0 * blackbody_photon_flux(t)).epsilon(1e-14));
    }
    CHECK(blackbody_intensity(0.0) == 0.0);
    CHECK_THROWS_AS(blackbody_intensity(-1.0), DomainError);
}

TEST_CASE("mean photon energy and photon flux") {
    const double kB = constants().kB;
    for (double t : {500.0, 2000.0}) {
        const double mean_energy = std::pow(kPi, 4) / (30.0 * kZeta3) * kB * t;
        CHECK(blackbody_intensity(t) / blackbody_photon_flux(t) == Approx(mean_energy).epsilon(1e-12));
    }
    CHECK(blackbody_photon_flux(2000.0) == Approx(oracle::kPhotonFlux2000K).epsilon(1e-12));
}

TEST_CASE("recoil budget at full emissivity") {
    const RecoilBudget b = emitted_budget(c60(2000.0, 1.0));
    const double c = constants().c;
    CHECK(b.delta_p == Approx(b.delta_E / (c * std::sqrt(b.n_photons))).epsilon(1e-12));
    CHECK(b.delta_E == Approx(blackbody_intensity(2000.0) * kArea * kFlight).epsilon(1e-14));
}

TEST_CASE("about eight photons at 2000 K with the fullerene emissivity") {
    const RecoilBudget b = emitted_budget(c60(2000.0));
    CHECK(std::abs(b.n_photons / 8.6 - 1.0) < 0.15);
    const RecoilBudget grey = emitted_budget(c60(2000.0, 0.5));
    const RecoilBudget black = emitted_budget(c60(2000.0, 1.0));
    CHECK(grey.n_photons == Approx(0.5 * black.n_photons).epsilon(1e-14));
    CHECK(grey.delta_p == Approx(std::sqrt(0.5) * black.delta_p).epsilon(1e-14));
}

TEST_CASE("kappa and xi constants") {
    CHECK(std::abs(kappa_constant() / 4.85e-24 - 1.0) < 5e-3);
    CHECK(std::abs(xi_constant() / 8.59e-5 - 1.0) < 5e-3);
    CHECK(kappa_constant() == Approx(oracle::kKappa).epsilon(1e-12));
    CHECK(xi_constant() == Approx(oracle::kXi).epsilon(1e-12));
}

TEST_CASE("kappa reproduces the momentum spread on random inputs") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> temp(100.0, 5000.0);
    std::uniform_real_distribution<double> log_area(-20.0, -16.0);
    std::uniform_real_distribution<double> log_time(-5.0, -1.0);
    std::uniform_real_distribution<double> emis(1e-6, 1.0);
    for (int i = 0; i < 1000; ++i) {
        ThermalSource s;
        s.temperature = temp(rng);
        s.area = std::pow(10.0, log_area(rng));
        s.flight_time = std::pow(10.0, log_time(rng));
        s.emissivity = emis(rng);
        const RecoilBudget b = emitted_budget(s);
        const double expected =
            std::sqrt(s.emissivity) * kappa_constant() * std::sqrt(s.area * s.flight_time) * std::pow(s.temperature, 2.5);
        CHECK(b.delta_p == Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("xi agrees with a direct root find of the coherence boundary") {
    for (double d : {50e-9, 100e-9, 1e-6}) {
        for (double e : {1.0, kFullereneEmissivity}) {
            const double root = crossing_temperature(d, e);
            CHECK(std::abs(decoherence_temperature(kArea, kFlight, d, e) / root - 1.0) < 1e-3);
        }
    }
}

TEST_CASE("decoherence temperatures for C60 at d = 100 nm") {
    const double black = decoherence_temperature(kArea, kFlight, 100e-9);
    const double grey = decoherence_temperature(kArea, kFlight, 100e-9, kFullereneEmissivity);
    CHECK(std::abs(black / 500.0 - 1.0) < 0.02);
    CHECK(std::abs(grey / 3700.0 - 1.0) < 0.02);
    CHECK(black == Approx(oracle::kTdecPrime).epsilon(1e-12));
    CHECK(grey == Approx(oracle::kTdec).epsilon(1e-12));
    CHECK(grey / black == Approx(std::pow(kFullereneEmissivity, -0.2)).epsilon(1e-13));
    const double wide = decoherence_temperature(kArea, 9.53e-3, 0.5e-6, kFullereneEmissivity);
    CHECK(std::abs(wide / 2000.0 - 1.0) < 0.05);
}

TEST_CASE("power laws of the decoherence temperature") {
    const double t0 = decoherence_temperature(kArea, kFlight, 100e-9, 0.1);
    CHECK(decoherence_temperature(kArea, kFlight, 200e-9, 0.1) / t0 == Approx(std::pow(2.0, -0.4)).epsilon(1e-10));
    CHECK(decoherence_temperature(2.0 * kArea, kFlight, 100e-9, 0.1) / t0 ==
          Approx(std::pow(2.0, -0.2)).epsilon(1e-10));
    CHECK(decoherence_temperature(kArea, 2.0 * kFlight, 100e-9, 0.1) / t0 ==
          Approx(std::pow(2.0, -0.2)).epsilon(1e-10));
    CHECK_THROWS_AS(decoherence_temperature(kArea, kFlight, 0.0), DomainError);
    CHECK_THROWS_AS(decoherence_temperature(kArea, kFlight, 1e-7, 0.0), DomainError);
    CHECK_THROWS_AS(decoherence_temperature(kArea, kFlight, 1e-7, 1.5), DomainError);
}

TEST_CASE("coherence verdict") {
    const double d = 100e-9;
    const double limit = constants().h / (2.0 * d);
    CHECK(coherence_ok(limit, d).coherent);
    CHECK_FALSE(coherence_ok(limit * (1.0 + 1e-12), d).coherent);
    CHECK(coherence_ok(0.5 * limit, d).margin.value() == Approx(2.0).epsilon(1e-14));
    const ThermalCoherence zero = coherence_ok(0.0, d);
    CHECK(zero.coherent);
    CHECK_FALSE(zero.margin.has_value());
    CHECK_THROWS_AS(coherence_ok(-1.0, d), DomainError);

    const double tdec = decoherence_temperature(kArea, kFlight, d, kFullereneEmissivity);
    const RecoilBudget at = emitted_budget(c60(tdec));
    CHECK(std::abs(coherence_ok(at.delta_p, d).margin.value() - 1.0) < 0.02);
    CHECK(coherence_ok(emitted_budget(c60(0.9 * tdec)).delta_p, d).coherent);
    CHECK_FALSE(coherence_ok(emitted_budget(c60(1.1 * tdec)).delta_p, d).coherent);
}

TEST_CASE("separation sweep") {
    Eigen::VectorXd d(3);
    d << 50e-9, 500e-9, 5e-6;
    const auto rows = tdec_vs_separation_sweep(d, kArea, 9.53e-3, kFullereneEmissivity);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].temperature / rows[0].temperature == Approx(std::pow(10.0, -0.4)).epsilon(1e-12));
    CHECK(rows[2].temperature / rows[1].temperature == Approx(std::pow(10.0, -0.4)).epsilon(1e-12));
    CHECK(rows[0].above_fragmentation);
    CHECK_FALSE(rows[1].above_fragmentation);
    CHECK(rows[0].above_fragmentation == (rows[0].temperature > kFragmentationTemperature));
    Eigen::VectorXd bad(2);
    bad << 1e-7, 1e-7;
    CHECK_THROWS_AS(tdec_vs_separation_sweep(bad, kArea, 9.53e-3, 1.0), DomainError);
    CHECK_THROWS_AS(tdec_vs_separation_sweep(Eigen::VectorXd(), kArea, 9.53e-3, 1.0), DomainError);
}
