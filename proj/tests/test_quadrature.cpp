#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "mesofringe/constants.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/quadrature.hpp"
#include "mesofringe/special.hpp"
#include "oracles.hpp"

using namespace mesofringe;
using doctest::Approx;

TEST_CASE("constants are stored consistently") {
    const auto& k = constants();
    CHECK(k.h == 2.0 * std::numbers::pi * k.hbar);
    CHECK(std::abs(k.alpha_fs * 137.036 - 1.0) < 1e-6);
    CHECK(std::abs(k.zeta3 - 1.2020569) < 1e-7);
    CHECK(k.c == 299792458.0);
}

TEST_CASE("sinc values") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::abs(sinc(std::numbers::pi)) < 1e-15);
    CHECK(sinc(2.0 * std::numbers::pi * 0.84) == Approx(oracle::kSincAt084).epsilon(1e-13));
    // Series branch and direct branch meet smoothly at the threshold.
    const double below = sinc(0.99999e-4);
    const double above = sinc(1.00001e-4);
    CHECK(std::abs(below - above) < 1e-12);
    CHECK(sinc(1e-5) == Approx(std::sin(1e-5) / 1e-5).epsilon(1e-16));
    CHECK_THROWS_AS(sinc(std::nan("")), DomainError);
    CHECK_THROWS_AS(sinc(INFINITY), DomainError);
}

TEST_CASE("sinc is even, also on arrays") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng);
        CHECK(sinc(x) == sinc(-x));
    }
    Eigen::ArrayXd xs = Eigen::ArrayXd::LinSpaced(11, -5.0, 5.0);
    const Eigen::ArrayXd s = sinc(xs);
    for (Eigen::Index i = 0; i < xs.size(); ++i) CHECK(s[i] == sinc(xs[i]));
}

TEST_CASE("integrate on simple integrands") {
    CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-12) == Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(integrate([](double x) { return std::cos(x); }, 0.0, std::numbers::pi / 2, 1e-10) - 1.0) < 1e-10);
    const auto gauss = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); };
    // erf(8 / sqrt 2) differs from 1 by ~1e-15.
    CHECK(std::abs(integrate(gauss, -8.0, 8.0, 1e-10) - std::erf(8.0 / std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("integrate: empty interval") {
    CHECK(integrate([](double x) { return x * x; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrate reports failure with the best estimate") {
    QuadratureOptions opts;
    opts.abs_tol = 1e-14;
    opts.max_subdivisions = 5;
    const auto spiky = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3) + 1e-12); };
    try {
        integrate_adaptive(spiky, 0.0, 1.0, opts);
        FAIL("expected IntegrationError");
    } catch (const IntegrationError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_bound() > 1e-14);
    }
}

TEST_CASE("integrate rejects bad input") {
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), DomainError);
}

TEST_CASE("integrate is linear on random polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    const double tol = 1e-10;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> p(6), q(6);
        for (auto& c : p) c = coef(rng);
        for (auto& c : q) c = coef(rng);
        const double alpha = coef(rng);
        const double beta = coef(rng);
        const auto poly = [](const std::vector<double>& c) {
            return [c](double x) {
                double v = 0.0;
                for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
                return v;
            };
        };
        const auto f = poly(p);
        const auto g = poly(q);
        const double lhs = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, -1.5, 2.0, tol);
        const double rhs = alpha * integrate(f, -1.5, 2.0, tol) + beta * integrate(g, -1.5, 2.0, tol);
        CHECK(std::abs(lhs - rhs) <= 2.0 * tol);
    }
}

TEST_CASE("integrate is additive over adjacent intervals") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double tol = 1e-10;
    const auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x) + 1.0 / (1.0 + x * x); };
    for (int trial = 0; trial < 50; ++trial) {
        const double a = -2.0 + u(rng);
        const double b = a + 2.0 * u(rng);
        const double c = b + 2.0 * u(rng);
        const double whole = integrate(f, a, c, tol);
        const double parts = integrate(f, a, b, tol) + integrate(f, b, c, tol);
        CHECK(std::abs(whole - parts) <= 2.0 * tol);
    }
}

TEST_CASE("principal value examples") {
    CHECK(std::abs(principal_value_integrate([](double) { return 1.0; }, 0.7, -0.3, 1.7)) < 1e-12);
    CHECK(principal_value_integrate([](double x) { return x; }, 0.0, -1.0, 1.0) == Approx(2.0).epsilon(1e-12));
    const double pv = principal_value_integrate([](double x) { return std::exp(x); }, 0.0, -1.0, 1.0);
    CHECK(std::abs(pv - oracle::pv_exp_series()) < 1e-10);
    CHECK(std::abs(oracle::pv_exp_series() - oracle::kPvExpOverX) < 1e-13);
}

TEST_CASE("principal value with an asymmetric interval") {
    // P int_{-1}^{3} 1/(x) dx = ln 3.
    const double pv = principal_value_integrate([](double) { return 1.0; }, 0.0, -1.0, 3.0);
    CHECK(pv == Approx(std::log(3.0)).epsilon(1e-11));
    const double left = principal_value_integrate([](double) { return 1.0; }, 0.0, -3.0, 1.0);
    CHECK(left == Approx(-std::log(3.0)).epsilon(1e-11));
}

TEST_CASE("principal value of an integrand odd about the pole vanishes") {
    const double x0 = 0.4;
    const double tol = 1e-10;
    for (double k : {1.0, 2.5, 7.0}) {
        const auto g = [x0, k](double x) { return std::cos(k * (x - x0)); };
        CHECK(std::abs(principal_value_integrate(g, x0, x0 - 1.3, x0 + 1.3, tol)) <= tol);
    }
}

TEST_CASE("principal value needs the pole strictly inside") {
    const auto one = [](double) { return 1.0; };
    CHECK_THROWS_AS(principal_value_integrate(one, 0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(principal_value_integrate(one, 2.0, 0.0, 1.0), DomainError);
}
