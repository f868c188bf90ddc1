#pragma once

#include <stdexcept>
#include <string>

namespace mesofringe {

/// Argument outside an operation's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double best_estimate, double error_bound)
        : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

    double best_estimate() const noexcept { return best_estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

/// A time-stepping solver failed its step-halving check.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double discrepancy)
        : std::runtime_error(what), discrepancy_(discrepancy) {}

    double discrepancy() const noexcept { return discrepancy_; }

private:
    double discrepancy_;
};

/// Sampled data too coarse for the requested measurement.
class ResolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mesofringe
