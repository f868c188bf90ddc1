#pragma once

#include <cmath>
#include <type_traits>

#include <Eigen/Core>

#include "mesofringe/errors.hpp"

namespace mesofringe {

namespace detail {
inline constexpr double kSincSeriesThreshold = 1e-4;
}

/// sin(x)/x, continuous at 0. Below |x| < 1e-4 a Taylor branch avoids 0/0.
template <typename Scalar>
    requires std::is_floating_point_v<Scalar>
Scalar sinc(Scalar x) {
    using std::abs;
    using std::isfinite;
    using std::sin;
    if (!isfinite(x)) throw DomainError("sinc: non-finite argument");
    if (abs(x) < Scalar(detail::kSincSeriesThreshold)) {
        const Scalar x2 = x * x;
        return Scalar(1) - x2 / Scalar(6) + x2 * x2 / Scalar(120);
    }
    return sin(x) / x;
}

/// Coefficient-wise sinc over an Eigen array expression.
template <typename Derived>
auto sinc(const Eigen::ArrayBase<Derived>& x) {
    using Scalar = typename Derived::Scalar;
    return x.unaryExpr([](Scalar v) { return sinc(v); });
}

}  // namespace mesofringe
