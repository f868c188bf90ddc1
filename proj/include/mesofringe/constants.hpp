#pragma once

#include <numbers>

namespace mesofringe {

/// SI constants (CODATA 2018). Every module reads them from here.
struct PhysicalConstants {
    double hbar;      // J s
    double h;         // J s, stored as 2*pi*hbar
    double c;         // m/s
    double kB;        // J/K
    double eps0;      // F/m
    double alpha_fs;  // fine-structure constant
    double zeta3;     // Riemann zeta(3)
};

inline constexpr double kHbar = 1.054571817e-34;

inline constexpr PhysicalConstants kCodata2018{
    .hbar = kHbar,
    .h = 2.0 * std::numbers::pi * kHbar,
    .c = 299792458.0,
    .kB = 1.380649e-23,
    .eps0 = 8.8541878128e-12,
    .alpha_fs = 7.2973525693e-3,
    .zeta3 = 1.2020569031595942854,
};

inline constexpr const PhysicalConstants& constants() { return kCodata2018; }

}  // namespace mesofringe
