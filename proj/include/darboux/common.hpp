#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace darboux {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

// sqrt(2/pi): amplitude of a delta-normalized sine wave on the half-line.
inline const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

/// Numerical thresholds shared by all modules.
struct Tolerances {
    double ode_tol = 1e-10;   // relative tolerance of the Jost integrator
    double zero_tol = 1e-8;   // Jost-function and boundary-functional zeros
    double node_tol = 1e-10;  // min|u| relative to max|u|
    double sing_tol = 1e-6;   // |k^2 - alpha| below this is "at the singular point"
    double quad_tol = 1e-6;   // smeared functionals
    double fd_tol = 1e-6;     // finite-difference residual checks
    double tol_asym = 1e-12;  // |v0| below this counts as the asymptotic region
};

}  // namespace darboux
