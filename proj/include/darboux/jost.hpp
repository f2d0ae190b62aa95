#pragma once

#include "darboux/common.hpp"
#include "darboux/grid.hpp"
#include "darboux/pairing.hpp"
#include "darboux/potential.hpp"
#include "darboux/test_function.hpp"
#include "darboux/wave_sample.hpp"

namespace darboux {

/// Jost solution f(k, x) -> e^{ikx} and Jost function F(k) = f(k, 0).
struct JostData {
    WaveSample solution;
    cplx jost_function_value;
    cplx k;
};

/// Integrates -f'' + v0 f = k^2 f inward from the asymptotic data at x_max.
/// Where v0 vanishes identically the plane wave is written down directly.
/// Requires k != 0 and Im k >= 0 (this covers k = -ia with Re a <= 0).
JostData solve_jost(const Potential& v0, cplx k, const Grid& grid, const Tolerances& tol = {});

/// Real, delta-normalized Dirichlet eigenfunction psi_k of h0 (k > 0), built
/// from f(k, x) and f(-k, x) = conj f(k, x). Phase fixed by psi_k'(0) > 0.
WaveSample base_eigenfunction(const Potential& v0, double k, const Grid& grid, const Tolerances& tol = {});

/// int dk' [int dx psi_k psi_k'] Phi(k')  (should equal Phi(k)).
SmearedFunctional smeared_orthonormality(const Potential& v0, double k, const TestFunction& phi, const Grid& grid,
                                         const Tolerances& tol = {}, PairingOptions options = {});

}  // namespace darboux
