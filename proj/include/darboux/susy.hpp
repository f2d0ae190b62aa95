#pragma once

#include <string>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/grid.hpp"
#include "darboux/potential.hpp"
#include "darboux/test_function.hpp"
#include "darboux/wave_sample.hpp"

namespace darboux {

enum class Regime { regular, singular };

std::string to_string(Regime regime);

/// a = d + ib with b != 0, d <= 0; alpha = -a^2.
class FactorizationConstant {
public:
    explicit FactorizationConstant(cplx a);

    cplx a() const noexcept { return a_; }
    cplx alpha() const noexcept { return alpha_; }
    double d() const noexcept { return a_.real(); }
    double b() const noexcept { return a_.imag(); }
    Regime regime() const noexcept { return d() < 0.0 ? Regime::regular : Regime::singular; }

private:
    cplx a_;
    cplx alpha_;
};

/// First-order SUSY partner of h0 = -d^2 + v0 built on u = f(-ia, x).
///
/// `w` holds the superpotential in `values` and w' in `derivatives`; w' comes
/// from the Riccati equation w' = v0 - alpha - w^2, so V = v0 - 2w' needs no
/// numerical differentiation.
struct SusySystem {
    Potential base_potential;
    FactorizationConstant factorization;
    Tolerances tolerances;
    WaveSample u;
    WaveSample w;
    std::vector<cplx> V;

    const Grid& grid() const noexcept { return u.grid; }
};

SusySystem build_system(const Potential& v0, cplx a, const Grid& grid, const Tolerances& tol = {});

/// L psi = -psi' + w psi. When psi carries a wavenumber k its second
/// derivative is taken from h0 psi = k^2 psi, otherwise from finite differences.
WaveSample apply_L(const SusySystem& system, const WaveSample& psi);

/// (L*)^dagger phi = phi' + w phi. With a wavenumber, phi'' comes from H phi = k^2 phi.
WaveSample apply_L_star_adjoint(const SusySystem& system, const WaveSample& phi);

struct NormalizedEigenfunction {
    double k;
    cplx N;  // principal sqrt(k^2 - alpha)
    WaveSample phi;
};

/// phi_k = N_k^{-1} L psi_k.
NormalizedEigenfunction normalized_phi(const SusySystem& system, double k);

/// 1/u, which solves H phi = alpha phi (wavenumber ia).
WaveSample singular_mode(const SusySystem& system);

/// ||L h0 psi - H L psi|| / ||psi|| with every derivative by finite differences.
/// Nodes whose stencils reach a breakpoint of v0 or a grid end are left out.
double intertwining_residual(const SusySystem& system, const TestFunction& psi);

/// ||(L*)^dagger L psi - (h0 - alpha) psi|| / ||psi||, same conventions.
double factorization_residual(const SusySystem& system, const TestFunction& psi);

}  // namespace darboux
