#pragma once

#include <functional>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/test_function.hpp"
#include "darboux/wave_sample.hpp"

namespace darboux {

struct EtaEntry {
    double eta;
    cplx value;
};

/// A distribution-valued kernel paired with a test function.
struct SmearedFunctional {
    cplx value{};
    std::vector<EtaEntry> eta_table;
    bool converged = true;
    double estimated_error = 0.0;
};

enum class Pairing {
    bilinear,   // int dx A_k(x) A_k'(x)
    conjugated  // int dx conj(A_k(x)) A_k'(x)
};

struct PairingOptions {
    double eta_start = 1e-2;  // first damping parameter (may be lowered, see smear_pairing)
    int eta_levels = 5;       // eta_start, eta_start/2, ...
    double quad_tol = 1e-6;
    double k_floor = 1e-3;    // smallest k' sampled
    Pairing pairing = Pairing::bilinear;
    bool throw_on_failure = true;
    int extension_stride = 4;  // x step past the grid, in grid spacings
};

/// k' -> sampled continuum function with wavenumber k'.
using WaveFamily = std::function<WaveSample(double)>;

/// Evaluates  int dk' [ int_0^inf dx A_k(x) A_k'(x) ] Phi(k')  where the inner
/// integral is regularized by exp(-eta x^2) and extrapolated to eta -> 0.
///
/// The k' integral is done first (composite Gauss-Kronrod over Phi's window),
/// giving a decaying G(x) = int dk' Phi(k') A_k'(x); the damped x pairing of
/// A_k with G is then evaluated for every eta of the schedule. Past the grid
/// all functions are continued by their plane-wave tails. The schedule starts
/// at min(eta_start, kappa^2/160), kappa being the distance from k to a
/// window edge where Phi is not negligible, so that exp(-kappa^2/(4 eta))
/// terms stay below double precision.
SmearedFunctional smear_pairing(const WaveSample& left, const WaveFamily& family, const TestFunction& phi,
                                const PairingOptions& options = {});

}  // namespace darboux
