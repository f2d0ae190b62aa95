#pragma once

#include <functional>
#include <span>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/pairing.hpp"
#include "darboux/susy.hpp"
#include "darboux/test_function.hpp"

namespace darboux {

/// int dk' [int dx phi_k phi_k'] Phi(k') (bilinear pairing unless options say
/// otherwise). Regular regime only. The damping schedule starts no higher than
/// delta^2/40, delta being the distance from k to the nearer of +-sqrt(alpha).
SmearedFunctional smeared_biorthonormality(const SusySystem& system, double k, const TestFunction& phi,
                                           PairingOptions options = {});

/// int dk' [int dx (L psi_k)(L psi_k')] Phi(k'), expected (k^2 - alpha) Phi(k).
SmearedFunctional binorm_functional(const SusySystem& system, double k, const TestFunction& phi,
                                    PairingOptions options = {});

struct RegularizationParams {
    double epsilon = 0.0;
    bool override_sign = false;  // use epsilon as given instead of sign(b)|epsilon|
    double k_min = 1e-3;
    double k_max = 12.0;
    double panel_width = 0.2;     // coarse Gauss-Kronrod panels in k
    double pole_refine_below = 0.05;  // refine around Re k_p when |Im k_p| is smaller
    bool throw_on_failure = true;

    double effective_epsilon(const FactorizationConstant& fc) const;
};

/// Result of smearing the regularized resolution of the identity against a
/// battery of test functions, at several x. values[j][m] belongs to member j
/// and xs[m].
struct IdentityBatch {
    std::vector<std::vector<SmearedFunctional>> values;
    double epsilon = 0.0;
    std::size_t k_nodes = 0;
};

/// I(x) = int_{k_min}^{k_max} dk (L psi_k)(x) c_k / (k^2 - alpha - i eps),
/// c_k = int dy (L psi_k)(y) Phi(y) taken first.
IdentityBatch identity_kernel_batch(const SusySystem& system, std::span<const TestFunction> battery,
                                    std::span<const double> xs, const RegularizationParams& reg);

SmearedFunctional identity_kernel_apply(const SusySystem& system, const TestFunction& phi, double x,
                                        const RegularizationParams& reg);

/// A kernel K(x, y) acting on test functions: (K Phi)(x) = int dy K(x, y) Phi(y).
class KernelOperator {
public:
    virtual ~KernelOperator() = default;
    /// Rows follow the battery, columns follow xs.
    virtual std::vector<std::vector<cplx>> apply(std::span<const TestFunction> battery,
                                                 std::span<const double> xs) const = 0;
};

/// delta(x - y).
class DeltaKernel final : public KernelOperator {
public:
    std::vector<std::vector<cplx>> apply(std::span<const TestFunction> battery,
                                         std::span<const double> xs) const override;
};

/// c delta(x - y) + K(x, y) with the regular part tabulated on a y grid.
class RegularKernel final : public KernelOperator {
public:
    RegularKernel(std::function<cplx(double, double)> kernel, Grid y_grid, cplx delta_weight = 1.0);
    std::vector<std::vector<cplx>> apply(std::span<const TestFunction> battery,
                                         std::span<const double> xs) const override;

private:
    std::function<cplx(double, double)> kernel_;
    Grid y_grid_;
    cplx delta_weight_;
};

/// The numerically integrated resolution of the identity of a SUSY system.
class ResolutionKernel final : public KernelOperator {
public:
    ResolutionKernel(const SusySystem& system, RegularizationParams reg) : system_(system), reg_(reg) {}
    std::vector<std::vector<cplx>> apply(std::span<const TestFunction> battery,
                                         std::span<const double> xs) const override;

private:
    const SusySystem& system_;
    RegularizationParams reg_;
};

struct ProbeProfile {
    std::vector<std::vector<cplx>> values;  // (K Phi_j)(x_m)
    std::vector<double> deviations;         // max_m |(K Phi_j)(x_m) - Phi_j(x_m)|
    double max_deviation = 0.0;
    std::size_t worst_member = 0;
};

/// How far a kernel is from the identity on a test-function battery.
ProbeProfile delta_family_probe(const KernelOperator& kernel, std::span<const TestFunction> battery,
                                std::span<const double> xs);

/// Five gaussians with negligible weight at y = 0, and the x values they are probed at.
std::vector<TestFunction> default_battery();
std::vector<double> default_probe_points();

}  // namespace darboux
