#include "darboux/distributional.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"
#include "darboux/jost.hpp"
#include "darboux/parallel.hpp"
#include "darboux/quadrature.hpp"

namespace darboux {

SmearedFunctional smeared_biorthonormality(const SusySystem& s, double k, const TestFunction& phi,
                                           PairingOptions options) {
    if (s.factorization.regime() != Regime::regular)
        throw WrongRegime("biorthonormality needs d < 0; use the regularized identity kernel at d = 0");
    options.quad_tol = s.tolerances.quad_tol;
    // N_k'^{-2} has poles at k' = +-sqrt(alpha); the damping expansion converges
    // like (eta/delta^2)^n with delta the distance from k to the nearer one.
    const cplx kp = std::sqrt(s.factorization.alpha());
    const double delta = std::min(std::abs(k - kp), std::abs(k + kp));
    options.eta_start = std::min(options.eta_start, delta * delta / 40.0);
    const WaveSample left = normalized_phi(s, k).phi;
    return smear_pairing(
        left, [&](double kp) { return normalized_phi(s, kp).phi; }, phi, options);
}

SmearedFunctional binorm_functional(const SusySystem& s, double k, const TestFunction& phi, PairingOptions options) {
    options.quad_tol = s.tolerances.quad_tol;
    const auto Lpsi = [&](double kk) {
        return apply_L(s, base_eigenfunction(s.base_potential, kk, s.grid(), s.tolerances));
    };
    return smear_pairing(Lpsi(k), Lpsi, phi, options);
}

double RegularizationParams::effective_epsilon(const FactorizationConstant& fc) const {
    if (override_sign) return epsilon;
    return fc.b() > 0 ? std::abs(epsilon) : -std::abs(epsilon);
}

IdentityBatch identity_kernel_batch(const SusySystem& s, std::span<const TestFunction> battery,
                                    std::span<const double> xs, const RegularizationParams& reg) {
    const FactorizationConstant& fc = s.factorization;
    const double eps = reg.effective_epsilon(fc);
    if (fc.regime() == Regime::singular && eps == 0.0)
        throw PoleOnContour("the singular regime needs a nonzero epsilon");
    if (!(reg.k_max > reg.k_min) || !(reg.k_min > 0.0)) throw InvalidArgument("k window must satisfy 0 < k_min < k_max");
    for (double x : xs)
        if (!(x > 0.0)) throw InvalidArgument("identity kernel is probed at x > 0 only");

    const cplx shift = fc.alpha() + kI * eps;
    const cplx kp = std::sqrt(shift);
    const double gamma = std::abs(kp.imag());
    std::vector<double> breaks;
    if (gamma < reg.pole_refine_below && kp.real() > reg.k_min && kp.real() < reg.k_max)
        breaks = quad::graded_breaks(reg.k_min, reg.k_max, kp.real(), std::max(gamma, 1e-9), reg.panel_width);
    else
        breaks = quad::uniform_breaks(reg.k_min, reg.k_max, reg.panel_width);
    const auto nodes = quad::gauss_kronrod_nodes(breaks);

    const Grid& g = s.grid();
    const auto wy = quad::simpson_weights(g.size(), g.spacing());
    struct Window {
        std::size_t lo, hi;
        std::vector<double> w_phi;  // Simpson weight times Phi on [lo, hi)
    };
    std::vector<Window> windows;
    for (const auto& phi : battery) {
        Window win{g.floor_index(std::max(0.0, phi.lower())), std::min(g.size(), g.floor_index(phi.upper()) + 2), {}};
        if (phi.upper() > g.x_max()) throw InvalidArgument("test function '" + phi.label() + "' extends past the grid");
        for (std::size_t i = win.lo; i < win.hi; ++i) win.w_phi.push_back(wy[i] * phi(g[i]));
        windows.push_back(std::move(win));
    }

    const std::size_t J = battery.size(), M = xs.size();
    // contribution[node][j * M + m] before quadrature weights.
    std::vector<std::vector<cplx>> contribution(nodes.size());
    parallel::for_each_index(nodes.size(), [&](std::size_t q) {
        const double k = nodes[q].x;
        const WaveSample Lpsi = apply_L(s, base_eigenfunction(s.base_potential, k, g, s.tolerances));
        const cplx inv = 1.0 / (k * k - shift);
        std::vector<cplx> row(J * M);
        for (std::size_t j = 0; j < J; ++j) {
            cplx c{};
            const Window& win = windows[j];
            for (std::size_t i = win.lo; i < win.hi; ++i) c += win.w_phi[i - win.lo] * Lpsi.values[i];
            for (std::size_t m = 0; m < M; ++m) row[j * M + m] = Lpsi.at(xs[m]) * c * inv;
        }
        contribution[q] = std::move(row);
    });

    std::vector<cplx> kron(J * M), panel_k(J * M), panel_g(J * M);
    std::vector<double> err(J * M, 0.0);
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        for (std::size_t r = 0; r < J * M; ++r) {
            panel_k[r] += nodes[q].weight * contribution[q][r];
            panel_g[r] += nodes[q].gauss_weight * contribution[q][r];
        }
        if (q + 1 == nodes.size() || nodes[q + 1].panel != nodes[q].panel) {
            for (std::size_t r = 0; r < J * M; ++r) {
                kron[r] += panel_k[r];
                err[r] += std::abs(panel_k[r] - panel_g[r]);
                panel_k[r] = panel_g[r] = 0.0;
            }
        }
    }

    IdentityBatch out;
    out.epsilon = eps;
    out.k_nodes = nodes.size();
    out.values.assign(J, std::vector<SmearedFunctional>(M));
    for (std::size_t j = 0; j < J; ++j)
        for (std::size_t m = 0; m < M; ++m) {
            SmearedFunctional& sf = out.values[j][m];
            sf.value = kron[j * M + m];
            sf.estimated_error = err[j * M + m];
            sf.converged = sf.estimated_error < s.tolerances.quad_tol;
            if (!sf.converged && reg.throw_on_failure) {
                std::ostringstream os;
                os << "k quadrature for '" << battery[j].label() << "' at x = " << xs[m] << " has error estimate "
                   << sf.estimated_error << " (tolerance " << s.tolerances.quad_tol << ")";
                throw QuadratureNotConverged(os.str());
            }
        }
    return out;
}

SmearedFunctional identity_kernel_apply(const SusySystem& s, const TestFunction& phi, double x,
                                        const RegularizationParams& reg) {
    const double xs[] = {x};
    return identity_kernel_batch(s, std::span(&phi, 1), xs, reg).values[0][0];
}

std::vector<std::vector<cplx>> DeltaKernel::apply(std::span<const TestFunction> battery,
                                                  std::span<const double> xs) const {
    std::vector<std::vector<cplx>> out;
    for (const auto& phi : battery) {
        auto& row = out.emplace_back();
        for (double x : xs) row.push_back(phi(x));
    }
    return out;
}

RegularKernel::RegularKernel(std::function<cplx(double, double)> kernel, Grid y_grid, cplx delta_weight)
    : kernel_(std::move(kernel)), y_grid_(y_grid), delta_weight_(delta_weight) {}

std::vector<std::vector<cplx>> RegularKernel::apply(std::span<const TestFunction> battery,
                                                    std::span<const double> xs) const {
    const auto w = quad::simpson_weights(y_grid_.size(), y_grid_.spacing());
    std::vector<std::vector<cplx>> out;
    for (const auto& phi : battery) {
        auto& row = out.emplace_back();
        for (double x : xs) {
            cplx acc = delta_weight_ * phi(x);
            for (std::size_t i = 0; i < y_grid_.size(); ++i) {
                const double y = y_grid_[i];
                const double p = phi(y);
                if (p != 0.0) acc += w[i] * kernel_(x, y) * p;
            }
            row.push_back(acc);
        }
    }
    return out;
}

std::vector<std::vector<cplx>> ResolutionKernel::apply(std::span<const TestFunction> battery,
                                                       std::span<const double> xs) const {
    const IdentityBatch batch = identity_kernel_batch(system_, battery, xs, reg_);
    std::vector<std::vector<cplx>> out;
    for (const auto& row : batch.values) {
        auto& r = out.emplace_back();
        for (const auto& sf : row) r.push_back(sf.value);
    }
    return out;
}

ProbeProfile delta_family_probe(const KernelOperator& kernel, std::span<const TestFunction> battery,
                                std::span<const double> xs) {
    ProbeProfile p;
    p.values = kernel.apply(battery, xs);
    for (std::size_t j = 0; j < battery.size(); ++j) {
        double dev = 0.0;
        for (std::size_t m = 0; m < xs.size(); ++m) dev = std::max(dev, std::abs(p.values[j][m] - battery[j](xs[m])));
        p.deviations.push_back(dev);
        if (j == 0 || dev > p.max_deviation) {
            p.max_deviation = dev;
            p.worst_member = j;
        }
    }
    return p;
}

std::vector<TestFunction> default_battery() {
    return {TestFunction::gaussian(3.0, 1.0), TestFunction::gaussian(2.5, 0.8), TestFunction::gaussian(4.0, 1.2),
            TestFunction::gaussian(3.5, 0.6), TestFunction::gaussian(5.0, 1.5)};
}

std::vector<double> default_probe_points() { return {1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0}; }

}  // namespace darboux
