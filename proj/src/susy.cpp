#include "darboux/susy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"
#include "darboux/finite_difference.hpp"
#include "darboux/jost.hpp"

namespace darboux {

std::string to_string(Regime regime) { return regime == Regime::regular ? "regular" : "singular"; }

FactorizationConstant::FactorizationConstant(cplx a) : a_(a), alpha_(-a * a) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw InvalidArgument("factorization constant must be finite");
    if (a.imag() == 0.0) throw InvalidArgument("factorization constant needs b = Im a != 0");
    if (a.real() > 0.0) throw InvalidArgument("factorization constant needs d = Re a <= 0");
}

namespace {

void check_grid(const SusySystem& s, const WaveSample& f) {
    if (!(f.grid == s.grid())) throw GridMismatch("sample grid differs from the system grid");
}

std::vector<double> potential_on_grid(const Potential& v0, const Grid& grid) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) v[i] = v0(grid[i]);
    return v;
}

// Nodes left out of FD residuals: those whose nested stencils reach a
// breakpoint of v0 or fall back to one-sided formulas at the grid ends.
std::vector<bool> stencil_mask(const Potential& v0, const Grid& grid, std::size_t reach) {
    std::vector<bool> masked(grid.size(), false);
    for (std::size_t j = 0; j < reach && j < grid.size(); ++j) masked[j] = masked[grid.size() - 1 - j] = true;
    const double h = grid.spacing();
    for (double b : v0.breakpoints()) {
        if (b > grid.x_max()) continue;
        const auto centre = static_cast<std::ptrdiff_t>(std::llround(b / h));
        for (std::ptrdiff_t j = centre - static_cast<std::ptrdiff_t>(reach) - 1;
             j <= centre + static_cast<std::ptrdiff_t>(reach) + 1; ++j)
            if (j >= 0 && j < static_cast<std::ptrdiff_t>(grid.size())) masked[static_cast<std::size_t>(j)] = true;
    }
    return masked;
}

double masked_ratio(const std::vector<cplx>& r, const std::vector<cplx>& psi, const std::vector<bool>& mask,
                    double h) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (mask[i]) continue;
        const double wgt = (i == 0 || i + 1 == r.size()) ? 0.5 * h : h;
        num += wgt * std::norm(r[i]);
        den += wgt * std::norm(psi[i]);
    }
    return den == 0.0 ? 0.0 : std::sqrt(num / den);
}

std::vector<cplx> sample(const TestFunction& psi, const Grid& grid) {
    std::vector<cplx> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = psi(grid[i]);
    return out;
}

}  // namespace

SusySystem build_system(const Potential& v0, cplx a, const Grid& grid, const Tolerances& tol) {
    const FactorizationConstant fc(a);
    JostData jd = solve_jost(v0, -kI * a, grid, tol);
    const auto& u = jd.solution.values;
    const auto& du = jd.solution.derivatives;

    // A node is where |u| collapses relative to its local scale |u| + |u'|/|a|.
    const double scale = std::max(1.0, std::abs(a));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double local = std::abs(u[i]) + std::abs(du[i]) / scale;
        if (!(std::abs(u[i]) > tol.node_tol * local)) {
            std::ostringstream os;
            os << "transformation function vanishes at x = " << grid[i] << " (|u| = " << std::abs(u[i]) << ")";
            throw NodalTransformationFunction(os.str(), grid[i]);
        }
    }

    const auto v = potential_on_grid(v0, grid);
    const std::size_t n = grid.size();
    std::vector<cplx> w(n), dw(n), V(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = du[i] / u[i];
        dw[i] = v[i] - fc.alpha() - w[i] * w[i];
        V[i] = v[i] - 2.0 * dw[i];
    }
    WaveSample ws(grid, std::move(w), std::move(dw));
    return SusySystem{v0, fc, tol, std::move(jd.solution), std::move(ws), std::move(V)};
}

WaveSample apply_L(const SusySystem& s, const WaveSample& psi) {
    check_grid(s, psi);
    const std::size_t n = psi.size();
    const auto& w = s.w.values;
    const auto& dw = s.w.derivatives;
    std::vector<cplx> out(n), dout(n);
    if (psi.wavenumber) {
        // (L psi)' = -psi'' + w' psi + w psi' with psi'' = (v0 - E) psi and w' = v0 - alpha - w^2.
        const cplx E = *psi.wavenumber * *psi.wavenumber;
        const cplx alpha = s.factorization.alpha();
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = -psi.derivatives[i] + w[i] * psi.values[i];
            dout[i] = (E - alpha - w[i] * w[i]) * psi.values[i] + w[i] * psi.derivatives[i];
        }
    } else {
        const auto d2 = fd::first_derivative(psi.derivatives, s.grid().spacing());
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = -psi.derivatives[i] + w[i] * psi.values[i];
            dout[i] = -d2[i] + dw[i] * psi.values[i] + w[i] * psi.derivatives[i];
        }
    }
    return WaveSample(s.grid(), std::move(out), std::move(dout), psi.wavenumber);
}

WaveSample apply_L_star_adjoint(const SusySystem& s, const WaveSample& phi) {
    check_grid(s, phi);
    const std::size_t n = phi.size();
    const auto& w = s.w.values;
    const auto& dw = s.w.derivatives;
    std::vector<cplx> out(n), dout(n);
    if (phi.wavenumber) {
        // phi'' + w' phi = (alpha + w^2 - E) phi once phi'' = (V - E) phi is used.
        const cplx E = *phi.wavenumber * *phi.wavenumber;
        const cplx alpha = s.factorization.alpha();
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = phi.derivatives[i] + w[i] * phi.values[i];
            dout[i] = (alpha + w[i] * w[i] - E) * phi.values[i] + w[i] * phi.derivatives[i];
        }
    } else {
        const auto d2 = fd::first_derivative(phi.derivatives, s.grid().spacing());
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = phi.derivatives[i] + w[i] * phi.values[i];
            dout[i] = d2[i] + dw[i] * phi.values[i] + w[i] * phi.derivatives[i];
        }
    }
    return WaveSample(s.grid(), std::move(out), std::move(dout), phi.wavenumber);
}

NormalizedEigenfunction normalized_phi(const SusySystem& s, double k) {
    if (!(k > 0.0)) throw InvalidArgument("normalized eigenfunction needs k > 0");
    const cplx N2 = k * k - s.factorization.alpha();
    if (std::abs(N2) < s.tolerances.sing_tol) {
        std::ostringstream os;
        os << "k = " << k << " is the singular wavenumber (|k^2 - alpha| = " << std::abs(N2) << ")";
        throw SpectralSingularityPoint(os.str());
    }
    const cplx N = std::sqrt(N2);
    WaveSample phi = apply_L(s, base_eigenfunction(s.base_potential, k, s.grid(), s.tolerances));
    for (auto& v : phi.values) v /= N;
    for (auto& v : phi.derivatives) v /= N;
    return {k, N, std::move(phi)};
}

WaveSample singular_mode(const SusySystem& s) {
    const std::size_t n = s.u.size();
    std::vector<cplx> v(n), dv(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = 1.0 / s.u.values[i];
        dv[i] = -s.w.values[i] * v[i];
    }
    return WaveSample(s.grid(), std::move(v), std::move(dv), kI * s.factorization.a());
}

// Residual checks use sixth-order stencils; nested they reach 6 nodes.
constexpr int kResidualOrder = 6;
constexpr std::size_t kResidualReach = 6;

double intertwining_residual(const SusySystem& s, const TestFunction& psi_fn) {
    const Grid& g = s.grid();
    const double h = g.spacing();
    const auto psi = sample(psi_fn, g);
    const auto v = potential_on_grid(s.base_potential, g);
    const auto& w = s.w.values;
    const std::size_t n = g.size();

    const auto L = [&](const std::vector<cplx>& f) {
        auto d = fd::first_derivative(f, h, kResidualOrder);
        for (std::size_t i = 0; i < n; ++i) d[i] = -d[i] + w[i] * f[i];
        return d;
    };
    const auto h0psi = [&] {
        auto d2 = fd::second_derivative(psi, h, kResidualOrder);
        for (std::size_t i = 0; i < n; ++i) d2[i] = -d2[i] + v[i] * psi[i];
        return d2;
    }();
    const auto lhs = L(h0psi);
    const auto Lpsi = L(psi);
    auto rhs = fd::second_derivative(Lpsi, h, kResidualOrder);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = -rhs[i] + s.V[i] * Lpsi[i];

    std::vector<cplx> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = lhs[i] - rhs[i];
    return masked_ratio(r, psi, stencil_mask(s.base_potential, g, kResidualReach), h);
}

double factorization_residual(const SusySystem& s, const TestFunction& psi_fn) {
    const Grid& g = s.grid();
    const double h = g.spacing();
    const auto psi = sample(psi_fn, g);
    const auto v = potential_on_grid(s.base_potential, g);
    const auto& w = s.w.values;
    const std::size_t n = g.size();
    const cplx alpha = s.factorization.alpha();

    // psi'' is D(D psi) on both sides, matching the composition of two
    // first-order factors, so stencil differences do not enter the residual.
    const auto dpsi = fd::first_derivative(psi, h, kResidualOrder);
    const auto d2 = fd::first_derivative(dpsi, h, kResidualOrder);
    std::vector<cplx> Lpsi(n);
    for (std::size_t i = 0; i < n; ++i) Lpsi[i] = -dpsi[i] + w[i] * psi[i];
    auto lhs = fd::first_derivative(Lpsi, h, kResidualOrder);
    for (std::size_t i = 0; i < n; ++i) lhs[i] += w[i] * Lpsi[i];

    std::vector<cplx> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = lhs[i] - (-d2[i] + (v[i] - alpha) * psi[i]);
    return masked_ratio(r, psi, stencil_mask(s.base_potential, g, kResidualReach), h);
}

}  // namespace darboux
