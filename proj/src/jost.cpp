#include "darboux/jost.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"
#include "darboux/ode.hpp"

namespace darboux {

JostData solve_jost(const Potential& v0, cplx k, const Grid& grid, const Tolerances& tol) {
    if (k == cplx{}) throw InvalidArgument("Jost solution requested at k = 0");
    if (k.imag() < 0.0) throw InvalidArgument("Jost solution requested with Im k < 0");
    if (grid.x_max() <= v0.decay_radius()) {
        std::ostringstream os;
        os << "x_max = " << grid.x_max() << " does not exceed the decay radius " << v0.decay_radius();
        throw AsymptoticRegionTooSmall(os.str());
    }

    const std::size_t n = grid.size();
    std::vector<cplx> f(n), df(n);
    const cplx k2 = k * k;

    // Exact plane wave wherever v0 vanishes identically: rotation by e^{-ikh}
    // per step, re-anchored on exp() every kAnchor nodes.
    constexpr std::size_t kAnchor = 64;
    const double exact_from = std::min(v0.support_end(), grid.x_max());
    const cplx step_back = std::exp(-kI * k * grid.spacing());
    std::size_t first_exact = n;
    for (std::size_t i = n; i-- > 0;) {
        const double x = grid[i];
        if (x < exact_from) break;
        f[i] = (n - 1 - i) % kAnchor == 0 ? std::exp(kI * k * x) : f[i + 1] * step_back;
        df[i] = kI * k * f[i];
        first_exact = i;
    }

    if (first_exact > 0) {
        // Start at the end of the support (or at x_max when v0 is only small there).
        double x = first_exact < n ? exact_from : grid.x_max();
        ode::State s{std::exp(kI * k * x), kI * k * std::exp(kI * k * x)};
        if (first_exact == n) {
            f[n - 1] = s.y;
            df[n - 1] = s.dy;
            first_exact = n - 1;
        }
        const auto bps = v0.breakpoints();
        double step = 0.0;
        const ode::Options opt{tol.ode_tol};
        for (std::size_t i = first_exact; i-- > 0;) {
            const double target = grid[i];
            // Split at breakpoints strictly inside (target, x).
            while (x > target) {
                double lo = target;
                for (double b : bps)
                    if (b > lo && b < x) lo = b;
                // The piece holding (lo, x) runs between the nearest breakpoints around it.
                double piece_lo = -INFINITY, piece_hi = INFINITY;
                for (double b : bps) {
                    if (b <= lo) piece_lo = std::max(piece_lo, b);
                    if (b >= x) piece_hi = std::min(piece_hi, b);
                }
                const auto q = [&](double xx) { return cplx(v0.value_on_piece(xx, piece_lo, piece_hi)) - k2; };
                ode::integrate_linear(q, s, x, lo, step, opt);
                x = lo;
            }
            f[i] = s.y;
            df[i] = s.dy;
        }
    }

    JostData out{WaveSample(grid, std::move(f), std::move(df), k), cplx{}, k};
    out.jost_function_value = out.solution.values[0];
    return out;
}

WaveSample base_eigenfunction(const Potential& v0, double k, const Grid& grid, const Tolerances& tol) {
    if (!(k > 0.0)) throw InvalidArgument("base eigenfunction needs k > 0");
    const JostData jd = solve_jost(v0, k, grid, tol);
    const cplx F = jd.jost_function_value;
    if (std::abs(F) < tol.zero_tol) {
        std::ostringstream os;
        os << "|F(" << k << ")| = " << std::abs(F);
        throw JostZeroOnRealAxis(os.str());
    }
    // conj(F) f - F conj(f) = 2i Im(conj(F) f): real up to the factor 2i.
    const auto& f = jd.solution.values;
    const auto& df = jd.solution.derivatives;
    const std::size_t n = grid.size();
    std::vector<double> r(n), dr(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = std::imag(std::conj(F) * f[i]);
        dr[i] = std::imag(std::conj(F) * df[i]);
    }
    const double amp = std::sqrt(r[n - 1] * r[n - 1] + dr[n - 1] * dr[n - 1] / (k * k));
    const double scale = (dr[0] >= 0.0 ? 1.0 : -1.0) * kSqrt2OverPi / amp;
    std::vector<cplx> psi(n), dpsi(n);
    for (std::size_t i = 0; i < n; ++i) {
        psi[i] = scale * r[i];
        dpsi[i] = scale * dr[i];
    }
    return WaveSample(grid, std::move(psi), std::move(dpsi), cplx(k));
}

SmearedFunctional smeared_orthonormality(const Potential& v0, double k, const TestFunction& phi, const Grid& grid,
                                         const Tolerances& tol, PairingOptions options) {
    options.quad_tol = tol.quad_tol;
    const WaveSample left = base_eigenfunction(v0, k, grid, tol);
    return smear_pairing(
        left, [&](double kp) { return base_eigenfunction(v0, kp, grid, tol); }, phi, options);
}

}  // namespace darboux
