#pragma once

// Independent reference computations used by the test suites. Nothing here
// calls into the Jost solver, the pairing engine or the SUSY code.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr cplx I{0.0, 1.0};
inline const double kNorm = std::sqrt(2.0 / std::numbers::pi);

/// Jost solution for v0 = -depth on [0, width): plane wave outside, matched
/// (value and slope) to cos/sin of q = sqrt(k^2 + depth) inside.
struct SquareWellJost {
    double depth, width;
    cplx k;

    cplx q() const { return std::sqrt(k * k + depth); }
    cplx f(double x) const {
        if (x >= width) return std::exp(I * k * x);
        const cplx qq = q(), e = std::exp(I * k * width);
        return e * (std::cos(qq * (x - width)) + I * k / qq * std::sin(qq * (x - width)));
    }
    cplx df(double x) const {
        if (x >= width) return I * k * std::exp(I * k * x);
        const cplx qq = q(), e = std::exp(I * k * width);
        return e * (-qq * std::sin(qq * (x - width)) + I * k * std::cos(qq * (x - width)));
    }
    cplx F() const { return f(0.0); }
};

/// Delta-normalized Dirichlet eigenfunction of the square well at real k > 0.
struct SquareWellPsi {
    double depth, width, k;

    double q() const { return std::sqrt(k * k + depth); }
    double C() const {
        const double qq = q(), s = std::sin(qq * width), c = std::cos(qq * width);
        return kNorm / std::sqrt(s * s + (qq / k) * (qq / k) * c * c);
    }
    double operator()(double x) const {
        const double qq = q();
        if (x < width) return C() * std::sin(qq * x);
        const double t = x - width;
        return C() * (std::sin(qq * width) * std::cos(k * t) + qq / k * std::cos(qq * width) * std::sin(k * t));
    }
};

/// Repeated Richardson elimination for parameters halving at each level.
inline cplx richardson(std::vector<cplx> s) {
    for (std::size_t level = 1; level < s.size(); ++level) {
        const double f = std::pow(2.0, static_cast<double>(level));
        for (std::size_t i = s.size() - 1; i >= level; --i) s[i] = s[i] + (s[i] - s[i - 1]) / (f - 1.0);
    }
    return s.back();
}

/// Composite Simpson on n (odd) equally spaced points.
inline double simpson_weight(std::size_t i, std::size_t n, double h) {
    if (i == 0 || i + 1 == n) return h / 3.0;
    return (i % 2 ? 4.0 : 2.0) * h / 3.0;
}

/// int dk' [int dx e^{-eta x^2} A(k, x) A(k', x)] Phi(k') by plain 2D
/// quadrature (Simpson in k' and x), for a family known in closed form,
/// extrapolated in eta. `conj_left` conjugates A(k, x).
inline cplx damped_pairing(const std::function<cplx(double, double)>& A, double k,
                           const std::function<double(double)>& phi, double k_lo, double k_hi, bool conj_left = false,
                           double eta0 = 1e-2, int levels = 5) {
    const double eta_min = eta0 / std::pow(2.0, levels - 1);
    const double X = std::sqrt(37.0 / eta_min);
    std::size_t nx = static_cast<std::size_t>(X / 0.02) | 1u;
    const double hx = X / static_cast<double>(nx - 1);
    std::size_t nk = static_cast<std::size_t>((k_hi - k_lo) / 0.0025) | 1u;
    const double hk = (k_hi - k_lo) / static_cast<double>(nk - 1);

    // G(x) = int dk' Phi(k') A(k', x)
    std::vector<cplx> G(nx);
    for (std::size_t j = 0; j < nk; ++j) {
        const double kp = k_lo + hk * static_cast<double>(j);
        const double w = simpson_weight(j, nk, hk) * phi(kp);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < nx; ++i) G[i] += w * A(kp, hx * static_cast<double>(i));
    }
    std::vector<cplx> seq;
    for (int l = 0; l < levels; ++l) {
        const double eta = eta0 / std::pow(2.0, l);
        cplx s{};
        for (std::size_t i = 0; i < nx; ++i) {
            const double x = hx * static_cast<double>(i);
            cplx a = A(k, x);
            if (conj_left) a = std::conj(a);
            s += simpson_weight(i, nx, hx) * std::exp(-eta * x * x) * a * G[i];
        }
        seq.push_back(s);
    }
    return richardson(seq);
}

/// Sixth-order centered second difference.
inline cplx second_difference6(const std::vector<cplx>& f, std::size_t i, double h) {
    return (2.0 * f[i - 3] - 27.0 * f[i - 2] + 270.0 * f[i - 1] - 490.0 * f[i] + 270.0 * f[i + 1] - 27.0 * f[i + 2] +
            2.0 * f[i + 3]) /
           (180.0 * h * h);
}

}  // namespace oracle
