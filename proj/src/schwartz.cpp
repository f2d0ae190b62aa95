#include "darboux/schwartz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "darboux/errors.hpp"
#include "darboux/quadrature.hpp"

namespace darboux::schwartz {

namespace {

using std::numbers::pi;

cplx inverse_norm(cplx a, double k, double sing_tol) {
    if (!(k > 0.0)) throw InvalidArgument("analytic eigenfunction needs k > 0");
    const cplx n2 = k * k + a * a;
    if (std::abs(n2) < sing_tol) {
        std::ostringstream os;
        os << "k = " << k << " sits on the singular point (|k^2 - alpha| = " << std::abs(n2) << ")";
        throw AtSingularPoint(os.str());
    }
    return kSqrt2OverPi / std::sqrt(n2);
}

// Adaptive Gauss-Kronrod of a complex integrand, real and imaginary parts separately.
template <class F>
cplx integrate(F&& f, double lo, double hi, double tol = 1e-13) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double re = GK::integrate([&](double x) { return f(x).real(); }, lo, hi, 15, tol);
    const double im = GK::integrate([&](double x) { return f(x).imag(); }, lo, hi, 15, tol);
    return {re, im};
}

// int_0^inf g(x) e^{-eta x} dx for eta = eta0 / 2^j, extrapolated to eta -> 0.
// Adaptive near the (possibly nearly real) pole, fixed Gauss-Kronrod panels
// no wider than `panel` further out.
template <class G>
cplx damped_to_zero(G&& g, double eta0, double near_pole, double panel) {
    constexpr int kLevels = 7;
    const double split = near_pole + 10.0;
    std::vector<cplx> seq;
    for (int j = 0; j < kLevels; ++j) {
        const double eta = eta0 / std::pow(2.0, j);
        const double L = std::max(40.0 / eta, 2.0 * split);
        const auto damped = [&](double x) { return g(x) * std::exp(-eta * x); };
        cplx s = integrate(damped, 0.0, std::max(near_pole, 1e-3)) + integrate(damped, std::max(near_pole, 1e-3), split);
        const auto breaks = quad::uniform_breaks(split, L, panel);
        for (const auto& node : quad::gauss_kronrod_nodes(breaks)) s += node.weight * damped(node.x);
        seq.push_back(s);
    }
    return quad::richardson(seq, 2.0).value;
}

}  // namespace

cplx analytic_phi(cplx a, double k, double x, double sing_tol) {
    return inverse_norm(a, k, sing_tol) * (a * std::sin(k * x) - k * std::cos(k * x));
}

cplx analytic_phi_derivative(cplx a, double k, double x, double sing_tol) {
    return inverse_norm(a, k, sing_tol) * k * (a * std::cos(k * x) + k * std::sin(k * x));
}

IntegralPair tabulated_integrals(cplx beta, double a, double c) {
    if (beta.real() == 0.0) throw OnBranchBoundary("closed forms need Re beta != 0");
    if (!(c > 0.0)) throw InvalidArgument("the sine integral needs c > 0");
    const double s = beta.real() > 0.0 ? 1.0 : -1.0;
    return {s * pi / (2.0 * beta) * std::exp(-s * std::abs(a) * beta), 0.5 * pi * std::exp(-s * c * beta)};
}

IntegralPair numeric_tabulated_integrals(cplx beta, double a, double c) {
    if (!(c > 0.0)) throw InvalidArgument("the sine integral needs c > 0");
    const cplx b2 = beta * beta;
    const double pole = std::abs(beta.imag());
    IntegralPair out;
    if (a == 0.0) {
        // x = tan(theta) turns the integral into a finite one.
        out.cosine = integrate(
            [&](double t) { return 1.0 / (b2 * std::cos(t) * std::cos(t) + std::sin(t) * std::sin(t)); }, 0.0,
            0.5 * pi);
    } else {
        const double aa = std::abs(a);
        out.cosine = damped_to_zero([&](double x) { return std::cos(aa * x) / (b2 + x * x); }, 0.25 * std::min(aa, 1.0),
                                    pole, std::min(1.0, 2.0 / aa));
    }
    out.sine = damped_to_zero([&](double x) { return x * std::sin(c * x) / (b2 + x * x); }, 0.25 * std::min(c, 1.0),
                              pole, std::min(1.0, 2.0 / c));
    return out;
}

RegularizedSystem::RegularizedSystem(double b_, double eps)
    : b(b_), epsilon(eps), z(eps / (2.0 * b_), -b_), sign(b_ * eps > 0.0 ? 1 : -1) {
    if (b_ == 0.0) throw InvalidArgument("regularized kernel needs b != 0");
    if (eps == 0.0) throw InvalidArgument("regularized kernel needs epsilon != 0");
}

cplx zz2_bracket(double b, double epsilon) {
    const RegularizedSystem r(b, epsilon);
    const double s = r.sign;
    return s * b * b - kI * b * r.z + s * kI * epsilon / 2.0;
}

cplx zz2_kernel(double b, double epsilon, double x, double y) {
    const RegularizedSystem r(b, epsilon);
    const double s = r.sign;
    return std::exp(-s * r.z * (x + y)) / r.z * zz2_bracket(b, epsilon) +
           s * kI * epsilon / (2.0 * r.z) * std::exp(-s * r.z * std::abs(x - y));
}

cplx smeared_zz2_residual(double b, double epsilon, const TestFunction& phi, double x) {
    const auto f = [&](double y) { return zz2_kernel(b, epsilon, x, y) * phi(y); };
    const double lo = std::max(0.0, phi.lower()), hi = phi.upper();
    if (!(hi > lo)) return {};
    const double mid = std::clamp(x, lo, hi);
    cplx s{};
    if (mid > lo) s += integrate(f, lo, mid, 1e-12);
    if (hi > mid) s += integrate(f, mid, hi, 1e-12);
    return s;
}

cplx binorm_closed_form(cplx a, double k, const TestFunction& phi) { return (k * k + a * a) * phi(k); }

}  // namespace darboux::schwartz
