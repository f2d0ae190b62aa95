#pragma once

#include "darboux/common.hpp"
#include "darboux/test_function.hpp"

namespace darboux::schwartz {

/// (k^2 - alpha)^{-1/2} sqrt(2/pi) [a sin(kx) - k cos(kx)], alpha = -a^2, principal root.
/// Eigenfunctions of -d^2 on the half-line with phi'(0) + a phi(0) = 0.
cplx analytic_phi(cplx a, double k, double x, double sing_tol = 1e-6);
cplx analytic_phi_derivative(cplx a, double k, double x, double sing_tol = 1e-6);

struct IntegralPair {
    cplx cosine;  // int_0^inf cos(a x) / (beta^2 + x^2) dx
    cplx sine;    // int_0^inf x sin(c x) / (beta^2 + x^2) dx
};

/// Closed forms, continued to complex beta with Re beta != 0.
IntegralPair tabulated_integrals(cplx beta, double a, double c);

/// The same integrals by adaptive Gauss-Kronrod quadrature with exp(-eta x)
/// damping, extrapolated to eta -> 0. Independent of the closed forms.
IntegralPair numeric_tabulated_integrals(cplx beta, double a, double c);

/// Parameters of the regularized kernel at a = ib: z = eps/(2b) - ib.
struct RegularizedSystem {
    double b;
    double epsilon;
    cplx z;
    int sign;  // +1 when b eps > 0, else -1

    RegularizedSystem(double b, double epsilon);
};

/// +-b^2 - ibz +- i eps/2, upper signs for b eps > 0.
cplx zz2_bracket(double b, double epsilon);

/// Regularized kernel minus its delta part:
/// (e^{-+z(x+y)}/z) bracket +- (i eps/2z) e^{-+z|x-y|}.
cplx zz2_kernel(double b, double epsilon, double x, double y);

/// int dy zz2_kernel(x, y) Phi(y).
cplx smeared_zz2_residual(double b, double epsilon, const TestFunction& phi, double x);

/// (k^2 + a^2) Phi(k).
cplx binorm_closed_form(cplx a, double k, const TestFunction& phi);

}  // namespace darboux::schwartz
