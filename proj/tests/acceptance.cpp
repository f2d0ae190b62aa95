// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "darboux/distributional.hpp"
#include "darboux/schwartz.hpp"
#include "darboux/singularity.hpp"
#include "darboux/susy.hpp"

using namespace darboux;
namespace sz = darboux::schwartz;

namespace {

const Grid kGrid;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

double max_identity_error(const IdentityBatch& batch, const std::vector<TestFunction>& battery,
                          const std::vector<double>& xs, bool& converged) {
    double worst = 0.0;
    for (std::size_t j = 0; j < battery.size(); ++j)
        for (std::size_t m = 0; m < xs.size(); ++m) {
            worst = std::max(worst, std::abs(batch.values[j][m].value - battery[j](xs[m])));
            converged = converged && batch.values[j][m].converged;
        }
    return worst;
}

Outcome analytic_equivalence() {
    double worst = 0.0;
    for (cplx a : {cplx(-0.5, 1.0), cplx(-0.1, 2.0), cplx(0.0, 2.0)}) {
        const auto s = build_system(Potential::zero(), a, kGrid);
        for (double k : {0.5, 1.0, 2.0, 3.0}) {
            if (std::abs(k * k + a * a) < s.tolerances.sing_tol) continue;
            const auto n = normalized_phi(s, k);
            for (std::size_t i = 0; i < kGrid.size(); ++i)
                worst = std::max(worst, std::abs(n.phi.values[i] - sz::analytic_phi(a, k, kGrid[i])));
        }
    }
    return {worst < 1e-8, fmt("max |phi_k - analytic| = %.3e (limit 1e-8)", worst)};
}

Outcome kernel_property() {
    double worst = 0.0;
    int systems = 0;
    for (const auto& v0 : {Potential::zero(), Potential::square_well(2.0, 1.0)})
        for (cplx a : {cplx(-0.5, 1.0), cplx(0.0, 1.0), cplx(0.0, 2.0), cplx(0.0, 1.3), cplx(-0.05, 1.3),
                       cplx(-0.05, 2.0)}) {
            const auto s = build_system(v0, a, kGrid);
            const auto Lu = apply_L(s, s.u);
            worst = std::max(worst, Lu.max_abs() / s.u.max_abs());
            ++systems;
        }
    return {worst < 1e-9, fmt("max ||L u|| / max|u| = %.3e over %.0f systems (limit 1e-9)", worst, systems)};
}

Outcome residuals() {
    const std::vector<TestFunction> battery{
        TestFunction::custom([](double x) { return x * std::exp(-x * x); }, 0.0, 7.0, "x exp(-x^2)"),
        TestFunction::custom([](double x) { return x * std::exp(-(x - 3.0) * (x - 3.0)); }, 0.0, 10.0,
                             "x exp(-(x-3)^2)"),
        TestFunction::compact_bump(2.0, 1.0), TestFunction::compact_bump(3.0, 1.5)};
    double inter = 0.0, fact = 0.0;
    for (const auto& v0 : {Potential::zero(), Potential::square_well(2.0, 1.0)})
        for (cplx a : {cplx(-0.5, 1.0), cplx(0.0, 2.0), cplx(0.0, 1.3)}) {
            const auto s = build_system(v0, a, kGrid);
            for (const auto& psi : battery) {
                inter = std::max(inter, intertwining_residual(s, psi));
                fact = std::max(fact, factorization_residual(s, psi));
            }
        }
    return {inter < 1e-6 && fact < 1e-6,
            fmt("max intertwining residual %.3e, max factorization residual %.3e (limit 1e-6)", inter, fact)};
}

Outcome regular_completeness() {
    const auto s = build_system(Potential::zero(), cplx(-0.5, 1.0), kGrid);
    const auto battery = default_battery();
    const auto xs = default_probe_points();
    bool converged = true;
    const double err = max_identity_error(identity_kernel_batch(s, battery, xs, {}), battery, xs, converged);
    return {converged && err < 5e-3, fmt("max |I(x) - Phi(x)| = %.3e over 5 x 8 samples (limit 5e-3)", err)};
}

Outcome zero_binorm() {
    const auto s = build_system(Potential::zero(), cplx(0.0, 2.0), kGrid);
    const cplx at2 = binorm_functional(s, 2.0, TestFunction::gaussian(2.0, 1.0)).value;
    const cplx at1 = binorm_functional(s, 1.0, TestFunction::gaussian(1.0, 1.0)).value;
    const double e1 = std::abs(at1 + 3.0);
    return {std::abs(at2) < 1e-5 && e1 < 1e-4,
            fmt("|B(2)| = %.3e (limit 1e-5), |B(1) + 3| = %.3e (limit 1e-4)", std::abs(at2), e1)};
}

std::pair<double, double> singular_identity_errors(double eps, bool override_sign, bool& converged,
                                                   double& worst_member_err) {
    const auto s = build_system(Potential::zero(), cplx(0.0, 1.0), kGrid);
    const auto battery = default_battery();
    const auto xs = default_probe_points();
    RegularizationParams rp;
    rp.override_sign = override_sign;
    std::pair<double, double> errs;
    for (int h = 0; h < 2; ++h) {
        rp.epsilon = h == 0 ? eps : eps / 2.0;
        const double e = max_identity_error(identity_kernel_batch(s, battery, xs, rp), battery, xs, converged);
        (h == 0 ? errs.first : errs.second) = e;
    }
    worst_member_err = errs.first;
    return errs;
}

Outcome singular_resolution() {
    bool converged = true;
    double dummy = 0.0;
    const auto [e1, e2] = singular_identity_errors(1e-3, false, converged, dummy);
    return {converged && e1 < 5e-3 && e2 <= e1,
            fmt("eps = 1e-3: max error %.3e (limit 5e-3); eps = 5e-4: %.3e (must not exceed)", e1, e2)};
}

Outcome sign_rule() {
    bool converged = true;
    double dummy = 0.0;
    const auto [e1, e2] = singular_identity_errors(-1e-3, true, converged, dummy);
    return {e1 > 0.05 && e2 >= e1,
            fmt("eps = -1e-3: max error %.3e (must exceed 0.05); eps = -5e-4: %.3e (must not decrease)", e1, e2)};
}

Outcome bracket_identity() {
    const std::vector<std::pair<double, double>> pairs{{1.0, 1e-2}, {1.0, 1e-3}, {2.0, 1e-2}, {0.5, 1e-1},
                                                       {3.7, 5e-3}, {-1.0, -1e-2}, {-2.0, -1e-3}, {-0.5, -1e-2},
                                                       {-3.7, -5e-2}, {1.3, 2e-4}};
    double worst_zero = 0.0, weakest_flip = INFINITY;
    bool flip_ok = true;
    for (auto [b, e] : pairs) {
        worst_zero = std::max(worst_zero, std::abs(sz::zz2_bracket(b, e)));
        const double flipped = std::abs(sz::zz2_bracket(b, -e));
        flip_ok = flip_ok && flipped > b * b;
        weakest_flip = std::min(weakest_flip, flipped / (b * b));
    }
    return {worst_zero < 1e-14 && flip_ok,
            fmt("max |bracket| (b eps > 0) = %.3e (limit 1e-14); min |bracket|/b^2 flipped = %.4f (> 1)",
                worst_zero, weakest_flip)};
}

Outcome singularity_scan() {
    const auto sing = scan_singularities(build_system(Potential::zero(), cplx(0.0, 2.0), kGrid), -5.0, 5.0, 1001);
    int hits = 0;
    double k_err = INFINITY, modulus = INFINITY;
    for (const auto& m : sing.minima)
        if (m.verdict == Verdict::singularity) {
            ++hits;
            k_err = std::abs(m.k + 2.0);
            modulus = m.modulus;
        }
    const auto reg = scan_singularities(build_system(Potential::zero(), cplx(-0.05, 2.0), kGrid), -5.0, 5.0, 1001);
    bool clear = true;
    double min_mod = INFINITY;
    for (const auto& m : reg.minima) {
        clear = clear && m.verdict != Verdict::singularity;
        min_mod = std::min(min_mod, m.modulus);
    }
    const bool pass = hits == 1 && k_err < 1e-4 && modulus < 1e-8 && clear && std::abs(min_mod - 0.05) < 1e-4;
    return {pass, fmt("a = 2i: |k* + 2| = %.3e, modulus %.3e; d = -0.05: min modulus %.8f", k_err, modulus, min_mod) +
                      (clear ? ", no singularity" : ", SPURIOUS singularity")};
}

Outcome path_monotonicity() {
    const std::vector<double> ds{-0.4, -0.2, -0.1, -0.05, -0.01};
    const auto rep = path_to_singularity(Potential::zero(), 1.0, ds, kGrid);
    double worst = 0.0;
    for (const auto& e : rep.entries) {
        worst = std::max(worst, std::abs(e.min_modulus - std::abs(e.d)));
        worst = std::max(worst, std::abs(e.prefactor - std::abs(e.d) * std::sqrt(e.d * e.d + 4.0)));
    }
    return {rep.monotone && worst < 1e-6,
            fmt("monotone = %.0f, max deviation from |d| and |d| sqrt(d^2 + 4) = %.3e (limit 1e-6)",
                rep.monotone ? 1.0 : 0.0, worst)};
}

Outcome tabulated_integrals() {
    // Additive recurrence with the plastic-number constants: 20 well-spread draws.
    const double g1 = 0.7548776662466927, g2 = 0.5698402909980532, g3 = 0.4301597090019468;
    double worst = 0.0;
    for (int n = 1; n <= 20; ++n) {
        const double u1 = std::fmod(n * g1, 1.0), u2 = std::fmod(n * g2, 1.0), u3 = std::fmod(n * g3, 1.0);
        const cplx beta((n % 2 ? 1.0 : -1.0) * (0.05 + 1.95 * u1), -2.0 + 4.0 * u2);
        const double a = n == 1 ? 0.0 : 0.5 + 2.5 * u3, c = 0.5 + 2.5 * std::fmod(n * (g1 + g3), 1.0);
        const auto x = sz::tabulated_integrals(beta, a, c), y = sz::numeric_tabulated_integrals(beta, a, c);
        worst = std::max({worst, std::abs(x.cosine - y.cosine), std::abs(x.sine - y.sine)});
    }
    return {worst < 1e-6, fmt("max |closed form - quadrature| over 20 draws = %.3e (limit 1e-6)", worst)};
}

}  // namespace

int main() {
    const std::vector<std::function<Outcome()>> criteria{
        analytic_equivalence, kernel_property,  residuals,        regular_completeness,
        zero_binorm,          singular_resolution, sign_rule,     bracket_identity,
        singularity_scan,     path_monotonicity, tabulated_integrals};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s %s [%.1f s]\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
