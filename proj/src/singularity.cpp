#include "darboux/singularity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"
#include "darboux/jost.hpp"
#include "darboux/parallel.hpp"

namespace darboux {

namespace {

constexpr int kRefineLevels = 8;

struct Parabola {
    double c1, c2;
};

// Least-squares c0 + c1 t + c2 t^2 through samples at t = -2..2.
Parabola fit_parabola(const std::array<double, 5>& y) {
    double sy = 0, sty = 0, st2y = 0;
    for (int t = -2; t <= 2; ++t) {
        sy += y[t + 2];
        sty += t * y[t + 2];
        st2y += t * t * y[t + 2];
    }
    return {sty / 10.0, (st2y - 2.0 * sy) / 14.0};
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::singularity: return "singularity";
        case Verdict::near_singularity: return "near_singularity";
        case Verdict::clear: return "clear";
    }
    return "unknown";
}

WaveSample transformed_jost(const SusySystem& s, double k) {
    if (k == 0.0) throw InvalidArgument("transformed Jost solution requested at k = 0");
    const JostData jd = solve_jost(s.base_potential, k, s.grid(), s.tolerances);
    WaveSample Lf = apply_L(s, jd.solution);
    const double X = s.grid().x_max();
    const cplx amp = Lf.values.back() * std::exp(-kI * k * X);
    if (std::abs(amp) < s.tolerances.zero_tol) {
        std::ostringstream os;
        os << "L f(k, x) vanishes identically at k = " << k << " (amplitude " << std::abs(amp) << ")";
        throw DegenerateJost(os.str());
    }
    for (auto& v : Lf.values) v /= amp;
    for (auto& v : Lf.derivatives) v /= amp;
    return Lf;
}

cplx boundary_functional(const SusySystem& s, double k) {
    const WaveSample f = transformed_jost(s, k);
    return f.derivatives[0] + s.w.values[0] * f.values[0];
}

Verdict classify(double modulus, const Tolerances& tol, const ScanOptions& opt) {
    if (modulus < tol.zero_tol) return Verdict::singularity;
    if (modulus < opt.near_tol) return Verdict::near_singularity;
    return Verdict::clear;
}

Verdict SingularityScan::verdict_at(std::size_t i, const Tolerances& tol, const ScanOptions& opt) const {
    if (!valid[i]) return Verdict::clear;
    return classify(std::abs(boundary_functional_values[i]), tol, opt);
}

SingularityScan scan_singularities(const SusySystem& s, double k_lo, double k_hi, std::size_t n, const ScanOptions& opt) {
    if (n < 5) throw InvalidArgument("a scan needs at least five samples");
    if (!(k_hi > k_lo)) throw InvalidArgument("scan window is empty");
    SingularityScan scan;
    scan.k_samples.resize(n);
    scan.boundary_functional_values.assign(n, cplx{});
    scan.valid.assign(n, false);
    const double h = (k_hi - k_lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) scan.k_samples[i] = i + 1 == n ? k_hi : k_lo + h * static_cast<double>(i);

    std::vector<char> ok(n, 0);
    parallel::for_each_index(n, [&](std::size_t i) {
        const double k = scan.k_samples[i];
        if (std::abs(k) < 1e-12 * std::max(std::abs(k_lo), std::abs(k_hi))) return;
        try {
            scan.boundary_functional_values[i] = boundary_functional(s, k);
            ok[i] = 1;
        } catch (const DegenerateJost&) {
        }
    });
    for (std::size_t i = 0; i < n; ++i) scan.valid[i] = ok[i] != 0;

    const auto m2 = [&](std::size_t i) { return std::norm(scan.boundary_functional_values[i]); };
    for (std::size_t i = 2; i + 2 < n; ++i) {
        bool usable = true;
        for (std::size_t j = i - 2; j <= i + 2; ++j) usable = usable && scan.valid[j];
        if (!usable || !(m2(i) <= m2(i - 1) && m2(i) < m2(i + 1))) continue;

        ScanMinimum m{scan.k_samples[i], std::abs(scan.boundary_functional_values[i]), 0.0,
                      scan.boundary_functional_values[i], Verdict::clear};
        std::array<double, 5> y{};
        for (int t = -2; t <= 2; ++t) y[t + 2] = m2(static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) + t));
        double centre = scan.k_samples[i], step = h;
        // Fit, move to the vertex, shrink the stencil and fit again.
        for (int level = 0; level < kRefineLevels; ++level) {
            const auto fit = fit_parabola(y);
            if (level == 0) m.curvature = 2.0 * fit.c2 / (step * step);
            if (!(fit.c2 > 0.0)) break;
            const double k_star = centre + step * std::clamp(-fit.c1 / (2.0 * fit.c2), -2.0, 2.0);
            step /= 8.0;
            std::array<double, 5> next{};
            bool ok_all = true;
            for (int t = -2; t <= 2 && ok_all; ++t) {
                const double kk = k_star + t * step;
                if (kk == 0.0) {
                    ok_all = false;
                    break;
                }
                try {
                    const cplx v = boundary_functional(s, kk);
                    next[t + 2] = std::norm(v);
                    if (std::abs(v) < m.modulus) m = {kk, std::abs(v), m.curvature, v, Verdict::clear};
                } catch (const DegenerateJost&) {
                    ok_all = false;
                }
            }
            if (!ok_all || m.modulus < 1e-3 * s.tolerances.zero_tol) break;
            centre = k_star;
            y = next;
        }
        m.verdict = classify(m.modulus, s.tolerances, opt);
        scan.minima.push_back(m);
    }
    return scan;
}

PathReport path_to_singularity(const Potential& v0, double b, std::span<const double> d_sequence, const Grid& grid,
                               const Tolerances& tol, std::size_t n_samples, const ScanOptions& opt) {
    if (b == 0.0) throw InvalidArgument("path needs b != 0");
    PathReport report{b, {}, true};
    const double reach = std::abs(b) + 2.0;
    for (double d : d_sequence) {
        if (d > 0.0) throw InvalidArgument("path needs d <= 0");
        const cplx a(d, b);
        const SusySystem s = build_system(v0, a, grid, tol);
        const SingularityScan scan = scan_singularities(s, -reach, reach, n_samples, opt);
        PathEntry e{d, INFINITY, 0.0, std::abs(b * b - s.factorization.alpha())};
        for (const auto& m : scan.minima)
            if (m.modulus < e.min_modulus) e.min_modulus = m.modulus, e.k_at_min = m.k;
        for (std::size_t i = 0; i < scan.k_samples.size(); ++i)
            if (scan.valid[i] && std::abs(scan.boundary_functional_values[i]) < e.min_modulus)
                e.min_modulus = std::abs(scan.boundary_functional_values[i]), e.k_at_min = scan.k_samples[i];
        report.entries.push_back(e);
    }
    for (std::size_t i = 1; i < report.entries.size(); ++i) {
        const auto &p = report.entries[i - 1], &c = report.entries[i];
        report.monotone = report.monotone && c.min_modulus < p.min_modulus && c.prefactor < p.prefactor;
    }
    return report;
}

}  // namespace darboux
