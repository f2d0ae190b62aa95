#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "darboux/common.hpp"
#include "darboux/errors.hpp"

namespace darboux::ode {

/// (y, y') for a linear second-order equation y'' = q(x) y.
struct State {
    cplx y;
    cplx dy;
};

struct Options {
    double rtol = 1e-10;
    int max_steps = 2'000'000;
};

namespace detail {

inline State rhs(cplx q, const State& s) { return {s.dy, q * s.y}; }

inline State axpy(const State& s, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = s;
    for (const auto& [c, k] : terms) {
        out.y += h * c * k->y;
        out.dy += h * c * k->dy;
    }
    return out;
}

}  // namespace detail

/// Dormand-Prince 5(4) integration of y'' = q(x) y from `from` to `to`
/// (either direction). `step` carries the last accepted step size between
/// calls; pass 0 to start with the full interval.
template <class Coefficient>
void integrate_linear(Coefficient&& q, State& s, double from, double to, double& step,
                      const Options& opt = {}) {
    using detail::axpy;
    using detail::rhs;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const double span = to - from;
    if (span == 0.0) return;
    const double dir = span > 0 ? 1.0 : -1.0;
    double h = step != 0.0 ? std::min(std::abs(step), std::abs(span)) : std::abs(span);
    double x = from;
    int steps = 0;
    while (dir * (to - x) > 0.0) {
        if (++steps > opt.max_steps)
            throw IntegrationDiverged("step budget exhausted near x = " + std::to_string(x));
        const double remaining = std::abs(to - x);
        const bool last = h >= remaining * (1.0 - 1e-12);
        const double hs = dir * (last ? remaining : h);

        const State k1 = rhs(q(x), s);
        const State k2 = rhs(q(x + c2 * hs), axpy(s, hs, {{a21, &k1}}));
        const State k3 = rhs(q(x + c3 * hs), axpy(s, hs, {{a31, &k1}, {a32, &k2}}));
        const State k4 = rhs(q(x + c4 * hs), axpy(s, hs, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const State k5 =
            rhs(q(x + c5 * hs), axpy(s, hs, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const State k6 = rhs(q(x + hs),
                             axpy(s, hs, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const State next = axpy(s, hs, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const State k7 = rhs(q(x + hs), next);
        const State err =
            axpy(State{0.0, 0.0}, hs, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

        // Component-wise relative error with a floor tied to the state size.
        const double mag = std::max({std::abs(s.y), std::abs(s.dy), std::abs(next.y), std::abs(next.dy)});
        const double floor = 1e-3 * mag;
        const double sy = opt.rtol * std::max({std::abs(s.y), std::abs(next.y), floor});
        const double sdy = opt.rtol * std::max({std::abs(s.dy), std::abs(next.dy), floor});
        const double ratio = std::max(std::abs(err.y) / sy, std::abs(err.dy) / sdy);

        if (!std::isfinite(ratio) || !std::isfinite(next.y.real()) || !std::isfinite(next.y.imag()))
            throw IntegrationDiverged("non-finite state near x = " + std::to_string(x));

        const double factor = ratio == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(ratio, -0.2), 0.2, 5.0);
        if (ratio <= 1.0) {
            x = last ? to : x + hs;
            s = next;
            if (!last) h = std::abs(hs) * factor;
        } else {
            h = std::abs(hs) * factor;
            if (h < 1e-14 * std::max(1.0, std::abs(x)))
                throw IntegrationDiverged("step size underflow near x = " + std::to_string(x));
        }
    }
    step = h;
}

}  // namespace darboux::ode
