#include "darboux/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "darboux/errors.hpp"

namespace darboux::quad {

std::vector<double> simpson_weights(std::size_t n, double h) {
    if (n < 2) throw InvalidArgument("simpson weights need at least two points");
    std::vector<double> w(n, 0.0);
    if (n == 2) {
        w[0] = w[1] = 0.5 * h;
        return w;
    }
    if (n == 4) {
        const double c = 3.0 * h / 8.0;
        w = {c, 3 * c, 3 * c, c};
        return w;
    }
    // Simpson on the first m points (m odd), 3/8 on the rest if needed.
    const std::size_t m = (n % 2 == 1) ? n : n - 3;
    for (std::size_t i = 0; i < m; ++i) {
        const double c = (i == 0 || i + 1 == m) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        w[i] += c * h / 3.0;
    }
    if (m != n) {
        const double c = 3.0 * h / 8.0;
        w[n - 4] += c;
        w[n - 3] += 3 * c;
        w[n - 2] += 3 * c;
        w[n - 1] += c;
    }
    return w;
}

std::vector<Node> gauss_kronrod_nodes(std::span<const double> breaks) {
    using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
    using Gauss = boost::math::quadrature::gauss<double, 7>;
    const auto& xk = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();

    std::vector<Node> nodes;
    if (breaks.size() < 2) return nodes;
    nodes.reserve((breaks.size() - 1) * 15);
    for (std::size_t p = 0; p + 1 < breaks.size(); ++p) {
        const double mid = 0.5 * (breaks[p] + breaks[p + 1]);
        const double half = 0.5 * (breaks[p + 1] - breaks[p]);
        // Kronrod abscissae: x0 = 0 then alternating Gauss / Kronrod-only.
        for (std::size_t i = 0; i < xk.size(); ++i) {
            const double g = (i % 2 == 0) ? wg[i / 2] : 0.0;
            if (i == 0) {
                nodes.push_back({mid, half * wk[0], half * g, p});
                continue;
            }
            nodes.push_back({mid - half * xk[i], half * wk[i], half * g, p});
            nodes.push_back({mid + half * xk[i], half * wk[i], half * g, p});
        }
    }
    return nodes;
}

std::vector<double> uniform_breaks(double lo, double hi, double max_width) {
    if (!(hi > lo) || !(max_width > 0)) return {lo, hi};
    const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / max_width - 1e-12));
    std::vector<double> b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) b[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    b.back() = hi;
    return b;
}

std::vector<double> graded_breaks(double lo, double hi, double center, double scale, double coarse_width) {
    std::vector<double> offsets{0.0};
    double width = 0.5 * scale;
    double pos = 0.0;
    // Four fine panels, then geometric growth.
    for (int i = 0; i < 4; ++i) offsets.push_back(pos += width);
    while (width < coarse_width) {
        width = std::min(2.0 * width, coarse_width);
        offsets.push_back(pos += width);
    }

    std::vector<double> b;
    auto add_side = [&](double dir, double limit) {
        for (double off : offsets) {
            const double x = center + dir * off;
            if (dir * (limit - x) <= 0.0) break;
            b.push_back(x);
        }
        const double outer = b.empty() ? center : b.back();
        auto rest = uniform_breaks(std::min(outer, limit), std::max(outer, limit), coarse_width);
        if (dir > 0)
            b.insert(b.end(), rest.begin() + 1, rest.end());
        else
            b.insert(b.end(), rest.begin(), rest.end() - 1);
    };

    if (center <= lo || center >= hi) return uniform_breaks(lo, hi, coarse_width);
    add_side(-1.0, lo);
    add_side(+1.0, hi);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end(), [](double a, double c) { return std::abs(a - c) < 1e-15; }),
            b.end());
    return b;
}

Extrapolation richardson(std::span<const cplx> sequence, double ratio) {
    const std::size_t n = sequence.size();
    if (n == 0) throw InvalidArgument("richardson needs at least one value");
    std::vector<std::vector<cplx>> t(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i].resize(i + 1);
        t[i][0] = sequence[i];
        double pw = 1.0;
        for (std::size_t j = 1; j <= i; ++j) {
            pw *= ratio;
            t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (pw - 1.0);
        }
    }
    Extrapolation out;
    for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(t[i][i]);
    out.value = t[n - 1][n - 1];
    out.error = n > 1 ? std::abs(t[n - 1][n - 1] - t[n - 2][n - 2]) : INFINITY;
    return out;
}

}  // namespace darboux::quad
