#include "darboux/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"
#include "darboux/parallel.hpp"
#include "darboux/quadrature.hpp"

namespace darboux {

namespace {

// exp(-kLogTail) ~ 1e-16: damping weight at the outer x cutoff.
constexpr double kLogTail = 36.8;
// Fixed number of partial sums, so the result does not depend on the worker count.
constexpr std::size_t kChunks = 16;

struct XLayout {
    std::size_t n_grid;
    std::size_t n_ext;
    double h_ext;
    std::vector<double> weights;  // grid part then extension part
    std::vector<double> x;
};

XLayout make_layout(const Grid& grid, double x_cut, int stride) {
    XLayout L;
    L.n_grid = grid.size();
    L.h_ext = grid.spacing() * std::max(1, stride);
    const double span = std::max(0.0, x_cut - grid.x_max());
    std::size_t intervals = static_cast<std::size_t>(std::ceil(span / L.h_ext));
    if (intervals % 2 == 1) ++intervals;
    L.n_ext = intervals;  // extension nodes x_max + j h_ext, j = 1..intervals
    L.x = grid.points();
    L.weights = quad::simpson_weights(grid.size(), grid.spacing());
    if (intervals > 0) {
        const auto w_ext = quad::simpson_weights(intervals + 1, L.h_ext);
        L.weights.back() += w_ext[0];
        for (std::size_t j = 1; j <= intervals; ++j) {
            L.x.push_back(grid.x_max() + static_cast<double>(j) * L.h_ext);
            L.weights.push_back(w_ext[j]);
        }
    }
    return L;
}

// values of `w` at every layout node, tail continued by rotation recurrence.
void accumulate(const WaveSample& w, cplx scale, const XLayout& L, std::vector<cplx>& out) {
    for (std::size_t i = 0; i < L.n_grid; ++i) out[i] += scale * w.values[i];
    if (L.n_ext == 0) return;
    const PlaneWaveTail t = w.tail();
    const double X = w.grid.x_max();
    cplx e_out = std::exp(kI * t.k * X), e_in = std::exp(-kI * t.k * X);
    const cplx r_out = std::exp(kI * t.k * L.h_ext), r_in = std::exp(-kI * t.k * L.h_ext);
    for (std::size_t j = 0; j < L.n_ext; ++j) {
        e_out *= r_out;
        e_in *= r_in;
        out[L.n_grid + j] += scale * (t.outgoing * e_out + t.incoming * e_in);
    }
}

}  // namespace

SmearedFunctional smear_pairing(const WaveSample& left, const WaveFamily& family, const TestFunction& phi,
                                const PairingOptions& opt) {
    if (!left.wavenumber) throw InvalidArgument("smeared pairing needs the wavenumber of the left factor");
    if (opt.eta_levels < 2) throw InvalidArgument("need at least two damping levels");
    const double k = left.wavenumber->real();
    const double lo = std::max(opt.k_floor, phi.lower());
    const double hi = phi.upper();

    SmearedFunctional out;
    if (!(hi > lo)) return out;

    double kappa = INFINITY;
    if (std::abs(phi(lo)) > kTestTailTol) kappa = std::min(kappa, std::abs(k - lo));
    if (std::abs(phi(hi)) > kTestTailTol) kappa = std::min(kappa, std::abs(hi - k));
    double eta0 = opt.eta_start;
    if (std::isfinite(kappa)) eta0 = std::min(eta0, kappa * kappa / 160.0);
    if (!(eta0 > 0.0)) throw InvalidArgument("test function window touches the pairing wavenumber");

    std::vector<double> etas(static_cast<std::size_t>(opt.eta_levels));
    for (std::size_t m = 0; m < etas.size(); ++m) etas[m] = eta0 / std::pow(2.0, static_cast<double>(m));
    const double x_cut = std::sqrt(kLogTail / etas.back());

    const Grid& grid = left.grid;
    const XLayout L = make_layout(grid, x_cut, opt.extension_stride);
    const std::size_t nx = L.x.size();

    // k' panels must resolve e^{i k' x} up to the outer cutoff.
    const double panel = std::min(0.1, 10.0 / std::max(L.x.back(), 1.0));
    const auto breaks = quad::uniform_breaks(lo, hi, panel);
    const auto nodes = quad::gauss_kronrod_nodes(breaks);

    const std::size_t chunks = std::min(kChunks, nodes.size());
    std::vector<std::vector<cplx>> partial(chunks, std::vector<cplx>(nx));
    parallel::for_each_index(chunks, [&](std::size_t c) {
        const std::size_t begin = nodes.size() * c / chunks, end = nodes.size() * (c + 1) / chunks;
        for (std::size_t j = begin; j < end; ++j) {
            const double weight = nodes[j].weight * phi(nodes[j].x);
            if (weight == 0.0) continue;
            const WaveSample w = family(nodes[j].x);
            if (!(w.grid == grid)) throw GridMismatch("family member sampled on a different grid");
            accumulate(w, weight, L, partial[c]);
        }
    });
    std::vector<cplx> smeared(nx);
    for (const auto& p : partial)
        for (std::size_t i = 0; i < nx; ++i) smeared[i] += p[i];

    std::vector<cplx> lhs(nx);
    accumulate(left, 1.0, L, lhs);
    if (opt.pairing == Pairing::conjugated)
        for (auto& v : lhs) v = std::conj(v);

    std::vector<cplx> sequence;
    for (double eta : etas) {
        cplx s{};
        for (std::size_t i = 0; i < nx; ++i) s += L.weights[i] * std::exp(-eta * L.x[i] * L.x[i]) * lhs[i] * smeared[i];
        sequence.push_back(s);
        out.eta_table.push_back({eta, s});
    }

    const auto ex = quad::richardson(sequence, 2.0);
    out.value = ex.value;
    out.estimated_error = ex.error;
    out.converged = ex.error < opt.quad_tol * std::max(1.0, std::abs(ex.value));
    if (!out.converged && opt.throw_on_failure) {
        std::ostringstream os;
        os << "damping extrapolation at k = " << k << " changed by " << ex.error << " (tolerance "
           << opt.quad_tol << ")";
        throw QuadratureNotConverged(os.str());
    }
    return out;
}

}  // namespace darboux
