#include "darboux/wave_sample.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/errors.hpp"

namespace darboux {

cplx PlaneWaveTail::value(double x) const {
    return outgoing * std::exp(kI * k * x) + incoming * std::exp(-kI * k * x);
}

cplx PlaneWaveTail::derivative(double x) const {
    return kI * k * (outgoing * std::exp(kI * k * x) - incoming * std::exp(-kI * k * x));
}

WaveSample::WaveSample(Grid g, std::vector<cplx> v, std::vector<cplx> dv, std::optional<cplx> k)
    : grid(g), values(std::move(v)), derivatives(std::move(dv)), wavenumber(k) {
    if (values.size() != grid.size() || derivatives.size() != grid.size())
        throw GridMismatch("wave sample length does not match its grid");
}

cplx WaveSample::at(double x) const {
    if (x > grid.x_max()) return tail().value(x);
    const std::size_t i = std::min(grid.floor_index(x), grid.size() - 2);
    const double h = grid.spacing();
    const double t = (x - grid[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    return h00 * values[i] + h10 * h * derivatives[i] + h01 * values[i + 1] + h11 * h * derivatives[i + 1];
}

PlaneWaveTail WaveSample::tail() const {
    if (!wavenumber || *wavenumber == 0.0)
        throw InvalidArgument("plane-wave tail needs a nonzero wavenumber");
    const cplx k = *wavenumber;
    const double X = grid.x_max();
    const cplx f = values.back(), df = derivatives.back();
    const cplx ratio = df / (kI * k);
    return {k, 0.5 * (f + ratio) * std::exp(-kI * k * X), 0.5 * (f - ratio) * std::exp(kI * k * X)};
}

double WaveSample::max_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace darboux
