#pragma once

#include <optional>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/grid.hpp"

namespace darboux {

/// Free-wave continuation p e^{ikx} + q e^{-ikx} of a sampled solution past
/// the end of its grid. Exact wherever the potential (and superpotential
/// derivative) vanish.
struct PlaneWaveTail {
    cplx k;
    cplx outgoing;  // p
    cplx incoming;  // q

    cplx value(double x) const;
    cplx derivative(double x) const;
};

/// A complex function and its derivative sampled on a grid. `wavenumber` is
/// set when the samples solve a Schroedinger equation at energy k^2.
struct WaveSample {
    Grid grid;
    std::vector<cplx> values;
    std::vector<cplx> derivatives;
    std::optional<cplx> wavenumber;

    WaveSample(Grid g, std::vector<cplx> v, std::vector<cplx> dv, std::optional<cplx> k = std::nullopt);

    std::size_t size() const noexcept { return values.size(); }

    /// Cubic Hermite interpolation inside the grid, plane-wave tail beyond it.
    cplx at(double x) const;

    /// Requires a nonzero wavenumber.
    PlaneWaveTail tail() const;

    double max_abs() const;
};

}  // namespace darboux
