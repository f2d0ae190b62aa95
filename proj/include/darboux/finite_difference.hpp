#pragma once

#include <span>
#include <vector>

#include "darboux/common.hpp"

namespace darboux::fd {

/// First derivative on a uniform grid, order 4 or 6 in the interior. The
/// sixth-order variant falls back to the fourth-order stencils on the three
/// outermost nodes at each end.
std::vector<cplx> first_derivative(std::span<const cplx> f, double h, int order = 4);

/// Second derivative, same conventions as first_derivative.
std::vector<cplx> second_derivative(std::span<const cplx> f, double h, int order = 4);

}  // namespace darboux::fd
