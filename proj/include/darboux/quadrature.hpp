#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "darboux/common.hpp"

namespace darboux::quad {

/// Composite Simpson weights for n equally spaced points (3/8 rule on the
/// last three intervals when n - 1 is odd).
std::vector<double> simpson_weights(std::size_t n, double h);

/// A node of a composite Gauss-Kronrod (7, 15) rule. `gauss_weight` is zero
/// for Kronrod-only nodes.
struct Node {
    double x;
    double weight;
    double gauss_weight;
    std::size_t panel;
};

std::vector<Node> gauss_kronrod_nodes(std::span<const double> breaks);

/// Breakpoints splitting [lo, hi] into equal panels no wider than max_width.
std::vector<double> uniform_breaks(double lo, double hi, double max_width);

/// Breakpoints on [lo, hi] graded geometrically towards `center`: panels of
/// width ~ scale/2 next to it, doubling outwards until they reach coarse_width.
std::vector<double> graded_breaks(double lo, double hi, double center, double scale, double coarse_width);

/// Repeated Richardson extrapolation of a sequence computed at parameters
/// h, h/r, h/r^2, ... whose error expands in integer powers of h.
struct Extrapolation {
    cplx value;
    double error;
    std::vector<cplx> diagonal;
};

Extrapolation richardson(std::span<const cplx> sequence, double ratio = 2.0);

}  // namespace darboux::quad
