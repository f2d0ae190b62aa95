#pragma once

#include <cstddef>
#include <vector>

#include "darboux/errors.hpp"

namespace darboux {

/// Uniform grid on [0, x_max].
class Grid {
public:
    explicit Grid(double x_max = 40.0, std::size_t n_points = 8001) : x_max_(x_max), n_(n_points) {
        if (!(x_max > 0.0)) throw InvalidArgument("grid x_max must be positive");
        if (n_points < 2) throw InvalidArgument("grid needs at least two points");
    }

    double x_max() const noexcept { return x_max_; }
    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return x_max_ / static_cast<double>(n_ - 1); }

    double operator[](std::size_t i) const noexcept {
        return i + 1 == n_ ? x_max_ : x_max_ * static_cast<double>(i) / static_cast<double>(n_ - 1);
    }

    std::vector<double> points() const {
        std::vector<double> xs(n_);
        for (std::size_t i = 0; i < n_; ++i) xs[i] = (*this)[i];
        return xs;
    }

    /// Index of the largest grid point <= x (clamped to the grid).
    std::size_t floor_index(double x) const noexcept {
        if (x <= 0.0) return 0;
        if (x >= x_max_) return n_ - 1;
        auto i = static_cast<std::size_t>(x / spacing());
        if (i + 1 < n_ && (*this)[i + 1] <= x) ++i;
        if (i > 0 && (*this)[i] > x) --i;
        return i;
    }

    bool operator==(const Grid&) const = default;

private:
    double x_max_;
    std::size_t n_;
};

}  // namespace darboux
