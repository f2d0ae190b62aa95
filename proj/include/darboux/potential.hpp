#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace darboux {

enum class PotentialKind { zero, square_well, user_table };

std::string to_string(PotentialKind kind);

/// Real half-line potential v0(x).
///
/// Pieces between breakpoints are left-closed: at a breakpoint the value of
/// the piece to its right is returned. `support_end()` is the point beyond
/// which v0 vanishes identically, `decay_radius()` the point beyond which
/// |v0| < tol_asym.
class Potential {
public:
    static Potential zero();
    /// v0 = -depth on [0, width), zero beyond. Attractive for depth > 0.
    static Potential square_well(double depth, double width);
    /// Linear interpolation of (x, v) samples; constant before the first node,
    /// zero from the last node on.
    static Potential from_table(std::vector<double> xs, std::vector<double> vs,
                                double tol_asym = 1e-12);
    /// Two-column whitespace-separated text file (x, v0(x)); '#' starts a comment.
    static Potential load_table(const std::filesystem::path& path, double tol_asym = 1e-12);

    double operator()(double x) const;

    /// Value of the piece [lo, hi) evaluated at x, clamped inside that piece.
    double value_on_piece(double x, double lo, double hi) const;

    PotentialKind kind() const noexcept { return kind_; }
    double decay_radius() const noexcept { return decay_radius_; }
    double support_end() const noexcept { return support_end_; }
    std::span<const double> breakpoints() const noexcept { return breakpoints_; }

    double depth() const noexcept { return depth_; }
    double width() const noexcept { return width_; }
    const std::vector<double>& table_x() const noexcept { return table_x_; }
    const std::vector<double>& table_v() const noexcept { return table_v_; }

private:
    Potential() = default;

    PotentialKind kind_ = PotentialKind::zero;
    double depth_ = 0.0;
    double width_ = 0.0;
    std::vector<double> table_x_;
    std::vector<double> table_v_;
    std::vector<double> breakpoints_;
    double decay_radius_ = 0.0;
    double support_end_ = 0.0;
};

}  // namespace darboux
