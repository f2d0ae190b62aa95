#include "darboux/finite_difference.hpp"

#include "darboux/errors.hpp"

namespace darboux::fd {

namespace {

void check_order(int order, std::size_t n) {
    if (order != 4 && order != 6) throw InvalidArgument("finite-difference order must be 4 or 6");
    if (n < 7) throw InvalidArgument("finite differences need at least seven points");
}

}  // namespace

std::vector<cplx> first_derivative(std::span<const cplx> f, double h, int order) {
    const std::size_t n = f.size();
    check_order(order, n);
    std::vector<cplx> d(n);
    const double s = 1.0 / (12.0 * h);
    d[0] = s * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = s * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t i = 2; i + 2 < n; ++i) d[i] = s * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    const std::size_t m = n - 1;
    d[m] = -s * (-25.0 * f[m] + 48.0 * f[m - 1] - 36.0 * f[m - 2] + 16.0 * f[m - 3] - 3.0 * f[m - 4]);
    d[m - 1] = -s * (-3.0 * f[m] - 10.0 * f[m - 1] + 18.0 * f[m - 2] - 6.0 * f[m - 3] + f[m - 4]);
    if (order == 6) {
        const double s6 = 1.0 / (60.0 * h);
        for (std::size_t i = 3; i + 3 < n; ++i)
            d[i] = s6 * (-f[i - 3] + 9.0 * f[i - 2] - 45.0 * f[i - 1] + 45.0 * f[i + 1] - 9.0 * f[i + 2] + f[i + 3]);
    }
    return d;
}

std::vector<cplx> second_derivative(std::span<const cplx> f, double h, int order) {
    const std::size_t n = f.size();
    check_order(order, n);
    std::vector<cplx> d(n);
    const double s = 1.0 / (12.0 * h * h);
    d[0] = s * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]);
    d[1] = s * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = s * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
    const std::size_t m = n - 1;
    d[m] = s * (45.0 * f[m] - 154.0 * f[m - 1] + 214.0 * f[m - 2] - 156.0 * f[m - 3] + 61.0 * f[m - 4] -
                10.0 * f[m - 5]);
    d[m - 1] = s * (10.0 * f[m] - 15.0 * f[m - 1] - 4.0 * f[m - 2] + 14.0 * f[m - 3] - 6.0 * f[m - 4] +
                    f[m - 5]);
    if (order == 6) {
        const double s6 = 1.0 / (180.0 * h * h);
        for (std::size_t i = 3; i + 3 < n; ++i)
            d[i] = s6 * (2.0 * f[i - 3] - 27.0 * f[i - 2] + 270.0 * f[i - 1] - 490.0 * f[i] + 270.0 * f[i + 1] -
                         27.0 * f[i + 2] + 2.0 * f[i + 3]);
    }
    return d;
}

}  // namespace darboux::fd
