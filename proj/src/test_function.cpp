#include "darboux/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

namespace {

std::string describe(const char* family, double c, double s) {
    std::ostringstream os;
    os << family << '(' << c << ',' << s << ')';
    return os.str();
}

}  // namespace

TestFunction TestFunction::gaussian(double center, double width) {
    if (!(width > 0.0)) throw InvalidArgument("gaussian width must be positive");
    TestFunction t;
    t.f_ = [center, width](double y) {
        const double s = (y - center) / width;
        return std::exp(-s * s);
    };
    t.family_ = TestFamily::gaussian;
    t.center_ = center;
    t.scale_ = width;
    const double reach = width * std::sqrt(-std::log(kTestTailTol));
    t.lower_ = std::max(0.0, center - reach);
    t.upper_ = std::max(0.0, center + reach);
    t.label_ = describe("gaussian", center, width);
    return t;
}

TestFunction TestFunction::compact_bump(double center, double radius) {
    if (!(radius > 0.0)) throw InvalidArgument("bump radius must be positive");
    TestFunction t;
    t.f_ = [center, radius](double y) {
        const double s = (y - center) / radius;
        if (std::abs(s) >= 1.0) return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - s * s));
    };
    t.family_ = TestFamily::compact_bump;
    t.center_ = center;
    t.scale_ = radius;
    t.lower_ = std::max(0.0, center - radius);
    t.upper_ = std::max(0.0, center + radius);
    t.label_ = describe("compact_bump", center, radius);
    return t;
}

TestFunction TestFunction::custom(std::function<double(double)> f, double lower, double upper,
                                  std::string label) {
    if (!(upper >= lower) || lower < 0.0) throw InvalidArgument("custom test function bounds are invalid");
    TestFunction t;
    t.f_ = std::move(f);
    t.lower_ = lower;
    t.upper_ = upper;
    t.label_ = std::move(label);
    return t;
}

TestFunction TestFunction::zero() {
    return custom([](double) { return 0.0; }, 0.0, 0.0, "zero");
}

}  // namespace darboux
