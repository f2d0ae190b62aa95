#pragma once

#include <stdexcept>
#include <string>

namespace darboux {

/// Base of every error raised by the library. `name()` is the stable
/// identifier surfaced by the CLI (e.g. "NodalTransformationFunction").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define DARBOUX_DEFINE_ERROR(Type)                                           \
    class Type : public Error {                                              \
    public:                                                                  \
        explicit Type(const std::string& what) : Error(#Type, what) {}       \
    }

DARBOUX_DEFINE_ERROR(InvalidArgument);
DARBOUX_DEFINE_ERROR(AsymptoticRegionTooSmall);
DARBOUX_DEFINE_ERROR(IntegrationDiverged);
DARBOUX_DEFINE_ERROR(JostZeroOnRealAxis);
DARBOUX_DEFINE_ERROR(QuadratureNotConverged);
DARBOUX_DEFINE_ERROR(GridMismatch);
DARBOUX_DEFINE_ERROR(SpectralSingularityPoint);
DARBOUX_DEFINE_ERROR(WrongRegime);
DARBOUX_DEFINE_ERROR(PoleOnContour);
DARBOUX_DEFINE_ERROR(DegenerateJost);
DARBOUX_DEFINE_ERROR(AtSingularPoint);
DARBOUX_DEFINE_ERROR(OnBranchBoundary);
DARBOUX_DEFINE_ERROR(ConfigError);
DARBOUX_DEFINE_ERROR(IoError);

#undef DARBOUX_DEFINE_ERROR

/// The transformation function has a (numerical) node; carries the grid point.
class NodalTransformationFunction : public Error {
public:
    NodalTransformationFunction(const std::string& what, double x)
        : Error("NodalTransformationFunction", what), x_(x) {}

    double x() const noexcept { return x_; }

private:
    double x_;
};

}  // namespace darboux
