#pragma once

#include <span>
#include <string>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/susy.hpp"

namespace darboux {

/// Jost solution of H at real k != 0: L f(k, .) rescaled so that it tends to e^{ikx}.
WaveSample transformed_jost(const SusySystem& system, double k);

/// phi_H'(0) + w(0) phi_H(0) for the unit-amplitude Jost solution of H.
/// Vanishes exactly at a spectral singularity.
cplx boundary_functional(const SusySystem& system, double k);

enum class Verdict { singularity, near_singularity, clear };

std::string to_string(Verdict verdict);

struct ScanOptions {
    double near_tol = 1e-2;  // minima below this (but above zero_tol) are near singularities
};

struct ScanMinimum {
    double k;          // vertex of the 5-point quadratic fit of |functional|^2
    double modulus;    // |functional(k)|
    double curvature;  // second derivative of the fitted |functional|^2
    cplx value;
    Verdict verdict;
};

struct SingularityScan {
    std::vector<double> k_samples;
    std::vector<cplx> boundary_functional_values;
    std::vector<bool> valid;  // false at k = 0 and where the Jost solution of H degenerates
    std::vector<ScanMinimum> minima;

    Verdict verdict_at(std::size_t i, const Tolerances& tol, const ScanOptions& opt = {}) const;
};

Verdict classify(double modulus, const Tolerances& tol, const ScanOptions& opt = {});

SingularityScan scan_singularities(const SusySystem& system, double k_lo, double k_hi, std::size_t n_samples,
                                   const ScanOptions& opt = {});

struct PathEntry {
    double d;
    double min_modulus;  // smallest boundary-functional modulus over the scan window
    double k_at_min;
    double prefactor;    // |b^2 - alpha|
};

struct PathReport {
    double b;
    std::vector<PathEntry> entries;
    bool monotone;  // both columns strictly decrease along the sequence
};

PathReport path_to_singularity(const Potential& v0, double b, std::span<const double> d_sequence, const Grid& grid,
                               const Tolerances& tol = {}, std::size_t n_samples = 801, const ScanOptions& opt = {});

}  // namespace darboux
