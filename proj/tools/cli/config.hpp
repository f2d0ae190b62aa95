#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "darboux/common.hpp"
#include "darboux/distributional.hpp"
#include "darboux/grid.hpp"
#include "darboux/pairing.hpp"
#include "darboux/potential.hpp"
#include "darboux/singularity.hpp"
#include "darboux/test_function.hpp"

namespace darboux::cli {

struct PotentialSpec {
    PotentialKind kind = PotentialKind::zero;
    double depth = 0.0;
    double width = 0.0;
    std::filesystem::path table;
};

struct TestSpec {
    TestFamily family = TestFamily::gaussian;
    double center = 0.0;
    double scale = 1.0;
};

/// Everything a subcommand needs. Sections of the YAML document map onto the
/// groups below; see README.md for the key list.
struct RunConfig {
    std::string source;  // file name used in diagnostics
    PotentialSpec potential;
    std::optional<cplx> a;
    Grid grid;
    Tolerances tolerances;

    cplx jost_k{1.0, 0.0};
    std::vector<double> transform_k;

    RegularizationParams regularization;
    PairingOptions pairing;
    std::vector<TestSpec> battery;  // empty: library default battery

    std::vector<double> identity_x;  // empty: library default probe points
    int identity_halvings = 1;
    double identity_tol = 5e-3;

    std::vector<double> binorm_k;
    double binorm_width = 1.0;

    double scan_k_min = -5.0;
    double scan_k_max = 5.0;
    std::size_t scan_samples = 1001;
    ScanOptions scan;

    std::filesystem::path out_dir = "out";
};

RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

Potential make_potential(const RunConfig& config);
cplx require_a(const RunConfig& config);
std::vector<TestFunction> make_battery(const RunConfig& config);
std::vector<double> probe_points(const RunConfig& config);

}  // namespace darboux::cli
