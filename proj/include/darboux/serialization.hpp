#pragma once

#include <filesystem>

#include <json.hpp>

#include "darboux/potential.hpp"
#include "darboux/susy.hpp"

namespace darboux::io {

nlohmann::json to_json(const Potential& v0);
Potential potential_from_json(const nlohmann::json& j);

/// Grid, a, alpha, regime, potential and the sampled u, w, V.
nlohmann::json to_json(const SusySystem& system);
SusySystem system_from_json(const nlohmann::json& j);

void save_system(const SusySystem& system, const std::filesystem::path& path);
SusySystem load_system(const std::filesystem::path& path);

}  // namespace darboux::io
