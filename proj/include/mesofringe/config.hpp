#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "mesofringe/doubleslit.hpp"
#include "mesofringe/emission.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/thermal.hpp"

namespace mesofringe::cli {

/// Bad preset, config file, flag value or parameter combination.
class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Resolved parameter record. Keys are SI with the unit in the name
/// (separation_m, mass_kg, ...); null marks "not set".
struct RunConfig {
    std::string preset;
    nlohmann::json params = nlohmann::json::object();
};

std::vector<std::string> preset_names();
nlohmann::json preset_parameters(const std::string& name);

/// Merges preset, then the JSON config file (which may name its own preset
/// under "preset"), then explicit overrides. Unknown keys are rejected and
/// every length, mass and time must be positive afterwards.
RunConfig resolve_config(const std::optional<std::string>& preset, const std::optional<std::string>& config_path,
                         const nlohmann::json& overrides);

double get_number(const RunConfig& config, const std::string& key);
std::optional<double> get_optional(const RunConfig& config, const std::string& key);
std::string get_string(const RunConfig& config, const std::string& key);

/// Experiment from the config. The transverse momentum spread is taken
/// from mom_spread_kg_m_per_s when set, otherwise solved from screen_spread_m.
Experiment experiment_from(const RunConfig& config);

/// Reservoir for the Weisskopf-Wigner command, in units of gamma_per_s.
FormFactor form_factor_from(const RunConfig& config);

/// Parses "value" with an optional length suffix (nm, um, mm, m).
double parse_length(const std::string& text);

/// Grid spec: "a:b:n" (n points, linear), "a:b:n:log" (geometric) or a comma
/// list "v1,v2,...". Values may carry a length suffix when lengths is true.
Eigen::VectorXd parse_grid(const std::string& spec, bool lengths = false);

}  // namespace mesofringe::cli
