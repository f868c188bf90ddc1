#include "mesofringe/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace mesofringe::cli {

namespace {

using nlohmann::json;

// Vienna C60 experiment. The measured flight time 9.47 ms fixes
// the effective longitudinal speed (L / t0 = 128.83 m/s; nominal 128 m/s).
constexpr double kViennaScreenDistance = 1.22;
constexpr double kViennaFlightTime = 9.47e-3;

json base_parameters() {
    return json{
        {"slit_width_m", 50e-9},
        {"separation_m", 100e-9},
        {"screen_distance_m", kViennaScreenDistance},
        {"mass_kg", 1.197e-24},
        {"speed_m_per_s", kViennaScreenDistance / kViennaFlightTime},
        {"mom_spread_kg_m_per_s", nullptr},
        {"screen_spread_m", 33.7e-6},
        {"eta0", 0.0},
        {"d_over_lambda", 2.0},
        {"gamma_t0", 1.0},
        {"x_over_dx", nullptr},
        {"emitting_area_m2", 1.539e-18},
        {"emissivity", kFullereneEmissivity},
        {"temperature_K", 2000.0},
        {"thermal_flight_time_s", kViennaFlightTime},
        {"sweep_flight_time_s", 9.53e-3},
        {"kernel", "lorentzian"},
        {"gamma_per_s", 1.0e8},
        {"bandwidth_over_gamma", 100.0},
        {"detuning_over_gamma", 0.0},
        {"t_max_over_gamma", 5.0},
    };
}

const std::vector<std::string> kPositiveKeys = {
    "slit_width_m",     "separation_m",   "screen_distance_m",     "mass_kg",
    "speed_m_per_s",    "emitting_area_m2", "thermal_flight_time_s", "sweep_flight_time_s",
    "gamma_per_s",      "bandwidth_over_gamma", "t_max_over_gamma",
};

void merge_into(json& target, const json& source, const std::string& origin) {
    if (!source.is_object()) throw ConfigError(origin + ": expected a JSON object");
    for (const auto& [key, value] : source.items()) {
        if (key == "preset") continue;
        if (!target.contains(key)) throw ConfigError(origin + ": unknown parameter '" + key + "'");
        const json& current = target[key];
        const bool numeric_slot = current.is_number() || current.is_null();
        if (!value.is_null() && numeric_slot && !value.is_number()) {
            throw ConfigError(origin + ": parameter '" + key + "' must be a number");
        }
        if (current.is_string() && !value.is_string()) {
            throw ConfigError(origin + ": parameter '" + key + "' must be a string");
        }
        target[key] = value;
    }
}

void check_resolved(const json& params) {
    for (const auto& key : kPositiveKeys) {
        const json& v = params.at(key);
        if (!v.is_number() || !(v.get<double>() > 0.0) || !std::isfinite(v.get<double>())) {
            throw ConfigError("parameter '" + key + "' must be a positive number");
        }
    }
    const bool have_mom = params.at("mom_spread_kg_m_per_s").is_number();
    const bool have_spread = params.at("screen_spread_m").is_number();
    if (!have_mom && !have_spread) {
        throw ConfigError("set either mom_spread_kg_m_per_s or screen_spread_m");
    }
    for (const char* key : {"mom_spread_kg_m_per_s", "screen_spread_m", "x_over_dx"}) {
        const json& v = params.at(key);
        if (v.is_number() && !(v.get<double>() > 0.0)) {
            throw ConfigError(std::string("parameter '") + key + "' must be positive");
        }
    }
    if (!(params.at("d_over_lambda").get<double>() > 0.0)) throw ConfigError("d_over_lambda must be positive");
    if (!(params.at("gamma_t0").get<double>() >= 0.0)) throw ConfigError("gamma_t0 must be >= 0");
    const double e = params.at("emissivity").get<double>();
    if (!(e > 0.0 && e <= 1.0)) throw ConfigError("emissivity must lie in (0, 1]");
    if (!(params.at("temperature_K").get<double>() >= 0.0)) throw ConfigError("temperature_K must be >= 0");
    const std::string kernel = params.at("kernel").get<std::string>();
    if (kernel != "lorentzian" && kernel != "flat" && kernel != "none") {
        throw ConfigError("kernel must be lorentzian, flat or none");
    }
}

double parse_double(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) throw ConfigError("not a number: '" + text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

}  // namespace

std::vector<std::string> preset_names() { return {"vienna", "presentation", "presentation-wide"}; }

json preset_parameters(const std::string& name) {
    json params = base_parameters();
    if (name == "vienna") return params;
    if (name == "presentation") {
        params["x_over_dx"] = 0.4;
        return params;
    }
    if (name == "presentation-wide") {
        params["x_over_dx"] = 1.56;
        return params;
    }
    throw ConfigError("unknown preset '" + name + "' (expected vienna, presentation or presentation-wide)");
}

RunConfig resolve_config(const std::optional<std::string>& preset, const std::optional<std::string>& config_path,
                         const json& overrides) {
    json file_doc;
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) throw ConfigError("cannot read config file '" + *config_path + "'");
        try {
            file_doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError("config file '" + *config_path + "': " + e.what());
        }
        if (!file_doc.is_object()) throw ConfigError("config file must hold a JSON object");
    }

    RunConfig config;
    config.preset = preset.value_or("vienna");
    if (!preset && file_doc.contains("preset")) {
        if (!file_doc["preset"].is_string()) throw ConfigError("config 'preset' must be a string");
        config.preset = file_doc["preset"].get<std::string>();
    }
    config.params = preset_parameters(config.preset);
    if (config_path) merge_into(config.params, file_doc, "config file");
    merge_into(config.params, overrides, "override");
    check_resolved(config.params);
    return config;
}

double get_number(const RunConfig& config, const std::string& key) {
    const json& v = config.params.at(key);
    if (!v.is_number()) throw ConfigError("parameter '" + key + "' is not set");
    return v.get<double>();
}

std::optional<double> get_optional(const RunConfig& config, const std::string& key) {
    const json& v = config.params.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<double>();
}

std::string get_string(const RunConfig& config, const std::string& key) {
    return config.params.at(key).get<std::string>();
}

Experiment experiment_from(const RunConfig& config) {
    Experiment e;
    e.geometry.slit_width = get_number(config, "slit_width_m");
    e.geometry.separation = get_number(config, "separation_m");
    e.geometry.screen_distance = get_number(config, "screen_distance_m");
    e.beam.mass = get_number(config, "mass_kg");
    e.beam.speed = get_number(config, "speed_m_per_s");
    e.eta0 = get_number(config, "eta0");
    if (auto dp = get_optional(config, "mom_spread_kg_m_per_s")) {
        e.beam.mom_spread = *dp;
    } else {
        const double t0 = e.geometry.screen_distance / e.beam.speed;
        e.beam.mom_spread =
            mom_spread_for_screen_spread(e.beam.mass, t0, get_number(config, "screen_spread_m"), e.eta0);
    }
    validate(e);
    return e;
}

FormFactor form_factor_from(const RunConfig& config) {
    const double gamma = get_number(config, "gamma_per_s");
    FormFactor ff;
    const std::string kernel = get_string(config, "kernel");
    ff.kind = kernel == "flat" ? FormFactorKind::flat : FormFactorKind::lorentzian;
    ff.bandwidth = get_number(config, "bandwidth_over_gamma") * gamma;
    ff.detuning = get_number(config, "detuning_over_gamma") * gamma;
    // Peak chosen so that Gamma(omega0) = gamma.
    const double offset = ff.detuning;
    if (kernel == "none") {
        ff.peak = 0.0;
    } else if (ff.kind == FormFactorKind::flat) {
        if (std::abs(offset) >= ff.bandwidth) throw ConfigError("flat kernel: omega0 lies outside the band");
        ff.peak = gamma;
    } else {
        ff.peak = gamma * (offset * offset + ff.bandwidth * ff.bandwidth) / (ff.bandwidth * ff.bandwidth);
    }
    validate(ff);
    return ff;
}

double parse_length(const std::string& text) {
    struct Suffix {
        const char* name;
        double scale;
    };
    static const Suffix suffixes[] = {{"nm", 1e-9}, {"um", 1e-6}, {"\xC2\xB5m", 1e-6}, {"mm", 1e-3}, {"m", 1.0}};
    for (const auto& s : suffixes) {
        const std::string suffix = s.name;
        if (text.size() > suffix.size() && text.ends_with(suffix)) {
            return parse_double(text.substr(0, text.size() - suffix.size())) * s.scale;
        }
    }
    return parse_double(text);
}

Eigen::VectorXd parse_grid(const std::string& spec, bool lengths) {
    const auto value_of = [lengths](const std::string& t) { return lengths ? parse_length(t) : parse_double(t); };
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3 && parts.size() != 4) throw ConfigError("grid spec must be a:b:n[:log]");
        const double a = value_of(parts[0]);
        const double b = value_of(parts[1]);
        const double n_real = parse_double(parts[2]);
        if (!(n_real >= 1.0) || n_real != std::floor(n_real)) {
            throw ConfigError("grid spec: point count must be a positive integer");
        }
        const auto n = static_cast<Eigen::Index>(n_real);
        if (n > 1 && !(b > a)) throw ConfigError("grid spec: need b > a");
        if (n == 1) return Eigen::VectorXd::Constant(1, a);
        if (parts.size() == 4) {
            if (parts[3] != "log") throw ConfigError("grid spec: fourth field must be 'log'");
            if (!(a > 0.0)) throw ConfigError("log grid needs a positive start");
            const Eigen::VectorXd exponents = Eigen::VectorXd::LinSpaced(n, std::log(a), std::log(b));
            Eigen::VectorXd out = exponents.array().exp();
            out[0] = a;
            out[n - 1] = b;
            return out;
        }
        return Eigen::VectorXd::LinSpaced(n, a, b);
    }
    const auto parts = split(spec, ',');
    if (parts.empty() || spec.empty()) throw ConfigError("empty grid spec");
    Eigen::VectorXd out(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) out[static_cast<Eigen::Index>(i)] = value_of(parts[i]);
    return out;
}

}  // namespace mesofringe::cli
