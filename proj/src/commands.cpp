#include "mesofringe/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mesofringe/config.hpp"
#include "mesofringe/doubleslit.hpp"
#include "mesofringe/emission.hpp"
#include "mesofringe/errors.hpp"
#include "mesofringe/tabular.hpp"
#include "mesofringe/thermal.hpp"
#include "mesofringe/visibility.hpp"

namespace mesofringe::cli {

namespace {

using nlohmann::json;
using io::Column;
using io::ColumnKind;
using io::Table;

struct CommonOptions {
    std::string preset;
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::vector<std::string> sets;
};

struct GridOptions {
    std::optional<double> x_min;
    std::optional<double> x_max;
    long points = 2001;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--preset", o.preset, "vienna | presentation | presentation-wide (default vienna)");
    cmd->add_option("--config", o.config_path, "JSON parameter file (SI keys)");
    cmd->add_option("--out", o.out_path, "output file (default: standard output)");
    cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--set", o.sets, "override one parameter, key=value (repeatable)");
}

void add_grid(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--x-min", g.x_min, "left end of the screen grid, m (default -3 dx)");
    cmd->add_option("--x-max", g.x_max, "right end of the screen grid, m (default +3 dx)");
    cmd->add_option("--points", g.points, "number of grid points (default 2001)");
}

json parse_set_value(const std::string& text) {
    if (text == "null") return nullptr;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size()) return value;
    return text;
}

json collect_overrides(const CommonOptions& o) {
    json overrides = json::object();
    for (const auto& item : o.sets) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ConfigError("--set expects key=value, got '" + item + "'");
        overrides[item.substr(0, eq)] = parse_set_value(item.substr(eq + 1));
    }
    return overrides;
}

RunConfig resolve(const CommonOptions& o, json overrides) {
    std::optional<std::string> preset;
    std::optional<std::string> path;
    if (!o.preset.empty()) preset = o.preset;
    if (!o.config_path.empty()) path = o.config_path;
    return resolve_config(preset, path, overrides);
}

json base_meta(const std::string& command, const RunConfig& config) {
    json meta;
    meta["command"] = command;
    meta["preset"] = config.preset;
    meta["config"] = config.params;
    return meta;
}

void emit(const Table& table, const CommonOptions& o, std::ostream& out) {
    const io::Format format = io::parse_format(o.format);
    if (o.out_path.empty()) {
        io::write(table, format, out);
        return;
    }
    try {
        io::write_file_atomic(table, format, o.out_path);
    } catch (const std::filesystem::filesystem_error& e) {
        throw ConfigError(std::string("cannot write output: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw ConfigError(std::string("cannot write output: ") + e.what());
    }
}

Eigen::VectorXd screen_grid(const GridOptions& g, double spread) {
    if (g.points < 2) throw ConfigError("--points must be at least 2");
    const double lo = g.x_min.value_or(-3.0 * spread);
    const double hi = g.x_max.value_or(3.0 * spread);
    if (!(hi > lo)) throw ConfigError("screen grid needs x-max > x-min");
    return make_grid(lo, hi, static_cast<Eigen::Index>(g.points));
}

double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) { return (a - b).cwiseAbs().maxCoeff(); }

// ---- pattern --------------------------------------------------------------

struct PatternOptions {
    CommonOptions common;
    GridOptions grid;
    std::string mode = "farfield";
    bool compare = false;
};

int cmd_pattern(const PatternOptions& o, std::ostream& out, std::ostream& err) {
    const RunConfig config = resolve(o.common, collect_overrides(o.common));
    const Experiment e = experiment_from(config);
    const double period = fringe_period(e);
    const auto ratio = get_optional(config, "x_over_dx");
    const double spread = ratio ? period / *ratio : screen_spread(e);
    const bool need_exact = o.mode == "exact" || o.compare;
    if (need_exact && ratio) {
        throw ConfigError("exact pattern uses the physical spread; unset x_over_dx (--set x_over_dx=null)");
    }

    const Eigen::VectorXd grid = screen_grid(o.grid, spread);
    const auto farfield = [&](double x) { return far_field_intensity(x, period, spread); };
    const auto exact = [&](double x) { return exact_intensity(e, x); };

    json meta = base_meta("pattern", config);
    meta["mode"] = o.mode;
    meta["fringe_period_m"] = period;
    meta["screen_spread_m"] = spread;
    meta["flight_time_s"] = flight_time(e.geometry, e.beam);
    meta["mom_spread_kg_m_per_s"] = e.beam.mom_spread;

    Table table;
    table.columns.push_back({"x_m"});
    if (o.compare) {
        const Pattern pe = tabulate(exact, grid);
        const Pattern pf = tabulate(farfield, grid);
        const double peak = pf.intensity.maxCoeff();
        const double deviation = max_abs_diff(pe.intensity, pf.intensity) / peak;
        err << "pattern: max |exact - farfield| / farfield peak = " << deviation << '\n';
        meta["max_relative_deviation"] = deviation;
        table.columns.push_back({"exact_per_m"});
        table.columns.push_back({"farfield_per_m"});
        table.data.resize(grid.size(), 3);
        table.data << grid, pe.intensity, pf.intensity;
    } else {
        const Pattern p = o.mode == "exact" ? tabulate(exact, grid) : tabulate(farfield, grid);
        table.columns.push_back({"intensity_per_m"});
        table.data.resize(grid.size(), 2);
        table.data << grid, p.intensity;
    }
    table.meta = std::move(meta);
    emit(table, o.common, out);
    return kExitOk;
}

// ---- decohere -------------------------------------------------------------

struct DecohereOptions {
    CommonOptions common;
    GridOptions grid;
    std::string mode = "exact";
    std::string gamma_t0;
    std::optional<double> d_over_lambda;
    std::optional<double> x_over_dx;
    bool compare = false;
    bool report_visibility = false;
};

int cmd_decohere(const DecohereOptions& o, std::ostream& out, std::ostream& err) {
    json overrides = collect_overrides(o.common);
    if (o.d_over_lambda) overrides["d_over_lambda"] = *o.d_over_lambda;
    if (o.x_over_dx) overrides["x_over_dx"] = *o.x_over_dx;
    const RunConfig config = resolve(o.common, overrides);
    const Experiment e = experiment_from(config);
    const double dl = get_number(config, "d_over_lambda");
    const auto ratio = get_optional(config, "x_over_dx");

    Eigen::VectorXd gammas = o.gamma_t0.empty() ? Eigen::VectorXd::Constant(1, get_number(config, "gamma_t0"))
                                                : parse_grid(o.gamma_t0);
    if ((gammas.array() < 0.0).any()) throw ConfigError("gamma t0 values must be >= 0");

    const ScreenScales scales = screen_scales(make_scenario(e, dl, gammas[0], ratio));
    const Eigen::VectorXd grid = screen_grid(o.grid, scales.spread);
    const Eigen::Index n = grid.size();
    const double coherent_peak = far_field_intensity(0.0, scales.period, scales.spread);

    json meta = base_meta("decohere", config);
    meta["mode"] = o.mode;
    meta["gamma_t0"] = std::vector<double>(gammas.data(), gammas.data() + gammas.size());
    meta["fringe_period_m"] = scales.period;
    meta["screen_spread_m"] = scales.spread;
    meta["recoil_drift_m"] = scales.recoil_drift;
    json reports = json::array();

    const bool single = gammas.size() == 1;
    Table table;
    if (!single) table.columns.push_back({"gamma_t0"});
    table.columns.push_back({"x_m"});
    if (o.compare) {
        table.columns.push_back({"exact_per_m"});
        table.columns.push_back({"approx_per_m"});
    } else {
        table.columns.push_back({"intensity_per_m"});
    }
    const auto cols = static_cast<Eigen::Index>(table.columns.size());
    table.data.resize(n * gammas.size(), cols);

    for (Eigen::Index gi = 0; gi < gammas.size(); ++gi) {
        const DecoherenceScenario scen = make_scenario(e, dl, gammas[gi], ratio);
        const auto exact = [&](double x) { return decohered_intensity_exact(x, scen); };
        const auto approx = [&](double x) { return decohered_intensity_approx(x, scen); };
        json report;
        report["gamma_t0"] = gammas[gi];

        Eigen::VectorXd primary;
        if (o.compare) {
            const Pattern pe = tabulate(exact, grid);
            const Pattern pa = tabulate(approx, grid);
            const double deviation = max_abs_diff(pe.intensity, pa.intensity) / coherent_peak;
            err << "decohere: gamma_t0=" << gammas[gi]
                << " max |exact - approx| / coherent peak = " << deviation << '\n';
            report["max_deviation_over_peak"] = deviation;
            table.data.block(gi * n, cols - 2, n, 1) = pe.intensity;
            table.data.block(gi * n, cols - 1, n, 1) = pa.intensity;
            primary = pe.intensity;
        } else {
            const Pattern p = o.mode == "approx" ? tabulate(approx, grid) : tabulate(exact, grid);
            table.data.block(gi * n, cols - 1, n, 1) = p.intensity;
            primary = p.intensity;
        }
        if (!single) table.data.block(gi * n, 0, n, 1).setConstant(gammas[gi]);
        table.data.block(gi * n, single ? 0 : 1, n, 1) = grid;

        if (o.report_visibility) {
            Pattern p;
            p.x = grid;
            p.intensity = primary;
            const double extracted = extract_visibility(p, scales.period);
            const double closed = visibility_closed(gammas[gi], dl);
            err << "decohere: gamma_t0=" << gammas[gi] << " extracted visibility = " << extracted
                << " (closed form |V| = " << std::abs(closed) << ")\n";
            report["extracted_visibility"] = extracted;
            report["closed_form_visibility"] = closed;
        }
        reports.push_back(std::move(report));
    }
    meta["reports"] = std::move(reports);
    table.meta = std::move(meta);
    emit(table, o.common, out);
    return kExitOk;
}

// ---- visibility -----------------------------------------------------------

struct VisibilityOptions {
    CommonOptions common;
    std::string gamma_grid = "0:5:51";
    std::string dl_grid = "0:3:301";
    std::string slice;
    bool anomalies = false;
};

int cmd_visibility(const VisibilityOptions& o, std::ostream& out, std::ostream& err) {
    const RunConfig config = resolve(o.common, collect_overrides(o.common));
    Eigen::VectorXd gammas = parse_grid(o.gamma_grid);
    Eigen::VectorXd dls = parse_grid(o.dl_grid);
    if (!o.slice.empty()) {
        const auto eq = o.slice.find('=');
        if (eq == std::string::npos) throw ConfigError("--slice expects gamma_t0=value or d_over_lambda=value");
        const std::string key = o.slice.substr(0, eq);
        const Eigen::VectorXd values = parse_grid(o.slice.substr(eq + 1));
        if (key == "gamma_t0") {
            gammas = values;
        } else if (key == "d_over_lambda") {
            dls = values;
        } else {
            throw ConfigError("--slice key must be gamma_t0 or d_over_lambda");
        }
    }

    const Eigen::MatrixXd surface = visibility_surface(gammas, dls);
    Table table;
    table.columns = {{"gamma_t0"}, {"d_over_lambda"}, {"visibility"}};
    table.data.resize(gammas.size() * dls.size(), 3);
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < gammas.size(); ++i) {
        for (Eigen::Index j = 0; j < dls.size(); ++j, ++row) {
            table.data(row, 0) = gammas[i];
            table.data(row, 1) = dls[j];
            table.data(row, 2) = surface(i, j);
        }
    }

    json meta = base_meta("visibility", config);
    meta["rows"] = "gamma_t0 major, d_over_lambda minor";
    if (o.anomalies) {
        json found = json::array();
        for (Eigen::Index i = 0; i < gammas.size(); ++i) {
            json entry;
            entry["gamma_t0"] = gammas[i];
            json maxima = json::array();
            for (const auto idx : visibility_local_maxima(gammas[i], dls)) maxima.push_back(dls[idx]);
            json intervals = json::array();
            for (const auto& iv : anomalous_intervals(gammas[i], dls)) intervals.push_back({iv.begin, iv.end});
            err << "visibility: gamma_t0=" << gammas[i] << " local maxima of |V| at d/lambda = " << maxima.dump()
                << "; |V| rising on " << intervals.dump() << '\n';
            entry["local_maxima_d_over_lambda"] = std::move(maxima);
            entry["rising_intervals"] = std::move(intervals);
            found.push_back(std::move(entry));
        }
        meta["anomalies"] = std::move(found);
    }
    table.meta = std::move(meta);
    emit(table, o.common, out);
    return kExitOk;
}

// ---- ww -------------------------------------------------------------------

struct WwOptions {
    CommonOptions common;
    std::optional<std::string> kernel;
    std::optional<double> bandwidth_over_gamma;
    std::optional<double> gamma;
    std::optional<double> t_max_over_gamma;
    std::optional<double> detuning_over_gamma;
    long steps = 0;
    double halving_tol = 1e-6;
    bool overlay = false;
};

int cmd_ww(const WwOptions& o, std::ostream& out, std::ostream& err) {
    json overrides = collect_overrides(o.common);
    if (o.kernel) overrides["kernel"] = *o.kernel;
    if (o.bandwidth_over_gamma) overrides["bandwidth_over_gamma"] = *o.bandwidth_over_gamma;
    if (o.gamma) overrides["gamma_per_s"] = *o.gamma;
    if (o.t_max_over_gamma) overrides["t_max_over_gamma"] = *o.t_max_over_gamma;
    if (o.detuning_over_gamma) overrides["detuning_over_gamma"] = *o.detuning_over_gamma;
    const RunConfig config = resolve(o.common, overrides);

    const FormFactor ff = form_factor_from(config);
    const double t_max = get_number(config, "t_max_over_gamma") / get_number(config, "gamma_per_s");
    if (o.steps < 0) throw ConfigError("--steps must be positive");
    const std::size_t steps = o.steps > 0 ? static_cast<std::size_t>(o.steps) : suggested_volterra_steps(ff, t_max);
    if (!(o.halving_tol > 0.0)) throw ConfigError("--halving-tol must be positive");

    const DecayAmplitudeSeries volterra = solve_nonmarkov(ff, t_max, steps, VolterraOptions{o.halving_tol});
    err << "ww: volterra steps=" << steps << " step-halving discrepancy=" << volterra.convergence
        << " tolerance=" << o.halving_tol << '\n';

    json meta = base_meta("ww", config);
    meta["steps"] = steps;
    meta["halving_tol"] = o.halving_tol;
    meta["convergence"] = volterra.convergence;

    const Eigen::Index n = volterra.times.size();
    Table table;
    table.columns = {{"t_s"}, {"re_alpha"}, {"im_alpha"}, {"abs_alpha"}};
    if (o.overlay) {
        const double gamma = golden_rule_rate(ff);
        const double lamb = lamb_shift(ff);
        const DecayAmplitudeSeries markov = markov_series(gamma, lamb, t_max, steps);
        const double gap = (volterra.alpha - markov.alpha).cwiseAbs().maxCoeff();
        err << "ww: max |alpha_volterra - alpha_markov| = " << gap << " (gamma=" << gamma << " 1/s, lamb shift="
            << lamb << " rad/s)\n";
        meta["markov_gamma_per_s"] = gamma;
        meta["markov_lamb_shift_rad_per_s"] = lamb;
        meta["max_markov_gap"] = gap;
        table.columns.insert(table.columns.end(), {{"re_markov"}, {"im_markov"}, {"abs_markov"}});
        table.data.resize(n, 7);
        table.data << volterra.times, volterra.alpha.real(), volterra.alpha.imag(), volterra.alpha.cwiseAbs(),
            markov.alpha.real(), markov.alpha.imag(), markov.alpha.cwiseAbs();
    } else {
        table.data.resize(n, 4);
        table.data << volterra.times, volterra.alpha.real(), volterra.alpha.imag(), volterra.alpha.cwiseAbs();
    }
    table.meta = std::move(meta);
    emit(table, o.common, out);
    return kExitOk;
}

// ---- thermal --------------------------------------------------------------

struct ThermalOptions {
    CommonOptions common;
    std::string sweep_d;
    std::optional<double> temperature;
};

int cmd_thermal(const ThermalOptions& o, std::ostream& out, std::ostream& err) {
    json overrides = collect_overrides(o.common);
    if (o.temperature) overrides["temperature_K"] = *o.temperature;
    const RunConfig config = resolve(o.common, overrides);
    const double area = get_number(config, "emitting_area_m2");
    const double emissivity = get_number(config, "emissivity");
    json meta = base_meta("thermal", config);
    Table table;

    if (!o.sweep_d.empty()) {
        std::string spec = o.sweep_d;
        // a:b:n sweeps are geometric; the law is a power law in d.
        if (std::count(spec.begin(), spec.end(), ':') == 2) spec += ":log";
        const Eigen::VectorXd ds = parse_grid(spec, true);
        const double t0 = get_number(config, "sweep_flight_time_s");
        const auto rows = tdec_vs_separation_sweep(ds, area, t0, emissivity);
        table.columns = {{"d_m"}, {"T_dec_K"}, {"above_fragmentation", ColumnKind::flag}};
        table.data.resize(static_cast<Eigen::Index>(rows.size()), 3);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto r = static_cast<Eigen::Index>(i);
            table.data(r, 0) = rows[i].separation;
            table.data(r, 1) = rows[i].temperature;
            table.data(r, 2) = rows[i].above_fragmentation ? 1.0 : 0.0;
        }
        meta["mode"] = "sweep";
        meta["flight_time_s"] = t0;
    } else {
        const double t0 = get_number(config, "thermal_flight_time_s");
        const double d = get_number(config, "separation_m");
        const double temperature = get_number(config, "temperature_K");
        table.columns = {{"emissivity"},        {"d_m"},      {"T_dec_K"},
                         {"above_fragmentation", ColumnKind::flag},
                         {"temperature_K"},     {"delta_E_J"}, {"n_photons"},
                         {"delta_p_kg_m_per_s"}, {"coherent", ColumnKind::flag}};
        const double emissivities[] = {1.0, emissivity};
        table.data.resize(2, 9);
        for (Eigen::Index r = 0; r < 2; ++r) {
            const double e = emissivities[r];
            const double tdec = decoherence_temperature(area, t0, d, e);
            const RecoilBudget budget = emitted_budget(ThermalSource{temperature, area, e, t0});
            const ThermalCoherence verdict = coherence_ok(budget.delta_p, d);
            table.data.row(r) << e, d, tdec, tdec > kFragmentationTemperature ? 1.0 : 0.0, temperature,
                budget.delta_E, budget.n_photons, budget.delta_p, verdict.coherent ? 1.0 : 0.0;
            err << "thermal: emissivity=" << e << " T_dec=" << tdec << " K; at T=" << temperature
                << " K n_photons=" << budget.n_photons << '\n';
        }
        meta["mode"] = "report";
        meta["flight_time_s"] = t0;
    }
    table.meta = std::move(meta);
    emit(table, o.common, out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mesofringe: double-slit fringes of hot, photon-emitting molecules", "mesofringe"};
    app.require_subcommand(1, 1);

    PatternOptions pattern;
    auto* pattern_cmd = app.add_subcommand("pattern", "coherent interference pattern at the screen");
    add_common(pattern_cmd, pattern.common);
    add_grid(pattern_cmd, pattern.grid);
    pattern_cmd->add_option("--mode", pattern.mode, "exact | farfield")->check(CLI::IsMember({"exact", "farfield"}));
    pattern_cmd->add_flag("--compare", pattern.compare, "write both modes and report their max deviation");

    DecohereOptions decohere;
    auto* decohere_cmd = app.add_subcommand("decohere", "pattern after possible emission of one photon");
    add_common(decohere_cmd, decohere.common);
    add_grid(decohere_cmd, decohere.grid);
    decohere_cmd->add_option("--mode", decohere.mode, "exact | approx")->check(CLI::IsMember({"exact", "approx"}));
    decohere_cmd->add_option("--gamma-t0", decohere.gamma_t0, "value, list v1,v2,... or a:b:n");
    decohere_cmd->add_option("--d-over-lambda", decohere.d_over_lambda, "slit separation over emitted wavelength");
    decohere_cmd->add_option("--x-over-dx", decohere.x_over_dx, "fringe period over envelope width");
    decohere_cmd->add_flag("--compare", decohere.compare, "write exact and approximate patterns side by side");
    decohere_cmd->add_flag("--report-visibility", decohere.report_visibility,
                           "report visibility extracted from the pattern");

    VisibilityOptions visibility;
    auto* visibility_cmd = app.add_subcommand("visibility", "visibility surface V(gamma t0, d/lambda)");
    add_common(visibility_cmd, visibility.common);
    visibility_cmd->add_option("--gamma-grid", visibility.gamma_grid, "a:b:n or list (default 0:5:51)");
    visibility_cmd->add_option("--dl-grid", visibility.dl_grid, "a:b:n or list (default 0:3:301)");
    visibility_cmd->add_option("--slice", visibility.slice, "gamma_t0=values or d_over_lambda=values");
    visibility_cmd->add_flag("--anomalies", visibility.anomalies, "report local maxima of |V| along d/lambda");

    WwOptions ww;
    auto* ww_cmd = app.add_subcommand("ww", "excited-state amplitude, memory kernel vs Markov limit");
    add_common(ww_cmd, ww.common);
    ww_cmd->add_option("--kernel", ww.kernel, "lorentzian | flat | none")
        ->check(CLI::IsMember({"lorentzian", "flat", "none"}));
    ww_cmd->add_option("--bandwidth-over-gamma", ww.bandwidth_over_gamma, "reservoir half-width over gamma");
    ww_cmd->add_option("--gamma", ww.gamma, "golden-rule rate, 1/s");
    ww_cmd->add_option("--t-max-over-gamma", ww.t_max_over_gamma, "end time in units of 1/gamma");
    ww_cmd->add_option("--detuning-over-gamma", ww.detuning_over_gamma, "line centre offset over gamma");
    ww_cmd->add_option("--steps", ww.steps, "coarse time steps (default from bandwidth)");
    ww_cmd->add_option("--halving-tol", ww.halving_tol, "step-halving tolerance (default 1e-6)");
    ww_cmd->add_flag("--overlay", ww.overlay, "add Markov columns and report the gap");

    ThermalOptions thermal;
    auto* thermal_cmd = app.add_subcommand("thermal", "decoherence temperatures from thermal emission");
    add_common(thermal_cmd, thermal.common);
    thermal_cmd->add_option("--sweep-d", thermal.sweep_d, "separation sweep a:b:n (geometric) or list, e.g. 50nm:5um:100");
    thermal_cmd->add_option("--temperature", thermal.temperature, "internal temperature for the report, K");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (pattern_cmd->parsed()) return cmd_pattern(pattern, out, err);
        if (decohere_cmd->parsed()) return cmd_decohere(decohere, out, err);
        if (visibility_cmd->parsed()) return cmd_visibility(visibility, out, err);
        if (ww_cmd->parsed()) return cmd_ww(ww, out, err);
        return cmd_thermal(thermal, out, err);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const IntegrationError& e) {
        err << "error: " << e.what() << " (best estimate " << e.best_estimate() << ", error bound "
            << e.error_bound() << ")\n";
        return kExitNumerical;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResolutionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mesofringe::cli
