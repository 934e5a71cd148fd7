#ifndef QWCAVITY_CONFIG_HPP
#define QWCAVITY_CONFIG_HPP

// key=value run configuration. Lines are `key = value`; '#' starts a
// comment; blank lines are ignored.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "basis.hpp"
#include "csv.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "events.hpp"
#include "quadrature.hpp"

namespace qwcavity {

using KeyValues = std::map<std::string, std::string>;

inline const std::vector<std::string>& known_config_keys() {
    static const std::vector<std::string> keys{
        "g",      "epsilon",      "alpha",       "kappa",         "gamma",   "dt",      "t_max",
        "sample_stride", "r_max", "radial_nodes", "angular_nodes", "outputs", "out_dir", "threshold",
    };
    return keys;
}

inline const std::vector<std::string>& param_keys() {
    static const std::vector<std::string> keys{"g", "epsilon", "alpha", "kappa", "gamma"};
    return keys;
}

/// Artifacts `simulate` may write: measures.csv, esd.csv, measures.svg.
inline const std::set<std::string>& known_outputs() {
    static const std::set<std::string> outs{"measures", "esd", "plot"};
    return outs;
}

struct RunConfig {
    ModelParams params;
    IntegratorConfig integrator;
    GridSpec grid;
    std::set<std::string> outputs{"measures", "esd"};
    std::string out_dir = ".";
    double threshold = default_esd_threshold;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline KeyValues parse_key_values(std::string_view text) {
    KeyValues kv;
    for (const auto& raw : split(text, '\n')) {
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(std::string(line), "expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError("", "empty key");
        if (!kv.emplace(key, value).second) throw ConfigError(key, "given more than once");
    }
    return kv;
}

namespace detail {

inline double number_value(const KeyValues& kv, const std::string& key) {
    const auto v = parse_number(kv.at(key));
    if (!v) throw ConfigError(key, "cannot parse '" + kv.at(key) + "' as a number");
    return *v;
}

inline long integer_value(const KeyValues& kv, const std::string& key) {
    const double v = number_value(kv, key);
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e15) throw ConfigError(key, "must be an integer");
    return static_cast<long>(v);
}

} // namespace detail

/// Validates and converts a key/value map. The five model rates are
/// required; everything else has a default.
inline RunConfig build_run_config(const KeyValues& kv) {
    for (const auto& [key, value] : kv) {
        if (std::find(known_config_keys().begin(), known_config_keys().end(), key) == known_config_keys().end())
            throw ConfigError(key, "unknown key");
    }
    RunConfig cfg;
    double* params[] = {&cfg.params.g, &cfg.params.epsilon, &cfg.params.alpha, &cfg.params.kappa, &cfg.params.gamma};
    for (std::size_t k = 0; k < param_keys().size(); ++k) {
        const auto& key = param_keys()[k];
        if (!kv.contains(key)) throw ConfigError(key, "model parameter is required");
        *params[k] = detail::number_value(kv, key);
    }
    validate(cfg.params);

    if (kv.contains("dt")) cfg.integrator.dt = detail::number_value(kv, "dt");
    if (kv.contains("t_max")) cfg.integrator.t_max = detail::number_value(kv, "t_max");
    if (kv.contains("sample_stride")) cfg.integrator.sample_stride = detail::integer_value(kv, "sample_stride");
    validate(cfg.integrator);

    if (kv.contains("r_max")) cfg.grid.r_max = detail::number_value(kv, "r_max");
    for (const char* key : {"radial_nodes", "angular_nodes"}) {
        if (!kv.contains(key)) continue;
        const long n = detail::integer_value(kv, key);
        if (n < 1) throw ConfigError(key, "must be at least 1");
        (std::string_view(key) == "radial_nodes" ? cfg.grid.radial_nodes : cfg.grid.angular_nodes) =
            static_cast<std::size_t>(n);
    }
    validate(cfg.grid);

    if (kv.contains("outputs")) {
        cfg.outputs.clear();
        for (const auto& item : split(kv.at("outputs"), ',')) {
            const std::string name(trim(item));
            if (name.empty()) continue;
            if (!known_outputs().contains(name)) throw ConfigError("outputs", "unknown output '" + name + "'");
            cfg.outputs.insert(name);
        }
    }
    if (kv.contains("out_dir")) {
        cfg.out_dir = kv.at("out_dir");
        if (cfg.out_dir.empty()) throw ConfigError("out_dir", "must not be empty");
    }
    if (kv.contains("threshold")) {
        cfg.threshold = detail::number_value(kv, "threshold");
        if (!(cfg.threshold > 0.0) || !std::isfinite(cfg.threshold))
            throw ConfigError("threshold", "must be a positive finite number");
    }
    return cfg;
}

/// Parses a config document; entries in `overrides` (command line flags)
/// replace file values.
inline RunConfig parse_config(std::string_view text, const KeyValues& overrides = {}) {
    KeyValues kv = parse_key_values(text);
    for (const auto& [k, v] : overrides) kv[k] = v;
    return build_run_config(kv);
}

inline KeyValues to_key_values(const RunConfig& cfg) {
    KeyValues kv;
    kv["g"] = format_number(cfg.params.g);
    kv["epsilon"] = format_number(cfg.params.epsilon);
    kv["alpha"] = format_number(cfg.params.alpha);
    kv["kappa"] = format_number(cfg.params.kappa);
    kv["gamma"] = format_number(cfg.params.gamma);
    kv["dt"] = format_number(cfg.integrator.dt);
    kv["t_max"] = format_number(cfg.integrator.t_max);
    kv["sample_stride"] = std::to_string(cfg.integrator.sample_stride);
    kv["r_max"] = format_number(cfg.grid.r_max);
    kv["radial_nodes"] = std::to_string(cfg.grid.radial_nodes);
    kv["angular_nodes"] = std::to_string(cfg.grid.angular_nodes);
    std::string outs;
    for (const auto& o : cfg.outputs) outs += (outs.empty() ? "" : ",") + o;
    kv["outputs"] = outs;
    kv["out_dir"] = cfg.out_dir;
    kv["threshold"] = format_number(cfg.threshold);
    return kv;
}

inline std::string serialize(const RunConfig& cfg) {
    std::string out;
    for (const auto& key : known_config_keys()) out += key + " = " + to_key_values(cfg).at(key) + "\n";
    return out;
}

struct SweepSpec {
    std::string parameter;
    std::vector<double> values;
    RunConfig base;
};

inline void set_parameter(ModelParams& p, std::string_view name, double v) {
    if (name == "g") p.g = v;
    else if (name == "epsilon") p.epsilon = v;
    else if (name == "alpha") p.alpha = v;
    else if (name == "kappa") p.kappa = v;
    else if (name == "gamma") p.gamma = v;
    else throw ConfigError(std::string(name), "not a sweepable parameter");
}

/// The swept key may be omitted from `base`; it is filled per value.
inline SweepSpec make_sweep(KeyValues base, const std::string& parameter, std::vector<double> values) {
    if (std::find(param_keys().begin(), param_keys().end(), parameter) == param_keys().end())
        throw ConfigError("param", "'" + parameter + "' is not one of g, epsilon, alpha, kappa, gamma");
    if (values.empty()) throw ConfigError("values", "sweep needs at least one value");
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k])) throw ConfigError("values", "values must be finite");
        if (k > 0 && !(values[k] > values[k - 1])) throw ConfigError("values", "values must be strictly ascending");
    }
    base[parameter] = format_number(values.front());
    SweepSpec spec{parameter, std::move(values), build_run_config(base)};
    for (double v : spec.values) {
        ModelParams p = spec.base.params;
        set_parameter(p, parameter, v);
        try {
            validate(p);
        } catch (const ConfigError& e) {
            throw ConfigError("values", e.what());
        }
    }
    return spec;
}

} // namespace qwcavity

#endif
