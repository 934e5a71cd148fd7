// Command-line front end: simulate, sweep, wpd, plot.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwcavity.hpp"

namespace {

using namespace qwcavity;

/// Flags named after config keys; only flags actually given override the file.
struct ConfigFlags {
    std::optional<std::string> config_path;
    std::map<std::string, std::string> values;

    void attach(CLI::App* app, bool with_threshold = true) {
        app->add_option("--config", config_path, "key=value configuration file");
        for (const auto& key : known_config_keys()) {
            if (key == "threshold" && !with_threshold) continue;
            app->add_option_function<std::string>("--" + key, [this, key](const std::string& v) { values[key] = v; },
                                                  "override config key " + key);
        }
    }

    KeyValues load() const {
        KeyValues kv;
        if (config_path) kv = parse_key_values(read_file(*config_path));
        for (const auto& [k, v] : values) kv[k] = v;
        return kv;
    }
};

std::vector<double> parse_list(const std::string& text, const std::string& key) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) {
        const auto v = parse_number(trim(item));
        if (!v) throw ConfigError(key, "cannot parse '" + item + "' as a number");
        out.push_back(*v);
    }
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"Pumped quantum-well microcavity: amplitude dynamics and entanglement measures"};
    app.require_subcommand(1);

    ConfigFlags sim_flags, sweep_flags, wpd_flags;

    auto* sim = app.add_subcommand("simulate", "integrate one parameter point and write measures.csv / esd.csv");
    sim_flags.attach(sim);

    auto* sweep = app.add_subcommand("sweep", "run one simulation per value of a swept parameter");
    sweep_flags.attach(sweep);
    std::string sweep_param, sweep_values;
    unsigned jobs = default_jobs();
    sweep->add_option("--param", sweep_param, "parameter to sweep (g, epsilon, alpha, kappa, gamma)")->required();
    sweep->add_option("--values", sweep_values, "comma-separated ascending values")->required();
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* wpd = app.add_subcommand("wpd", "write the Wehrl phase density S_theta at selected times");
    wpd_flags.attach(wpd);
    std::string wpd_times;
    wpd->add_option("--times", wpd_times, "comma-separated times in [0, t_max]")->required();

    auto* plot = app.add_subcommand("plot", "render csv columns as an SVG line chart");
    std::string plot_csv, plot_columns, plot_out;
    plot->add_option("--csv", plot_csv, "input csv")->required();
    plot->add_option("--columns", plot_columns, "comma-separated column names")->required();
    plot->add_option("--out", plot_out, "output svg path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::config);
    }

    try {
        if (*sim) {
            const RunConfig cfg = build_run_config(sim_flags.load());
            const auto r = run_simulate(cfg);
            std::cout << "wrote " << r.series.size() << " samples, " << r.intervals.size() << " ESD interval(s) to "
                      << cfg.out_dir << "\n";
        } else if (*sweep) {
            const SweepSpec spec = make_sweep(sweep_flags.load(), sweep_param, parse_list(sweep_values, "values"));
            const auto rows = run_sweep(spec, jobs);
            std::cout << "wrote " << rows.size() << " runs and summary.csv to " << spec.base.out_dir << "\n";
        } else if (*wpd) {
            const RunConfig cfg = build_run_config(wpd_flags.load());
            const auto snaps = run_wpd(cfg, parse_list(wpd_times, "times"));
            std::cout << "wrote " << snaps.size() << " time slice(s) to " << cfg.out_dir << "/wpd.csv\n";
        } else if (*plot) {
            std::vector<std::string> cols;
            for (const auto& c : split(plot_columns, ','))
                if (!trim(c).empty()) cols.emplace_back(trim(c));
            render_plot(plot_csv, cols, plot_out);
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::config);
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::numeric);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::io);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input);
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::input);
    }
    return static_cast<int>(ExitCode::ok);
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
