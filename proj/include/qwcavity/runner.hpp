#ifndef QWCAVITY_RUNNER_HPP
#define QWCAVITY_RUNNER_HPP

// Drives dynamics + measures for single runs, parameter sweeps and Wehrl
// phase-density dumps, writing csv/svg artifacts.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "config.hpp"
#include "csv.hpp"
#include "dynamics.hpp"
#include "events.hpp"
#include "measures.hpp"
#include "svg.hpp"

namespace qwcavity {

inline const std::vector<std::string> measures_header{"t", "raw_norm", "S_W", "C", "S_vN", "S_H", "purity",
                                                      "p0", "p1", "p2", "p3"};
inline const std::vector<std::string> esd_header{"t_death", "t_birth", "duration"};
inline const std::vector<std::string> wpd_header{"t", "theta", "S_theta"};
inline const std::vector<std::string> summary_header{"value", "mean_S_W", "peak_C", "oscillation_count",
                                                     "first_esd_duration"};

inline std::string measures_csv(const MeasureSeries& series) {
    CsvWriter w(measures_header);
    for (const auto& m : series) {
        const auto& p = m.photon_probabilities;
        w.numbers({m.t, m.raw_norm, m.wehrl, m.concurrence, m.von_neumann, m.shannon, m.purity, p[0], p[1], p[2], p[3]});
    }
    return w.str();
}

inline std::string esd_csv(const std::vector<EsdInterval>& intervals) {
    CsvWriter w(esd_header);
    for (const auto& iv : intervals) {
        w.row({format_number(iv.t_death), iv.t_birth ? format_number(*iv.t_birth) : "",
               iv.duration() ? format_number(*iv.duration()) : ""});
    }
    return w.str();
}

namespace detail {
inline void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw IoError("failed writing " + path.string());
}

inline void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}
} // namespace detail

/// Trapezoidal time average over the sampled span.
inline double time_average(const MeasureSeries& series, SeriesField field) {
    const auto v = extract(series, field);
    if (v.size() < 2) return v.empty() ? 0.0 : v.front();
    double area = 0.0;
    for (std::size_t k = 1; k < v.size(); ++k) area += 0.5 * (v[k] + v[k - 1]) * (series[k].t - series[k - 1].t);
    return area / (series.back().t - series.front().t);
}

struct SimulationResult {
    Trajectory trajectory;
    MeasureSeries series;
    std::vector<EsdInterval> intervals;
};

/// Computes everything in memory without touching the filesystem.
inline SimulationResult simulate(const RunConfig& cfg) {
    SimulationResult r;
    r.trajectory = integrate(cfg.params, cfg.integrator);
    r.series = measure_trajectory(r.trajectory, QuadratureGrid(cfg.grid));
    r.intervals = detect_esd(r.series, cfg.threshold);
    return r;
}

inline SimulationResult run_simulate(const RunConfig& cfg) {
    SimulationResult r = simulate(cfg);
    const std::filesystem::path dir(cfg.out_dir);
    detail::ensure_directory(dir);
    if (cfg.outputs.contains("measures") || cfg.outputs.contains("plot"))
        detail::write_text(dir / "measures.csv", measures_csv(r.series));
    if (cfg.outputs.contains("esd")) detail::write_text(dir / "esd.csv", esd_csv(r.intervals));
    if (cfg.outputs.contains("plot")) render_plot(dir / "measures.csv", {"S_W", "C"}, dir / "measures.svg");
    return r;
}

struct SweepRow {
    double value = 0.0;
    double mean_wehrl = 0.0;
    double peak_concurrence = 0.0;
    int wehrl_oscillations = 0;
    std::optional<double> first_esd_duration;
};

inline SweepRow summarize(double value, const SimulationResult& r) {
    SweepRow row;
    row.value = value;
    row.mean_wehrl = time_average(r.series, SeriesField::wehrl);
    for (const auto& m : r.series) row.peak_concurrence = std::max(row.peak_concurrence, m.concurrence);
    row.wehrl_oscillations = oscillation_count(r.series, SeriesField::wehrl);
    for (const auto& iv : r.intervals) {
        if (iv.duration()) {
            row.first_esd_duration = iv.duration();
            break;
        }
    }
    return row;
}

inline std::string sweep_directory_name(const std::string& parameter, double value) {
    return parameter + "=" + format_number(value);
}

inline std::string summary_csv(const std::vector<SweepRow>& rows) {
    CsvWriter w(summary_header);
    for (const auto& r : rows) {
        w.row({format_number(r.value), format_number(r.mean_wehrl), format_number(r.peak_concurrence),
               std::to_string(r.wehrl_oscillations), r.first_esd_duration ? format_number(*r.first_esd_duration) : ""});
    }
    return w.str();
}

inline unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

/// One run per swept value on a bounded worker pool. Each worker writes only
/// its own `<param>=<value>/` directory; summary.csv is written afterwards in
/// value order.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned jobs = default_jobs()) {
    const std::filesystem::path root(spec.base.out_dir);
    detail::ensure_directory(root);
    const std::size_t n = spec.values.size();
    std::vector<SweepRow> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) {
            try {
                RunConfig cfg = spec.base;
                set_parameter(cfg.params, spec.parameter, spec.values[k]);
                cfg.out_dir = (root / sweep_directory_name(spec.parameter, spec.values[k])).string();
                rows[k] = summarize(spec.values[k], run_simulate(cfg));
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
        for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    detail::write_text(root / "summary.csv", summary_csv(rows));
    return rows;
}

struct WpdSnapshot {
    double t = 0.0;
    StateVector state;
    std::vector<std::pair<double, double>> density; ///< (theta, S_theta)
};

/// States at arbitrary times: full dt steps, then one partial step for the
/// remainder, renormalizing after every step.
inline std::vector<std::pair<double, StateVector>> states_at(const ModelParams& p, double dt,
                                                             std::vector<double> times) {
    std::sort(times.begin(), times.end());
    const GeneratorMatrix m = build_generator(p);
    std::vector<std::pair<double, StateVector>> out;
    StateVector state = vacuum_state();
    long done = 0;
    for (double t : times) {
        const long full = static_cast<long>(std::floor(t / dt + 1e-9));
        for (; done < full; ++done) state = step_rk4(m, state, dt).first;
        StateVector at = state;
        const double rest = t - static_cast<double>(full) * dt;
        if (rest > 1e-12 * dt) at = step_rk4(m, state, rest).first;
        out.emplace_back(t, at);
    }
    return out;
}

inline std::vector<WpdSnapshot> wehrl_pd_at(const RunConfig& cfg, const std::vector<double>& times) {
    if (times.empty()) throw InputError("wpd needs at least one time");
    for (double t : times) {
        if (!(t >= 0.0 && t <= cfg.integrator.t_max))
            throw InputError("wpd time " + format_number(t) + " outside [0, t_max]");
    }
    validate(cfg.params);
    validate(cfg.integrator);
    const QuadratureGrid grid(cfg.grid);
    std::vector<WpdSnapshot> out;
    for (auto& [t, state] : states_at(cfg.params, cfg.integrator.dt, times))
        out.push_back({t, state, wehrl_pd(state, grid)});
    return out;
}

inline std::string wpd_csv(const std::vector<WpdSnapshot>& snaps) {
    CsvWriter w(wpd_header);
    for (const auto& s : snaps)
        for (const auto& [theta, density] : s.density) w.numbers({s.t, theta, density});
    return w.str();
}

inline std::vector<WpdSnapshot> run_wpd(const RunConfig& cfg, const std::vector<double>& times) {
    auto snaps = wehrl_pd_at(cfg, times);
    const std::filesystem::path dir(cfg.out_dir);
    detail::ensure_directory(dir);
    detail::write_text(dir / "wpd.csv", wpd_csv(snaps));
    return snaps;
}

} // namespace qwcavity

#endif
