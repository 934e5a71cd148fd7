#ifndef QWCAVITY_EVENTS_HPP
#define QWCAVITY_EVENTS_HPP

// Entanglement sudden death / sudden birth detection and oscillation counting.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "errors.hpp"
#include "measures.hpp"

namespace qwcavity {

inline constexpr double default_esd_threshold = 1e-3;

struct EsdInterval {
    double t_death = 0.0;
    std::optional<double> t_birth; ///< empty if the series ends below threshold

    std::optional<double> duration() const {
        if (!t_birth) return std::nullopt;
        return *t_birth - t_death;
    }
};

namespace detail {
/// Time where the linear interpolant between two samples crosses `level`.
inline double crossing(double t0, double v0, double t1, double v1, double level) {
    if (v0 == v1) return t0;
    return t0 + (v0 - level) / (v0 - v1) * (t1 - t0);
}
} // namespace detail

/// Intervals where `values` stays below `threshold` after having been at or
/// above it. A run that starts below threshold at the first sample is not a
/// death (nothing was entangled yet) and is skipped. Runs shorter than
/// `min_duration` are dropped; an open trailing run is kept if it already
/// spans min_duration.
inline std::vector<EsdInterval> detect_esd(std::span<const double> t, std::span<const double> values, double threshold,
                                           double min_duration) {
    if (t.size() != values.size()) throw InputError("time and value series differ in length");
    if (t.size() < 2) throw InputError("ESD detection needs at least two samples");
    if (!(threshold > 0.0)) throw InputError("ESD threshold must be positive");
    if (!(min_duration >= 0.0)) throw InputError("ESD minimum duration must be non-negative");

    std::vector<EsdInterval> out;
    std::size_t k = 0;
    while (k < t.size() && values[k] < threshold) ++k; // leading pre-entanglement run
    bool dead = false;
    double death = 0.0;
    for (; k + 1 < t.size(); ++k) {
        const bool below_now = values[k] < threshold;
        const bool below_next = values[k + 1] < threshold;
        if (!below_now && below_next) {
            death = detail::crossing(t[k], values[k], t[k + 1], values[k + 1], threshold);
            dead = true;
        } else if (below_now && !below_next && dead) {
            const double birth = detail::crossing(t[k], values[k], t[k + 1], values[k + 1], threshold);
            if (birth - death >= min_duration && birth > death) out.push_back({death, birth});
            dead = false;
        }
    }
    if (dead && t.back() - death >= min_duration) out.push_back({death, std::nullopt});
    return out;
}

inline double sample_spacing(const MeasureSeries& series) {
    if (series.size() < 2) throw InputError("ESD detection needs at least two samples");
    return series[1].t - series[0].t;
}

/// Concurrence-based detection with the default minimum duration of two
/// sample spacings when `min_duration` is not given.
inline std::vector<EsdInterval> detect_esd(const MeasureSeries& series, double threshold = default_esd_threshold,
                                           std::optional<double> min_duration = std::nullopt) {
    const double spacing = sample_spacing(series);
    std::vector<double> t, c;
    t.reserve(series.size());
    c.reserve(series.size());
    for (const auto& m : series) {
        t.push_back(m.t);
        c.push_back(m.concurrence);
    }
    return detect_esd(t, c, threshold, min_duration.value_or(2.0 * spacing));
}

struct DurationPoint {
    double parameter = 0.0;
    double duration = 0.0;
};

/// First-interval duration per swept value, ascending in the value.
struct DurationTrend {
    std::vector<DurationPoint> points;

    bool strictly_decreasing() const {
        for (std::size_t k = 1; k < points.size(); ++k)
            if (!(points[k].duration < points[k - 1].duration)) return false;
        return true;
    }
};

/// Summarizes the first closed ESD interval for each parameter value. Values
/// whose first interval never closes, or that have none, are an input error
/// because no duration exists for them.
inline DurationTrend esd_duration_trend(const std::map<double, std::vector<EsdInterval>>& by_value) {
    if (by_value.size() < 2) throw InputError("duration trend needs at least two parameter values");
    DurationTrend trend;
    for (const auto& [value, intervals] : by_value) {
        if (intervals.empty() || !intervals.front().duration()) {
            throw InputError("no closed ESD interval for parameter value " + std::to_string(value));
        }
        trend.points.push_back({value, *intervals.front().duration()});
    }
    return trend;
}

inline constexpr double min_peak_prominence = 1e-6;

/// Strict local maxima whose topographic prominence is at least
/// `min_prominence`.
inline int oscillation_count(std::span<const double> v, double min_prominence = min_peak_prominence) {
    if (v.size() < 3) throw InputError("oscillation count needs at least three samples");
    int count = 0;
    const std::size_t n = v.size();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
        double left_min = v[i];
        for (std::size_t j = i; j-- > 0;) {
            if (v[j] > v[i]) break;
            left_min = std::min(left_min, v[j]);
        }
        double right_min = v[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (v[j] > v[i]) break;
            right_min = std::min(right_min, v[j]);
        }
        if (v[i] - std::max(left_min, right_min) >= min_prominence) ++count;
    }
    return count;
}

enum class SeriesField { wehrl, concurrence };

inline std::vector<double> extract(const MeasureSeries& series, SeriesField field) {
    std::vector<double> v;
    v.reserve(series.size());
    for (const auto& m : series) v.push_back(field == SeriesField::wehrl ? m.wehrl : m.concurrence);
    return v;
}

inline int oscillation_count(const MeasureSeries& series, SeriesField field) {
    const auto v = extract(series, field);
    return oscillation_count(std::span<const double>(v));
}

} // namespace qwcavity

#endif
