#ifndef QWCAVITY_QUADRATURE_HPP
#define QWCAVITY_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qwcavity {

struct QuadratureNode {
    double x = 0.0;
    double w = 0.0;
};

namespace detail {

/// P_n(x) and P_n'(x) from the three-term recurrence.
inline std::pair<double, double> legendre_with_derivative(std::size_t n, double x) {
    double prev = 1.0, cur = x;
    for (std::size_t j = 2; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        const double next = ((2.0 * jd - 1.0) * x * cur - (jd - 1.0) * prev) / jd;
        prev = cur;
        cur = next;
    }
    const double nd = static_cast<double>(n);
    return {cur, nd * (x * cur - prev) / (x * x - 1.0)};
}

} // namespace detail

/// Gauss-Legendre nodes and weights on [-1, 1], ascending in x.
/// Newton iteration from Tricomi's initial guess.
inline std::vector<QuadratureNode> gauss_legendre(std::size_t n) {
    if (n == 0) throw DomainError("Gauss-Legendre rule needs at least one node");
    std::vector<QuadratureNode> nodes(n);
    const double nd = static_cast<double>(n);
    for (std::size_t k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.75) / (nd + 0.5)) *
                   (1.0 - 1.0 / (8.0 * nd * nd) + 1.0 / (8.0 * nd * nd * nd));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = detail::legendre_with_derivative(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        if (2 * k + 1 == n) x = 0.0;
        const double dp = detail::legendre_with_derivative(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[k] = {-x, w};
        nodes[n - 1 - k] = {x, w};
    }
    return nodes;
}

struct GridSpec {
    double r_max = 8.0;
    std::size_t radial_nodes = 200;
    std::size_t angular_nodes = 256;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline constexpr double min_r_max = 6.0;

inline void validate(const GridSpec& s) {
    if (!std::isfinite(s.r_max) || s.r_max < min_r_max)
        throw ConfigError("r_max", "must be finite and at least " + std::to_string(min_r_max));
    if (s.radial_nodes < 1) throw ConfigError("radial_nodes", "must be at least 1");
    if (s.angular_nodes < 1) throw ConfigError("angular_nodes", "must be at least 1");
}

/// Polar grid for integrals against |beta| d|beta| dTheta. The radial weights
/// already include the |beta| Jacobian; angular nodes are uniform with
/// weight 2 pi / N.
class QuadratureGrid {
public:
    explicit QuadratureGrid(const GridSpec& spec = {}) : spec_(spec) {
        validate(spec_);
        const double half = spec_.r_max / 2.0;
        for (const auto& node : gauss_legendre(spec_.radial_nodes)) {
            const double r = half * (node.x + 1.0);
            radial_.push_back({r, half * node.w * r});
        }
        const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(spec_.angular_nodes);
        angular_weight_ = dtheta;
        for (std::size_t k = 0; k < spec_.angular_nodes; ++k) angular_.push_back(dtheta * static_cast<double>(k));
    }

    const GridSpec& spec() const noexcept { return spec_; }
    double r_max() const noexcept { return spec_.r_max; }
    const std::vector<QuadratureNode>& radial_nodes() const noexcept { return radial_; }
    const std::vector<double>& angles() const noexcept { return angular_; }
    double angular_weight() const noexcept { return angular_weight_; }

private:
    GridSpec spec_;
    std::vector<QuadratureNode> radial_;
    std::vector<double> angular_;
    double angular_weight_ = 0.0;
};

} // namespace qwcavity

#endif
