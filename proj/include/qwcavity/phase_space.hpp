#ifndef QWCAVITY_PHASE_SPACE_HPP
#define QWCAVITY_PHASE_SPACE_HPP

// Photon-mode Husimi Q-function of a manifold state.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "basis.hpp"
#include "quadrature.hpp"

namespace qwcavity {

namespace detail {
inline constexpr std::array<double, 4> inv_sqrt_factorial{1.0, 1.0, 0.70710678118654752440, 0.40824829046386301637};
}

/// <n|beta> = exp(-|beta|^2/2) beta^n / sqrt(n!).
inline complex coherent_amplitude(int n, complex beta) {
    if (n < 0 || n > max_excitations) throw DomainError("photon number " + std::to_string(n) + " outside [0,3]");
    complex power{1.0, 0.0};
    for (int k = 0; k < n; ++k) power *= beta;
    return std::exp(-std::norm(beta) / 2.0) * detail::inv_sqrt_factorial[static_cast<std::size_t>(n)] * power;
}

/// Q from the conjugated coherent amplitudes conj(<n|beta>), n = 0..3.
inline double husimi_from_overlaps(const StateVector& s, const std::array<complex, 4>& cb) {
    double q = 0.0;
    for (int j = 0; j <= max_excitations; ++j) {
        complex group{};
        for (int i = 0; i + j <= max_excitations; ++i) group += cb[static_cast<std::size_t>(i)] * s.at({i, j});
        q += std::norm(group);
    }
    return q / std::numbers::pi;
}

/// (1/pi) |<beta|psi>|^2 with the exciton traced out: one squared group per
/// exciton number.
inline double husimi_q(const StateVector& s, complex beta) {
    std::array<complex, 4> cb;
    for (int n = 0; n <= max_excitations; ++n) cb[static_cast<std::size_t>(n)] = std::conj(coherent_amplitude(n, beta));
    return husimi_from_overlaps(s, cb);
}

/// Evaluates Q at every grid node in angle-major order, calling
/// visit(angle_index, radial_index, q).
template <typename Visit>
void for_each_q(const StateVector& s, const QuadratureGrid& grid, Visit&& visit) {
    const auto& rad = grid.radial_nodes();
    const auto& ang = grid.angles();
    // radial factor exp(-r^2/2) r^n / sqrt(n!) per node
    std::vector<std::array<double, 4>> radial(rad.size());
    for (std::size_t ri = 0; ri < rad.size(); ++ri) {
        const double r = rad[ri].x;
        const double env = std::exp(-r * r / 2.0);
        double rn = 1.0;
        for (std::size_t n = 0; n < 4; ++n) {
            radial[ri][n] = env * rn * detail::inv_sqrt_factorial[n];
            rn *= r;
        }
    }
    for (std::size_t ai = 0; ai < ang.size(); ++ai) {
        std::array<complex, 4> phase;
        for (std::size_t n = 0; n < 4; ++n) phase[n] = std::polar(1.0, -static_cast<double>(n) * ang[ai]);
        for (std::size_t ri = 0; ri < rad.size(); ++ri) {
            std::array<complex, 4> cb;
            for (std::size_t n = 0; n < 4; ++n) cb[n] = radial[ri][n] * phase[n];
            visit(ai, ri, husimi_from_overlaps(s, cb));
        }
    }
}

/// Integral of Q over the plane; 1 for normalized states, quadratic in the amplitude scale.
inline double q_norm(const StateVector& s, const QuadratureGrid& grid) {
    const auto& rad = grid.radial_nodes();
    double total = 0.0;
    for_each_q(s, grid, [&](std::size_t, std::size_t ri, double q) { total += rad[ri].w * q; });
    return total * grid.angular_weight();
}

} // namespace qwcavity

#endif
