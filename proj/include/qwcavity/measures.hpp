#ifndef QWCAVITY_MEASURES_HPP
#define QWCAVITY_MEASURES_HPP

// Entanglement and phase-space uncertainty measures of a manifold state.
// All entropies are in nats.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "hermitian_eigen.hpp"
#include "phase_space.hpp"
#include "quadrature.hpp"

namespace qwcavity {

enum class Mode { photon, exciton };

/// Single-mode reduced density matrix in the number basis 0..3.
struct ReducedDensity {
    HermitianMatrix<4> matrix{};

    double trace() const noexcept {
        double t = 0.0;
        for (std::size_t k = 0; k < 4; ++k) t += matrix[k][k].real();
        return t;
    }

    /// Tr rho^2.
    double purity_raw() const noexcept {
        double s = 0.0;
        for (const auto& row : matrix)
            for (const auto& x : row) s += std::norm(x);
        return s;
    }

    /// (Tr rho)^2 - Tr rho^2, summed over principal 2x2 minors so that
    /// nearly pure states do not lose it to cancellation.
    double linear_entropy_raw() const noexcept {
        double s = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                s += matrix[i][i].real() * matrix[j][j].real() - std::norm(matrix[i][j]);
        return 2.0 * s;
    }

    /// Purity of the trace-normalized matrix.
    double purity() const noexcept {
        const double t = trace();
        return 1.0 - linear_entropy_raw() / (t * t);
    }
};

/// 4x4 amplitude matrix a[photon][exciton]; entries outside the manifold are 0.
inline std::array<std::array<complex, 4>, 4> amplitude_matrix(const StateVector& s) {
    std::array<std::array<complex, 4>, 4> a{};
    for (std::size_t k = 0; k < basis_size; ++k) {
        const BasisIndex b = canonical_basis[k];
        a[static_cast<std::size_t>(b.photon)][static_cast<std::size_t>(b.exciton)] = s[k];
    }
    return a;
}

inline ReducedDensity reduce(const StateVector& s, Mode mode) {
    const auto a = amplitude_matrix(s);
    ReducedDensity rho;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t ip = 0; ip < 4; ++ip) {
            complex sum{};
            for (std::size_t j = 0; j < 4; ++j) {
                sum += mode == Mode::photon ? a[i][j] * std::conj(a[ip][j]) : a[j][i] * std::conj(a[j][ip]);
            }
            rho.matrix[i][ip] = sum;
        }
    return rho;
}

/// Photon number distribution p(0..3).
inline std::array<double, 4> photon_distribution(const StateVector& s) {
    const auto rho = reduce(s, Mode::photon);
    return {rho.matrix[0][0].real(), rho.matrix[1][1].real(), rho.matrix[2][2].real(), rho.matrix[3][3].real()};
}

namespace detail {
inline constexpr double q_floor = 1e-300;

inline double neg_x_log_x(double x) { return x < q_floor ? 0.0 : -x * std::log(x); }
} // namespace detail

/// Phase density of the Wehrl entropy: the radial integral of -Q ln Q at each
/// angular node.
inline std::vector<std::pair<double, double>> wehrl_pd(const StateVector& s, const QuadratureGrid& grid) {
    const auto& rad = grid.radial_nodes();
    std::vector<double> density(grid.angles().size(), 0.0);
    for_each_q(s, grid, [&](std::size_t ai, std::size_t ri, double q) {
        density[ai] += rad[ri].w * detail::neg_x_log_x(q);
    });
    std::vector<std::pair<double, double>> out;
    out.reserve(density.size());
    for (std::size_t ai = 0; ai < density.size(); ++ai) out.emplace_back(grid.angles()[ai], density[ai]);
    return out;
}

inline double wehrl_entropy(const StateVector& s, const QuadratureGrid& grid) {
    double total = 0.0;
    for (const auto& [theta, density] : wehrl_pd(s, grid)) total += density;
    return total * grid.angular_weight();
}

/// Sum of |a_ik a_jl - a_il a_jk|^2 over all 2x2 minors of the amplitude matrix.
inline double minor_sum(const StateVector& s) {
    const auto a = amplitude_matrix(s);
    double sum = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                for (std::size_t l = k + 1; l < 4; ++l) sum += std::norm(a[i][k] * a[j][l] - a[i][l] * a[j][k]);
    return sum;
}

/// Generalized pure-state concurrence with N = 4, prefactor sqrt(8/3).
inline double concurrence(const StateVector& s) { return std::sqrt(8.0 / 3.0 * minor_sum(s)); }

inline constexpr double eigenvalue_clip_tol = 1e-12;
inline constexpr double eigenvalue_fail_tol = 1e-9;

inline double von_neumann_entropy(const ReducedDensity& rho) {
    const auto ev = hermitian_eigenvalues<4>(rho.matrix);
    double s = 0.0;
    for (double lambda : ev) {
        if (lambda < -eigenvalue_fail_tol) {
            throw NumericError("reduced density eigenvalue " + std::to_string(lambda) + " is negative");
        }
        lambda = std::clamp(lambda, 0.0, 1.0);
        s += detail::neg_x_log_x(lambda);
    }
    return s;
}

inline double shannon_entropy(const StateVector& s) {
    double h = 0.0;
    for (double p : photon_distribution(s)) h += detail::neg_x_log_x(p);
    return h;
}

struct MeasureSample {
    double t = 0.0;
    double raw_norm = 1.0;
    double wehrl = 0.0;       ///< S_W
    double concurrence = 0.0; ///< C
    double von_neumann = 0.0; ///< S_vN of rho_ph
    double shannon = 0.0;     ///< S_H
    double purity = 1.0;      ///< Tr rho_ph^2
    std::array<double, 4> photon_probabilities{};
};

using MeasureSeries = std::vector<MeasureSample>;

inline MeasureSample measure_state(double t, double raw_norm, const StateVector& s, const QuadratureGrid& grid) {
    const auto rho = reduce(s, Mode::photon);
    MeasureSample m;
    m.t = t;
    m.raw_norm = raw_norm;
    m.wehrl = wehrl_entropy(s, grid);
    m.concurrence = concurrence(s);
    m.von_neumann = von_neumann_entropy(rho);
    m.shannon = shannon_entropy(s);
    m.purity = rho.purity();
    for (std::size_t n = 0; n < 4; ++n) m.photon_probabilities[n] = rho.matrix[n][n].real();
    return m;
}

inline MeasureSeries measure_trajectory(const Trajectory& traj, const QuadratureGrid& grid) {
    MeasureSeries out;
    out.reserve(traj.size());
    for (const auto& sample : traj) out.push_back(measure_state(sample.t, sample.raw_norm, sample.state, grid));
    return out;
}

} // namespace qwcavity

#endif
