#ifndef QWCAVITY_DYNAMICS_HPP
#define QWCAVITY_DYNAMICS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "basis.hpp"

namespace qwcavity {

/// Dense 10x10 generator M of the amplitude system dA/dt = M A.
class GeneratorMatrix {
public:
    static constexpr std::size_t n = basis_size;

    complex operator()(std::size_t row, std::size_t col) const { return m_[row * n + col]; }
    complex& operator()(std::size_t row, std::size_t col) { return m_[row * n + col]; }

    complex operator()(BasisIndex row, BasisIndex col) const { return (*this)(flat_index(row), flat_index(col)); }
    complex& operator()(BasisIndex row, BasisIndex col) { return (*this)(flat_index(row), flat_index(col)); }

    StateVector apply(const StateVector& a) const {
        StateVector out;
        for (std::size_t r = 0; r < n; ++r) {
            complex s{};
            for (std::size_t c = 0; c < n; ++c) s += m_[r * n + c] * a[c];
            out[r] = s;
        }
        return out;
    }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    std::array<complex, n * n> m_{};
};

/// Transcribes the ten amplitude equations row by row, including the
/// lowering-pump terms.
inline GeneratorMatrix build_generator(const ModelParams& p) {
    const double g = p.g, e = p.epsilon, a = p.alpha, k = p.kappa, gm = p.gamma;
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    const complex i{0.0, 1.0};

    GeneratorMatrix m;
    auto set = [&m](BasisIndex row, BasisIndex col, complex v) { m(row, col) += v; };

    // dA00/dt = -e A10
    set({0, 0}, {1, 0}, -e);

    // dA01/dt = -e A11 - g A10 - (gamma/2) A01
    set({0, 1}, {1, 1}, -e);
    set({0, 1}, {1, 0}, -g);
    set({0, 1}, {0, 1}, -gm / 2.0);

    // dA10/dt = e (A00 - sqrt2 A20) + g A01 - k A10
    set({1, 0}, {0, 0}, e);
    set({1, 0}, {2, 0}, -r2 * e);
    set({1, 0}, {0, 1}, g);
    set({1, 0}, {1, 0}, -k);

    // dA11/dt = sqrt2 g (A02 - A20) - (k + gamma/2) A11 + e A01 - sqrt2 e A21
    set({1, 1}, {0, 2}, r2 * g);
    set({1, 1}, {2, 0}, -r2 * g);
    set({1, 1}, {1, 1}, -(k + gm / 2.0));
    set({1, 1}, {0, 1}, e);
    set({1, 1}, {2, 1}, -r2 * e);

    // dA20/dt = sqrt2 g A11 - 2k A20 + sqrt2 e A10 - sqrt3 e A30
    set({2, 0}, {1, 1}, r2 * g);
    set({2, 0}, {2, 0}, -2.0 * k);
    set({2, 0}, {1, 0}, r2 * e);
    set({2, 0}, {3, 0}, -r3 * e);

    // dA02/dt = -sqrt2 g A11 - 2i alpha A02 - gamma A02 - e A12
    set({0, 2}, {1, 1}, -r2 * g);
    set({0, 2}, {0, 2}, -2.0 * i * a - gm);
    set({0, 2}, {1, 2}, -e);

    // dA03/dt = -sqrt3 g A12 - (3 gamma/2 + 6i alpha) A03
    set({0, 3}, {1, 2}, -r3 * g);
    set({0, 3}, {0, 3}, -(1.5 * gm + 6.0 * i * a));

    // dA30/dt = sqrt3 e A20 + sqrt3 g A21 - 3k A30
    set({3, 0}, {2, 0}, r3 * e);
    set({3, 0}, {2, 1}, r3 * g);
    set({3, 0}, {3, 0}, -3.0 * k);

    // dA12/dt = e A02 + g (sqrt3 A03 - 2 A21) - (k + gamma + 2i alpha) A12
    set({1, 2}, {0, 2}, e);
    set({1, 2}, {0, 3}, r3 * g);
    set({1, 2}, {2, 1}, -2.0 * g);
    set({1, 2}, {1, 2}, -(k + gm + 2.0 * i * a));

    // dA21/dt = sqrt2 e A11 + g (2 A12 - sqrt3 A30) - (2k + gamma/2) A21
    set({2, 1}, {1, 1}, r2 * e);
    set({2, 1}, {1, 2}, 2.0 * g);
    set({2, 1}, {3, 0}, -r3 * g);
    set({2, 1}, {2, 1}, -(2.0 * k + gm / 2.0));

    return m;
}

inline StateVector rhs(const GeneratorMatrix& m, const StateVector& a) { return m.apply(a); }

/// One classical RK4 step without renormalization.
inline StateVector rk4_advance(const GeneratorMatrix& m, const StateVector& a, double dt) {
    const StateVector k1 = m.apply(a);
    const StateVector k2 = m.apply(a + complex(dt / 2.0) * k1);
    const StateVector k3 = m.apply(a + complex(dt / 2.0) * k2);
    const StateVector k4 = m.apply(a + complex(dt) * k3);
    StateVector out = a;
    for (std::size_t r = 0; r < basis_size; ++r) {
        out[r] += dt / 6.0 * (k1[r] + 2.0 * k2[r] + 2.0 * k3[r] + k4[r]);
    }
    return out;
}

inline constexpr double underflow_norm = 1e-14;

/// Divides by the norm; throws NumericError when the norm is below the
/// underflow floor or has diverged.
inline std::pair<StateVector, double> renormalize(const StateVector& raw) {
    const double n = raw.norm();
    if (!std::isfinite(n)) throw NumericError("state norm diverged; step size too large for the generator");
    if (!(n >= underflow_norm)) {
        throw NumericError("state norm " + std::to_string(n) + " underflowed; renormalization is ill-conditioned");
    }
    StateVector out = raw;
    out *= complex(1.0 / n);
    return {out, n};
}

/// RK4 step followed by renormalization. Returns the renormalized state and
/// the pre-renormalization norm of this single step.
inline std::pair<StateVector, double> step_rk4(const GeneratorMatrix& m, const StateVector& a, double dt) {
    if (!(dt > 0.0)) throw DomainError("step size must be positive");
    return renormalize(rk4_advance(m, a, dt));
}

struct IntegratorConfig {
    double dt = 0.01;
    double t_max = 50.0;
    long sample_stride = 10;

    friend bool operator==(const IntegratorConfig&, const IntegratorConfig&) = default;
};

inline void validate(const IntegratorConfig& c) {
    if (!(c.dt > 0.0) || !std::isfinite(c.dt)) throw ConfigError("dt", "must be a positive finite number");
    if (!(c.t_max > 0.0) || !std::isfinite(c.t_max)) throw ConfigError("t_max", "must be a positive finite number");
    if (c.sample_stride < 1) throw ConfigError("sample_stride", "must be at least 1");
}

/// Number of fixed steps covering [0, t_max]; t_max is rounded to the
/// nearest multiple of dt.
inline long step_count(const IntegratorConfig& c) {
    return std::max(1L, std::lround(c.t_max / c.dt));
}

/// Steps from `initial` with per-step renormalization. The stored raw_norm
/// is the accumulated product of per-step norms, i.e. the norm the
/// unrenormalized no-jump solution would have.
inline Trajectory integrate_from(const ModelParams& p, const StateVector& initial, const IntegratorConfig& cfg) {
    validate(p);
    validate(cfg);
    const GeneratorMatrix m = build_generator(p);
    const long steps = step_count(cfg);

    auto [state, n0] = renormalize(initial);
    double accumulated = n0;

    Trajectory traj;
    traj.reserve(static_cast<std::size_t>(steps / cfg.sample_stride + 2));
    traj.push_back({0.0, state, accumulated});
    for (long s = 1; s <= steps; ++s) {
        auto [next, step_norm] = step_rk4(m, state, cfg.dt);
        state = next;
        accumulated *= step_norm;
        if (s % cfg.sample_stride == 0) traj.push_back({static_cast<double>(s) * cfg.dt, state, accumulated});
    }
    return traj;
}

inline Trajectory integrate(const ModelParams& p, const IntegratorConfig& cfg) {
    return integrate_from(p, vacuum_state(), cfg);
}

} // namespace qwcavity

#endif
