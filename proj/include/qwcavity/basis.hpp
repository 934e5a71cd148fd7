#ifndef QWCAVITY_BASIS_HPP
#define QWCAVITY_BASIS_HPP

// Three-excitation photon/exciton manifold: basis labels, model parameters,
// state vectors and trajectories.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qwcavity {

using complex = std::complex<double>;

inline constexpr std::size_t basis_size = 10;
inline constexpr int max_excitations = 3;

/// |i photons, j excitons>.
struct BasisIndex {
    int photon = 0;
    int exciton = 0;

    friend constexpr bool operator==(BasisIndex, BasisIndex) = default;
};

/// Canonical order: |00>,|10>,|01>,|11>,|20>,|02>,|30>,|03>,|21>,|12>.
inline constexpr std::array<BasisIndex, basis_size> canonical_basis{{
    {0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}, {3, 0}, {0, 3}, {2, 1}, {1, 2},
}};

constexpr bool in_manifold(BasisIndex b) noexcept {
    return b.photon >= 0 && b.exciton >= 0 && b.photon + b.exciton <= max_excitations;
}

inline std::size_t flat_index(BasisIndex b) {
    if (!in_manifold(b)) {
        throw DomainError("basis pair (" + std::to_string(b.photon) + "," +
                          std::to_string(b.exciton) + ") is outside the three-excitation manifold");
    }
    for (std::size_t k = 0; k < basis_size; ++k) {
        if (canonical_basis[k] == b) return k;
    }
    throw DomainError("unreachable basis pair"); // every in-manifold pair is listed
}

inline BasisIndex basis_at(std::size_t flat) {
    if (flat >= basis_size) throw DomainError("flat basis index " + std::to_string(flat) + " out of range");
    return canonical_basis[flat];
}

/// Normalized rates, all in units of the inverse cavity round-trip time.
struct ModelParams {
    double g = 0.0;       ///< exciton-photon coupling
    double epsilon = 0.0; ///< pump amplitude
    double alpha = 0.0;   ///< exciton-exciton interaction
    double kappa = 0.0;   ///< cavity dissipation
    double gamma = 0.0;   ///< excitonic spontaneous emission

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

inline void validate(const ModelParams& p) {
    const std::pair<const char*, double> fields[] = {
        {"g", p.g}, {"epsilon", p.epsilon}, {"alpha", p.alpha}, {"kappa", p.kappa}, {"gamma", p.gamma}};
    for (auto [name, v] : fields) {
        if (!std::isfinite(v)) throw ConfigError(name, "must be finite");
        if (v < 0.0) throw ConfigError(name, "must be non-negative");
    }
}

/// Ten amplitudes A_ij in canonical order. Not forced to unit norm, so the
/// same type carries raw (unrenormalized) propagation results.
class StateVector {
public:
    using Amplitudes = std::array<complex, basis_size>;

    StateVector() = default;
    explicit StateVector(const Amplitudes& a) : amp_(a) {}

    static StateVector basis_state(BasisIndex b) {
        StateVector s;
        s.amp_[flat_index(b)] = 1.0;
        return s;
    }

    complex operator[](std::size_t k) const { return amp_[k]; }
    complex& operator[](std::size_t k) { return amp_[k]; }

    complex at(BasisIndex b) const { return amp_[flat_index(b)]; }
    complex& at(BasisIndex b) { return amp_[flat_index(b)]; }

    const Amplitudes& amplitudes() const noexcept { return amp_; }

    double norm_squared() const noexcept {
        double s = 0.0;
        for (const auto& a : amp_) s += std::norm(a);
        return s;
    }

    double norm() const noexcept { return std::sqrt(norm_squared()); }

    StateVector normalized() const {
        const double n = norm();
        StateVector out = *this;
        for (auto& a : out.amp_) a /= n;
        return out;
    }

    StateVector& operator+=(const StateVector& o) {
        for (std::size_t k = 0; k < basis_size; ++k) amp_[k] += o.amp_[k];
        return *this;
    }

    StateVector& operator*=(complex c) {
        for (auto& a : amp_) a *= c;
        return *this;
    }

    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator*(complex c, StateVector a) { return a *= c; }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    Amplitudes amp_{};
};

inline StateVector vacuum_state() { return StateVector::basis_state({0, 0}); }

struct TrajectorySample {
    double t = 0.0;
    StateVector state;     ///< renormalized to unit norm
    double raw_norm = 1.0; ///< norm of the unrenormalized solution at t
};

using Trajectory = std::vector<TrajectorySample>;

} // namespace qwcavity

#endif
