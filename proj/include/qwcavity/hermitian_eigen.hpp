#ifndef QWCAVITY_HERMITIAN_EIGEN_HPP
#define QWCAVITY_HERMITIAN_EIGEN_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qwcavity {

template <std::size_t N>
using HermitianMatrix = std::array<std::array<std::complex<double>, N>, N>;

/// Eigenvalues (ascending) of a small Hermitian matrix by cyclic Jacobi
/// rotations. Each rotation first removes the phase of the pivot, then applies
/// a real Givens rotation.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(HermitianMatrix<N> a, double tol = 1e-15, int max_sweeps = 64) {
    using cplx = std::complex<double>;
    auto off_norm = [&a] {
        double s = 0.0;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) s += std::norm(a[p][q]);
        return std::sqrt(s);
    };
    double scale = 0.0;
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = 0; q < N; ++q) scale += std::norm(a[p][q]);
    scale = std::sqrt(scale);

    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol * scale; ++sweep) {
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double mag = std::abs(a[p][q]);
                if (mag == 0.0) continue;
                const cplx phase = a[p][q] / mag; // e^{i phi}
                const double app = a[p][p].real(), aqq = a[q][q].real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U restricted to (p,q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                const cplx upp = c, upq = s, uqp = -s * std::conj(phase), uqq = c * std::conj(phase);
                for (std::size_t k = 0; k < N; ++k) { // A <- A U
                    const cplx akp = a[k][p], akq = a[k][q];
                    a[k][p] = akp * upp + akq * uqp;
                    a[k][q] = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < N; ++k) { // A <- U^H A
                    const cplx apk = a[p][k], aqk = a[q][k];
                    a[p][k] = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a[q][k] = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a[p][q] = a[q][p] = 0.0;
                a[p][p] = a[p][p].real();
                a[q][q] = a[q][q].real();
            }
        }
    }
    std::array<double, N> ev;
    for (std::size_t k = 0; k < N; ++k) ev[k] = a[k][k].real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace qwcavity

#endif
