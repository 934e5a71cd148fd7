#ifndef QWCAVITY_ORACLE_HPP
#define QWCAVITY_ORACLE_HPP

// Matrix exponential by scaling and squaring with a truncated Taylor series.
// Independent of the RK4 path; used as ground truth for the integrator.

#include <cmath>
#include <cstddef>

#include "dynamics.hpp"

namespace qwcavity {

namespace detail {

inline GeneratorMatrix multiply(const GeneratorMatrix& a, const GeneratorMatrix& b) {
    constexpr std::size_t n = GeneratorMatrix::n;
    GeneratorMatrix out;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const complex ark = a(r, k);
            if (ark == complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
        }
    return out;
}

inline double max_abs_row_sum(const GeneratorMatrix& a) {
    double best = 0.0;
    for (std::size_t r = 0; r < GeneratorMatrix::n; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < GeneratorMatrix::n; ++c) s += std::abs(a(r, c));
        best = std::max(best, s);
    }
    return best;
}

} // namespace detail

/// exp(M t).
inline GeneratorMatrix matrix_exponential(const GeneratorMatrix& m, double t) {
    constexpr std::size_t n = GeneratorMatrix::n;
    GeneratorMatrix scaled;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) scaled(r, c) = m(r, c) * t;

    int squarings = 0;
    const double norm = detail::max_abs_row_sum(scaled);
    if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    const double scale = std::ldexp(1.0, -squarings);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) scaled(r, c) *= scale;

    GeneratorMatrix result;
    GeneratorMatrix term;
    for (std::size_t r = 0; r < n; ++r) {
        result(r, r) = 1.0;
        term(r, r) = 1.0;
    }
    // ||X|| <= 1/2, so 30 terms put the remainder far below 1e-17.
    for (int k = 1; k <= 30; ++k) {
        term = detail::multiply(term, scaled);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                term(r, c) /= static_cast<double>(k);
                result(r, c) += term(r, c);
            }
        if (detail::max_abs_row_sum(term) < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = detail::multiply(result, result);
    return result;
}

/// exp(M t) a0 without renormalization.
inline StateVector propagate_exact(const GeneratorMatrix& m, double t, const StateVector& a0) {
    if (t < 0.0) throw DomainError("oracle time must be non-negative");
    return matrix_exponential(m, t).apply(a0);
}

/// exp(M t) a0, renormalized the same way the integrator does.
inline StateVector matrix_exponential_oracle(const GeneratorMatrix& m, double t, const StateVector& a0) {
    return renormalize(propagate_exact(m, t, a0)).first;
}

} // namespace qwcavity

#endif
