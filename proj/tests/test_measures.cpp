#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "test_support.hpp"

using namespace qwcavity;
using qwtest::vacuum_wehrl;

namespace {

StateVector bell_like() {
    StateVector s;
    s.at({0, 1}) = 1.0 / std::sqrt(2.0);
    s.at({1, 0}) = 1.0 / std::sqrt(2.0);
    return s;
}

void expect_diag(const ReducedDensity& rho, std::array<double, 4> d) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            EXPECT_NEAR(std::abs(rho.matrix[i][j] - complex(i == j ? d[i] : 0.0)), 0.0, 1e-15) << i << "," << j;
}

} // namespace

TEST(Reduce, Examples) {
    expect_diag(reduce(vacuum_state(), Mode::photon), {1, 0, 0, 0});
    expect_diag(reduce(bell_like(), Mode::photon), {0.5, 0.5, 0, 0});
    expect_diag(reduce(StateVector::basis_state({1, 1}), Mode::photon), {0, 1, 0, 0});
    expect_diag(reduce(StateVector::basis_state({1, 2}), Mode::exciton), {0, 0, 1, 0});
}

TEST(Reduce, HermitianUnitTracePsd) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = qwtest::random_state(rng);
        for (Mode mode : {Mode::photon, Mode::exciton}) {
            const auto rho = reduce(s, mode);
            EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j)
                    EXPECT_NEAR(std::abs(rho.matrix[i][j] - std::conj(rho.matrix[j][i])), 0.0, 1e-12);
            for (double ev : hermitian_eigenvalues<4>(rho.matrix)) EXPECT_GE(ev, -1e-12);
        }
    }
}

TEST(Wehrl, VacuumAndFockOne) {
    const QuadratureGrid grid;
    EXPECT_NEAR(wehrl_entropy(vacuum_state(), grid), vacuum_wehrl, 1e-6);
    EXPECT_NEAR(wehrl_entropy(vacuum_state(), grid), 2.14473, 1e-5);
    const double fock1 = wehrl_entropy(StateVector::basis_state({1, 0}), grid);
    EXPECT_NEAR(fock1, qwtest::fock_wehrl(1), 1e-5);
    EXPECT_NEAR(fock1, 1.0 + std::log(std::numbers::pi) + qwtest::euler_gamma, 1e-5);
    EXPECT_NEAR(wehrl_entropy(StateVector::basis_state({0, 1}), grid), vacuum_wehrl, 1e-6);
}

TEST(Wehrl, FockStatesMatchClosedFormAndRefinedGrid) {
    const QuadratureGrid grid;
    const QuadratureGrid fine(GridSpec{8.0, 800, 1024});
    for (int n = 0; n <= 3; ++n) {
        const auto s = StateVector::basis_state({n, 0});
        const double base = wehrl_entropy(s, grid);
        EXPECT_NEAR(base, qwtest::fock_wehrl(n), 1e-5) << "n=" << n;
        EXPECT_NEAR(base, wehrl_entropy(s, fine), 1e-5) << "n=" << n;
    }
}

TEST(WehrlPd, ConstantForPhaseSymmetricStates) {
    const QuadratureGrid grid;
    for (const auto& [theta, density] : wehrl_pd(vacuum_state(), grid)) {
        EXPECT_NEAR(density, vacuum_wehrl / (2.0 * std::numbers::pi), 1e-7);
        EXPECT_NEAR(density, 0.341344, 1e-6);
    }
    for (const auto& [theta, density] : wehrl_pd(StateVector::basis_state({1, 0}), grid))
        EXPECT_NEAR(density, qwtest::fock_wehrl(1) / (2.0 * std::numbers::pi), 1e-6);
}

TEST(WehrlPd, AngularSumReproducesEntropy) {
    const QuadratureGrid grid;
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = qwtest::random_state(rng);
        double sum = 0.0;
        for (const auto& [theta, density] : wehrl_pd(s, grid)) sum += grid.angular_weight() * density;
        EXPECT_NEAR(sum, wehrl_entropy(s, grid), 1e-9);
    }
}

TEST(Concurrence, Examples) {
    EXPECT_EQ(concurrence(vacuum_state()), 0.0);
    for (std::size_t k = 0; k < basis_size; ++k) EXPECT_EQ(concurrence(StateVector::basis_state(canonical_basis[k])), 0.0);
    EXPECT_NEAR(concurrence(bell_like()), std::sqrt(2.0 / 3.0), 1e-15);
    EXPECT_NEAR(concurrence(bell_like()), 0.81650, 1e-5);
}

TEST(Concurrence, PurityIdentityOnTrajectory) {
    const auto traj = integrate(qwtest::reference_params(), {0.01, 20.0, 10});
    for (const auto& s : traj)
        EXPECT_NEAR(concurrence(s.state), qwtest::purity_oracle_concurrence(s.state), 1e-9) << "t=" << s.t;
}

TEST(VonNeumann, Examples) {
    EXPECT_NEAR(von_neumann_entropy(reduce(vacuum_state(), Mode::photon)), 0.0, 1e-15);
    EXPECT_NEAR(von_neumann_entropy(reduce(bell_like(), Mode::photon)), std::log(2.0), 1e-14);
    ReducedDensity bad;
    bad.matrix[0][0] = 1.1;
    bad.matrix[1][1] = -0.1;
    EXPECT_THROW(von_neumann_entropy(bad), NumericError);
}

TEST(Shannon, Examples) {
    EXPECT_EQ(shannon_entropy(vacuum_state()), 0.0);
    EXPECT_NEAR(shannon_entropy(bell_like()), std::log(2.0), 1e-15);
}

TEST(MeasureTrajectory, ZeroParams) {
    const auto series = measure_trajectory(integrate({}, {0.01, 1.0, 10}), QuadratureGrid());
    ASSERT_EQ(series.size(), 11u);
    for (const auto& m : series) {
        EXPECT_NEAR(m.wehrl, vacuum_wehrl, 1e-6);
        EXPECT_EQ(m.concurrence, 0.0);
        EXPECT_NEAR(m.von_neumann, 0.0, 1e-15);
        EXPECT_EQ(m.purity, 1.0);
    }
}

TEST(MeasureTrajectory, Fig5ConcurrenceOscillates) {
    const auto series = measure_trajectory(integrate(qwtest::reference_params(), {0.01, 50.0, 10}), QuadratureGrid());
    double lo = 1e9, hi = 0.0;
    for (const auto& m : series) {
        lo = std::min(lo, m.concurrence);
        hi = std::max(hi, m.concurrence);
        EXPECT_NEAR(std::accumulate(m.photon_probabilities.begin(), m.photon_probabilities.end(), 0.0), 1.0, 1e-10);
        EXPECT_GE(m.concurrence, 0.0);
        EXPECT_LE(m.concurrence, std::sqrt(8.0 / 3.0));
        EXPECT_GE(m.shannon, m.von_neumann - 1e-12);
    }
    EXPECT_GT(hi - lo, 0.1);
    EXPECT_GT(oscillation_count(series, SeriesField::concurrence), 1);
}

// Properties over random manifold states

TEST(MeasuresProperty, LiebBound) {
    const QuadratureGrid grid;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial)
        EXPECT_GE(wehrl_entropy(qwtest::random_state(rng), grid), vacuum_wehrl - 1e-4);
}

TEST(MeasuresProperty, ConcurrencePurityIdentity) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 500; ++trial) {
        const auto s = qwtest::random_state(rng);
        const auto rho = reduce(s, Mode::photon);
        EXPECT_NEAR(concurrence(s), std::sqrt(4.0 / 3.0 * (1.0 - rho.purity_raw())), 1e-9);
    }
}

TEST(MeasuresProperty, RankOneVersusRankTwo) {
    std::mt19937_64 rng(33);
    std::normal_distribution<double> n(0.0, 1.0);
    auto rc = [&] { return complex(n(rng), n(rng)); };
    for (int trial = 0; trial < 200; ++trial) {
        // photon and exciton supports {0,1} x {0,1,2} stay inside the manifold
        const auto s = qwtest::product_state({rc(), rc(), 0, 0}, {rc(), rc(), rc(), 0});
        EXPECT_LE(concurrence(s), 1e-12);
        // rank two: |0>(x)u + |1>(x)v with independent u, v on excitons {0,1,2} and {0,1}
        StateVector t;
        t.at({0, 0}) = rc();
        t.at({0, 1}) = rc();
        t.at({0, 2}) = rc();
        t.at({1, 0}) = rc();
        t.at({1, 1}) = rc();
        EXPECT_GT(concurrence(t.normalized()), 0.0);
    }
}

TEST(MeasuresProperty, GlobalPhaseInvariance) {
    const QuadratureGrid grid(GridSpec{8.0, 100, 64});
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = qwtest::random_state(rng);
        auto r = s;
        r *= std::polar(1.0, 0.1 + trial);
        const auto a = measure_state(0, 1, s, grid), b = measure_state(0, 1, r, grid);
        EXPECT_NEAR(a.wehrl, b.wehrl, 1e-12);
        EXPECT_NEAR(a.concurrence, b.concurrence, 1e-12);
        EXPECT_NEAR(a.von_neumann, b.von_neumann, 1e-12);
        EXPECT_NEAR(a.shannon, b.shannon, 1e-12);
        EXPECT_NEAR(a.purity, b.purity, 1e-12);
    }
}

TEST(MeasuresProperty, SchmidtSymmetry) {
    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = qwtest::random_state(rng);
        EXPECT_NEAR(von_neumann_entropy(reduce(s, Mode::photon)), von_neumann_entropy(reduce(s, Mode::exciton)), 1e-10);
    }
}

TEST(MeasuresProperty, ShannonDominatesVonNeumann) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = qwtest::random_state(rng);
        EXPECT_GE(shannon_entropy(s), von_neumann_entropy(reduce(s, Mode::photon)) - 1e-12);
    }
}
