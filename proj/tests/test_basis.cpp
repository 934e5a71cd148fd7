#include <gtest/gtest.h>

#include "qwcavity/basis.hpp"

using namespace qwcavity;

TEST(Basis, FlatIndexEndpoints) {
    EXPECT_EQ(flat_index({0, 0}), 0u);
    EXPECT_EQ(flat_index({1, 2}), 9u);
    EXPECT_EQ(flat_index({1, 0}), 1u);
    EXPECT_EQ(flat_index({0, 3}), 7u);
}

TEST(Basis, OutsideManifoldIsDomainError) {
    EXPECT_THROW(flat_index({2, 2}), DomainError);
    EXPECT_THROW(flat_index({4, 0}), DomainError);
    EXPECT_THROW(flat_index({-1, 1}), DomainError);
    EXPECT_THROW(basis_at(10), DomainError);
}

TEST(Basis, InverseRecoversEveryPair) {
    int valid = 0;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            if (i + j > 3) continue;
            ++valid;
            EXPECT_EQ(basis_at(flat_index({i, j})), (BasisIndex{i, j}));
        }
    EXPECT_EQ(valid, 10);
    for (std::size_t k = 0; k < basis_size; ++k) EXPECT_EQ(flat_index(basis_at(k)), k);
}

TEST(Basis, VacuumState) {
    const StateVector v = vacuum_state();
    EXPECT_EQ(v[0], complex(1.0, 0.0));
    for (std::size_t k = 1; k < basis_size; ++k) EXPECT_EQ(v[k], complex{});
    EXPECT_EQ(v.norm(), 1.0);
    EXPECT_EQ(v.at({0, 0}), complex(1.0, 0.0));
}

TEST(Basis, ParamValidation) {
    EXPECT_NO_THROW(validate(ModelParams{0.1, 0.2, 1e-8, 0.0002, 0.0}));
    EXPECT_THROW(validate(ModelParams{-0.1, 0, 0, 0, 0}), ConfigError);
    EXPECT_THROW(validate(ModelParams{0, 0, 0, 0, std::nan("")}), ConfigError);
    try {
        validate(ModelParams{0, 0, 0, -1.0, 0});
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.key(), "kappa");
    }
}
