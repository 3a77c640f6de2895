#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/fock.hpp"

using namespace qvertex;
using namespace oracle;

TEST_CASE("Heisenberg action on kets")
{
    const FockState b1(p({1}), 0);
    CHECK(apply_b(-1, FockState::vacuum()) == b1);
    CHECK(apply_b(1, b1) == FockState(SymFunc(one() + q(2)), 0));
    CHECK(apply_b(1, FockState::vacuum()).is_zero());
    CHECK(apply_b(2, FockState(p({2, 2}), 3)) == FockState(p({2}, RationalFunctionQ(4) * (one() + q(4))), 3));
}

TEST_CASE("Heisenberg action on bras")
{
    const DualFockState b1(p({1}), 0);
    CHECK(apply_b(1, DualFockState::vacuum()) == b1);
    CHECK(apply_b(-1, b1) == DualFockState(SymFunc(one() + q(2)), 0));
}

TEST_CASE("a to b conversion")
{
    CHECK(a_to_b_factor(1) == q(-1));
    CHECK(a_to_b_factor(2) == (q(1) + q(-1)) * q(-2) / RationalFunctionQ(2));
    // [-1] / -1 = 1
    CHECK(a_to_b_factor(-1) == q(-1));
    CHECK(a_to_b_factor(-2) == a_to_b_factor(2));
}

TEST_CASE("lattice and zero mode")
{
    const FockState e1 = apply_exp_alpha_half(1, FockState::vacuum());
    CHECK(e1.lattice_k() == 1);
    CHECK(momentum_eigenvalue(e1) == 1);
    CHECK(momentum_eigenvalue(apply_exp_alpha_half(2, FockState::vacuum())) == 2);
    CHECK(apply_exp_alpha_half(1, DualFockState::vacuum()).lattice_k() == -1);
}

TEST_CASE("sigma grade folding")
{
    const FockState a(SymFunc(one()), 0, 2);
    CHECK(a.sigma_twice() == 0);
    CHECK(a == FockState(SymFunc(-q(3)), 0));
    const FockState b(SymFunc(one()), 0, -1);
    CHECK(b.sigma_twice() == 1);
    CHECK(b == FockState(SymFunc(-q(-3)), 0, 1));
    CHECK_THROWS_AS(FockState::vacuum() + FockState(SymFunc(one()), 1), std::invalid_argument);
}

TEST_CASE("pairing")
{
    CHECK(pairing(DualFockState(p({1}), 0), FockState(p({1}), 0)) == one() + q(2));
    CHECK(pairing(DualFockState(p({1}), 1), FockState(p({1}), 0)).is_zero());
    CHECK(pairing(DualFockState::vacuum(), FockState::vacuum()) == one());
}
