#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/vops.hpp"
#include "qvertex/vseries.hpp"

using namespace qvertex;
using namespace oracle;

TEST_CASE("exponential of creation modes")
{
    const auto parts = exp_power_sum_parts([](int n) { return RationalFunctionQ(1) / RationalFunctionQ(n); }, 2);
    REQUIRE(parts.size() == 3);
    CHECK(parts[1] == p({1}));
    CHECK(parts[2] == p({2}, RationalFunctionQ(mpq_class(1, 2))) + p({1, 1}, RationalFunctionQ(mpq_class(1, 2))));
}

TEST_CASE("phi^{0,-} on the vacuum, z^2 coefficient")
{
    const FockSeries s = phi_minus_series(0, FockState::vacuum(), 2);
    const FockState c2 = coefficient_at(s, {4, 0});
    const RationalFunctionQ sq = (one() + q(2)) * (one() + q(2));
    const SymFunc expect = p({2}, q(8) / (RationalFunctionQ(2) * (one() + q(4)))) + p({1, 1}, q(8) / (RationalFunctionQ(2) * sq));
    CHECK(c2 == FockState(expect, 1));
}

TEST_CASE("annihilation exponential on b_{-1}")
{
    const FockState b1(p({1}), 0);
    const RationalFunctionQ c = q(3);
    const FockSeries s = exp_annihilation_series([c](int n) { return n == 1 ? c : RationalFunctionQ(); }, "w", b1);
    CHECK(coefficient_at(s, {0, 0}) == b1);
    CHECK(coefficient_at(s, {-2, 0}) == FockState(SymFunc(c * (one() + q(2))), 0));
    CHECK(s.terms().size() == 2);
}

TEST_CASE("zero modes")
{
    // phi^{1,-} on e^{alpha/2} carries (-q^3 z)^1
    const FockState e1(SymFunc(one()), 1);
    const FockSeries phi = phi_minus_series(1, e1, 1);
    CHECK(phi.terms().begin()->first == ExpKey{2, 0});
    CHECK(coefficient_at(phi, {2, 0}) == FockState(SymFunc(-q(3)), 2));

    // E^- on e^{alpha/2} starts at z^{-1}
    const FockSeries e = e_minus_series(e1, 1);
    CHECK(e.terms().begin()->first == ExpKey{-2, 0});
    CHECK(coefficient_at(e, {-2, 0}) == FockState(SymFunc(one()), -1));
}

TEST_CASE("E^- on the vacuum, w^1 coefficient")
{
    const FockSeries e = e_minus_series(FockState::vacuum(), 1);
    CHECK(coefficient_at(e, {2, 0}) == FockState(-p({1}), -2));
}

TEST_CASE("coefficients outside the window are flagged")
{
    const FockSeries s = phi_minus_series(0, FockState::vacuum(), 2);
    bool outside = false;
    CHECK(coefficient_at(s, {8, 0}, &outside).is_zero());
    CHECK(outside);
    coefficient_at(s, {2, 0}, &outside);
    CHECK_FALSE(outside);
}
