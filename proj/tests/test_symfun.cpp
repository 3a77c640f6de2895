#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/coeff.hpp"
#include "qvertex/symfun.hpp"

using namespace qvertex;
using namespace oracle;

namespace {
const RationalFunctionQ s4 = RationalFunctionQ::q_power(4);
const RationalFunctionQ t2 = RationalFunctionQ::q_power(2);
}  // namespace

TEST_CASE("inner products")
{
    CHECK(inner_product_q(p({2, 1}), p({2, 1})) == RationalFunctionQ(2) * (one() + q(4)) * (one() + q(2)));
    CHECK(inner_product_q(p({2}), p({1, 1})).is_zero());
    CHECK(inner_product_st(p({2, 1}), p({2, 1}), s4, t2) == inner_product_q(p({2, 1}), p({2, 1})));
}

TEST_CASE("one-row functions")
{
    CHECK(one_row_Z(0) == SymFunc(one()));
    CHECK(one_row_Z(-1).is_zero());
    CHECK(one_row_Z(1) == p({1}, one() / (one() + q(2))));
    const RationalFunctionQ sq = (one() + q(2)) * (one() + q(2));
    CHECK(one_row_Z(2) == p({2}, one() / (RationalFunctionQ(2) * (one() + q(4)))) + p({1, 1}, one() / (RationalFunctionQ(2) * sq)));
    CHECK(z_inverse_sum(1) == one() / (one() + q(2)));
}

TEST_CASE("Heisenberg derivative")
{
    CHECK(adjoint_D(p({1}), p({1, 1})) == p({1}, RationalFunctionQ(2) * (one() + q(2))));
    CHECK(heisenberg_derivative(2, p({2, 1})) == p({1}, RationalFunctionQ(2) * (one() + q(4))));
    CHECK(heisenberg_derivative(3, p({2, 1})).is_zero());
}

TEST_CASE("raising and lowering")
{
    const RowCombination x = RowCombination::single(1, 2);
    CHECK(raising_R(raising_R(x)) == RowCombination::single(3, 0));
    CHECK(raising_R(RowCombination::single(3, 0)).is_zero());
    CHECK(lowering_R(RowCombination::single(0, 1)).is_zero());
    CHECK(lowering_R(RowCombination::single(2, 1)) == RowCombination::single(1, 2));
    CHECK(RowCombination::single(3, 0).expand() == one_row_Z(3));
    CHECK(annihilation_bound(RowOperator::Raising, x) == 3);
}

TEST_CASE("monomial to power sum")
{
    const RationalFunctionQ half(mpq_class(1, 2));
    CHECK(monomial_to_powersum(Partition({1, 1}), 4) == (p({1, 1}) - p({2})) * half);
    CHECK(monomial_to_powersum(Partition({2}), 4) == p({2}));
    CHECK(monomial_to_powersum(Partition({2, 1}), 4) == p({2, 1}) - p({3}));
}

TEST_CASE("Macdonald polynomials")
{
    CHECK(macdonald_P(Partition({1}), s4, t2) == p({1}));
    const SymFunc p2 = macdonald_P(Partition({2}), s4, t2);
    const SymFunc m2 = monomial_to_powersum(Partition({2}), 4);
    const SymFunc m11 = monomial_to_powersum(Partition({1, 1}), 4);
    const auto c = collinear_ratio(p2 - m2, m11);
    REQUIRE(c.has_value());
    // (1 - t)(1 + s) / (1 - s t) at s = q^4, t = q^2
    CHECK(*c == (one() - q(2)) * (one() + q(4)) / (one() - q(6)));
    CHECK(inner_product_q(p2, macdonald_P(Partition({1, 1}), s4, t2)).is_zero());
}

TEST_CASE("two-row functions match Gram-Schmidt")
{
    CHECK(collinear_ratio(two_row_Z(1, 0), one_row_Z(1)).has_value());
    CHECK(collinear_ratio(two_row_Z(1, 1), macdonald_P(Partition({1, 1}), s4, t2)).has_value());
    CHECK(collinear_ratio(two_row_Z(2, 1), macdonald_P(Partition({2, 1}), s4, t2)).has_value());
    CHECK(collinear_ratio(two_row_Z(2, 2), macdonald_P(Partition({2, 2}), s4, t2)).has_value());
    CHECK_FALSE(collinear_ratio(two_row_Z(2, 1), macdonald_P(Partition({3}), s4, t2)).has_value());
}

TEST_CASE("q = 1 specialization")
{
    const RationalFunctionQ half(mpq_class(1, 2));
    CHECK(specialize_q1(one_row_Z(1)) == p({1}, half));
    CHECK(specialize_q1(one_row_Z(2)) == p({2}, RationalFunctionQ(mpq_class(1, 4))) + p({1, 1}, RationalFunctionQ(mpq_class(1, 8))));
    CHECK_THROWS_AS(specialize_q1(p({1}, one() / (one() - q(2)))), std::domain_error);
    for (int n = 1; n <= 4; ++n)
        CHECK(collinear_ratio(specialize_q1(macdonald_P(Partition({n}), s4, t2)), jack_P(Partition({n}), 2)).has_value());
}
