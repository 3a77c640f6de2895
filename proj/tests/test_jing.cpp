#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/jing.hpp"

using namespace qvertex;
using namespace oracle;

namespace {
const RationalST S = RationalST::s();
const RationalST T = RationalST::t();
const RationalST One = RationalST::from_t(RationalFunctionQ(1));

STSymFunc pst(std::vector<int> parts, const RationalST &c = RationalST::from_t(RationalFunctionQ(1)))
{
    return STSymFunc::power_sum(Partition(std::move(parts)), c);
}
}  // namespace

TEST_CASE("bivariate field")
{
    const RationalST x = (One - S * S) / (One - S);
    CHECK(x == One + S);
    CHECK(((One - T) / (One - S)).specialize(4, 2) == RationalFunctionQ(1) / (RationalFunctionQ(1) + q(2)));
    CHECK((S / T).specialize(4, 2) == q(2));
}

TEST_CASE("c-mode commutator")
{
    CHECK(jing_commutator(1) == (One - S) / (One - T));
    for (int n = 1; n <= 4; ++n) CHECK(jing_commutator(n).specialize(4, 2) == RationalFunctionQ(n) * (one() + q(2 * n)));
    CHECK(jing_coeff(2) * jing_commutator(2) == One);
}

TEST_CASE("vertex operator X on the vacuum")
{
    const STSymFunc vac(One);
    const auto x = X_series(vac, 2);
    const RationalST r = (One - T) / (One - S);
    REQUIRE(x.count(1));
    CHECK(x.at(1) == pst({1}, r));
    CHECK(x.at(0) == vac);
    const auto xs = X_star_series(vac, 2);
    REQUIRE(xs.count(1));
    CHECK(xs.at(1) == pst({1}, -r));
    CHECK(X_mode(-1, vac) == pst({1}, r));
}

TEST_CASE("adjointness and specialization")
{
    CHECK(verify_adjointness(1).ok);
    CHECK(verify_adjointness(3).ok);
    CHECK(verify_specialization(3).ok);
    CHECK(inner_product_generic(pst({1}), pst({1})) == jing_commutator(1));
}

TEST_CASE("contrast with the intertwiner")
{
    const JingContrast c = jing_contrast(3);
    CHECK(c.x_conjugate_is_exponential);
    CHECK_FALSE(c.phi_plus_is_exponential);
    CHECK(c.x_lattice_shift == 0);
    CHECK(c.phi_lattice_shift != 0);
}
