#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/coeff.hpp"

using namespace qvertex;
using namespace oracle;

TEST_CASE("laurent polynomial basics")
{
    const LaurentPoly a = LaurentPoly::from_terms({{-1, 2}, {0, 3}, {4, -1}});
    CHECK(a.to_string() == "2*q^-1 + 3 - q^4");
    CHECK(a.low() == -1);
    CHECK(a.high() == 4);
    CHECK((a - a).is_zero());
    CHECK(detail::poly_gcd(LaurentPoly(6), LaurentPoly::from_terms({{0, 2}, {1, 4}})) == LaurentPoly(2));
}

TEST_CASE("rational functions are canonical")
{
    const RationalFunctionQ x = (one() - q(4)) / (one() - q(2));
    CHECK(x == one() + q(2));
    CHECK(x.num() == LaurentPoly::from_terms({{0, 1}, {2, 1}}));
    CHECK(x.den() == LaurentPoly(1));
    CHECK((q(3) / q(5)) == q(-2));
    CHECK(RationalFunctionQ(mpq_class(2, 4)) == RationalFunctionQ(1) / RationalFunctionQ(2));
    CHECK(x.evaluate(mpq_class(1, 2)) == mpq_class(5, 4));
    CHECK_FALSE((one() / (one() - q(1))).evaluate(mpq_class(1)).has_value());
    CHECK_THROWS_AS(RationalFunctionQ(0).inverse(), std::domain_error);
}

TEST_CASE("qint")
{
    CHECK(qint(2) == q(1) + q(-1));
    CHECK(qint(1) == one());
    CHECK(qint(-1) == RationalFunctionQ(-1));
    CHECK(qint(0).is_zero());
    CHECK(qint(3) == q(2) + one() + q(-2));
}

TEST_CASE("poch_finite")
{
    CHECK(poch_finite(q(2), q(4), 2) == (one() - q(2)) * (one() - q(6)));
    CHECK(poch_finite(q(2), q(4), 0) == one());
}

TEST_CASE("poch_inf_series")
{
    const PowerSeriesX e = poch_inf_series(one(), q(4), 4);
    CHECK(e[0] == one());
    CHECK(e[1] == RationalFunctionQ(-1) / (one() - q(4)));
    const PowerSeriesX f = poch_inf_series(q(2), q(4), 2);
    CHECK(f[2] == q(8) / ((one() - q(4)) * (one() - q(8))));
}

TEST_CASE("C coefficients")
{
    const PowerSeriesX c = cn_series(10);
    CHECK(c[0] == one());
    CHECK(c[1] == -q(2) / (one() + q(2)));
    const RationalFunctionQ half(mpq_class(1, 2));
    CHECK(c[2] == q(4) * (half / ((one() + q(2)) * (one() + q(2))) - half / (one() + q(4))));
    CHECK(cn_by_pochhammer_ratio(10) == cn_by_exponential(10));
    CHECK(cn_by_pochhammer_ratio(10) == cn_by_partition_sum(10));
}

TEST_CASE("C series times its inverse ratio telescopes to 1 - x")
{
    PowerSeriesX expect = PowerSeriesX::one(8);
    expect.set(1, RationalFunctionQ(-1));
    CHECK(cn_series(8) * inverse_cn_series(8) == expect);
}
