#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/vops.hpp"

using namespace qvertex;
using namespace oracle;

TEST_CASE("operator families")
{
    CHECK(has_exponential_form(VOFamily::PhiMinus));
    CHECK_FALSE(has_exponential_form(VOFamily::PhiPlus));
    CHECK(lattice_shift(VOFamily::PhiMinus) == 1);
    CHECK(lattice_shift(VOFamily::EMinus) == -2);
    CHECK(phi_creation_coeff(1) == q(4) / (one() + q(2)));
    CHECK(phi_annihilation_coeff(1) == -q(-2) / (one() + q(2)));
}

TEST_CASE("one-row states")
{
    for (int n = 0; n <= 4; ++n) CHECK(one_row_vos_extracted(n) == one_row_vos(n));
    CHECK(one_row_vos(1) == FockState(p({1}, q(4) / (one() + q(2))), 1));
}

TEST_CASE("two-row states")
{
    const RationalFunctionQ c1 = -q(2) / (one() + q(2));
    CHECK(two_row_vos_formal(1, 1) == RowCombination::single(0, 1, -q(7)) + RowCombination::single(1, 0, -q(7) * c1));
    CHECK(two_row_vos(1, 1) == FockState(one_row_Z(1) * (-q(7) * (one() + c1)), 2));
    CHECK(two_row_vos_composed(2, 1) == two_row_vos_closed(2, 1));
    CHECK(two_row_vos_ope(1, 2) == two_row_vos_closed(1, 2));
    CHECK_THROWS_AS(two_row_vos(0, 1), std::invalid_argument);
}

TEST_CASE("dual vacuum")
{
    const DualFockSeries res = phi_plus_dual_vacuum_residue(4);
    CHECK(res == phi_plus_dual_vacuum_direct(4));
    CHECK(coefficient_at(res, {-2, 0}).sym() == p({1}, one() / (one() + q(2))));
    for (int n = 0; n <= 4; ++n) CHECK(coefficient_at(res, {-2 * n, 0}) == dual_one_row_vos(n));
    CHECK(dual_one_row_vos(0) == DualFockState(SymFunc(one()), 1));
}

TEST_CASE("dual two-row states")
{
    CHECK(dual_two_row_scalar() == q(-2));
    CHECK(dual_two_row_vos(0, 1) == DualFockState(SymFunc(q(-2)), 2));
    // the lowering operator maps Z*_1 Z*_0 to Z*_0 Z*_1, which survives
    CHECK(dual_two_row_vos_formal(1, 1) == RowCombination::single(1, 0) + RowCombination::single(0, 1, -q(2) / (one() + q(2))));
    CHECK(dual_two_row_vos(1, 1) == DualFockState(one_row_Z(1) * (q(-2) / (one() + q(2))), 2));
    CHECK(dual_two_row_vos_engine(1, 2) == dual_two_row_vos_closed(1, 2));
}

TEST_CASE("matrix elements")
{
    CHECK(matrix_element(1, 1) == q(4) / (one() + q(2)));
    CHECK(matrix_element(0, 0) == one());
    CHECK(matrix_element(1, 2).is_zero());
    const PowerSeriesX s = matrix_element_series(8);
    CHECK(s[1] == q(4) * (one() - q(2)) / (one() - q(4)));
}

TEST_CASE("reconstruction")
{
    CHECK(qzonal_from_vos(2, 1) == two_row_Z(1, 1));
    CHECK(qzonal_from_vos(1, 0) == SymFunc(one()));
    CHECK(dual_qzonal_from_vos(2, 1) == two_row_Z(1, 1));
    CHECK(dual_qzonal_from_vos(3, 1) == two_row_Z(2, 1));
}

TEST_CASE("operator products")
{
    for (OpeKind k : {OpeKind::PhiPhi, OpeKind::EPhi, OpeKind::PhiE, OpeKind::EE}) {
        const OpeCheck c = verify_ope(k, 4);
        CAPTURE(ope_name(k));
        CHECK(c.ok);
        CHECK(c.compared > 0);
    }
    CHECK(ope_probes().size() == 4);
}
