#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/identities.hpp"
#include "qvertex/serialize.hpp"
#include "qvertex/vops.hpp"

using namespace qvertex;
using namespace oracle;

TEST_CASE("json round trips")
{
    const RationalFunctionQ r = (q(-1) + RationalFunctionQ(3)) / (one() + q(2));
    CHECK(rational_from_json(json::parse(to_json(r).dump())) == r);
    const SymFunc f = one_row_Z(3);
    CHECK(symfunc_from_json(json::parse(to_json(f).dump())) == f);
    const FockState st = two_row_vos(1, 2);
    CHECK(fock_state_from_json(to_json(st)) == st);
    CHECK(to_json(Partition({3, 1})) == json::array({3, 1}));
    CHECK(to_json(LaurentPoly::from_terms({{-2, 5}, {1, -1}})).dump() == R"([[-2,"5"],[1,"-1"]])");
}

TEST_CASE("rationals and evaluation")
{
    CHECK(parse_rational("6/4") == mpq_class(3, 2));
    CHECK(rational_string(mpq_class(-3, 2)) == "-3/2");
    CHECK(rational_string(mpq_class(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    const json e = evaluated_json(one_row_Z(1), mpq_class(1));
    CHECK(e["terms"][0]["value"] == "1/2");
    CHECK_THROWS_AS(evaluated_json(p({1}, one() / (one() - q(1))), mpq_class(1)), std::domain_error);
}

TEST_CASE("csv")
{
    CHECK(to_csv(one_row_Z(1)) == "partition,coefficient-numerator,coefficient-denominator\n\"1\",\"1\",\"1 + q^2\"\n");
}

TEST_CASE("identity runner")
{
    CHECK(identity_names().size() == 12);
    CHECK(std::is_sorted(identity_names().begin(), identity_names().end()));
    for (const auto &name : identity_names()) {
        const IdentityReport r = run_identity(name, 3);
        CAPTURE(name);
        CHECK(r.ok);
        CHECK(r.checked > 0);
    }
    CHECK_THROWS_AS(run_identity("nope", 3), std::invalid_argument);
    CHECK_THROWS_AS(run_identity("cn", -1), std::invalid_argument);
    const json j = to_json(run_identity("cn", 4));
    CHECK(j.dump() == R"({"first_discrepancy":null,"identity":"cn","order":4,"status":"ok"})");
}
