#include "doctest.h"
#include "helpers.hpp"
#include "qvertex/partition.hpp"

using namespace qvertex;
using namespace oracle;

TEST_CASE("partition structure")
{
    const Partition la({3, 1, 1});
    CHECK(la.weight() == 5);
    CHECK(la.length() == 3);
    CHECK(la.multiplicity(1) == 2);
    CHECK(la.multiplicity(2) == 0);
    CHECK(la.part(5) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 0, 3}) == Partition({3, 1}));
}

TEST_CASE("enumeration")
{
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(6).size() == 11);
    const auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));
}

TEST_CASE("z factors")
{
    CHECK(z_classical(Partition({2, 1, 1})) == 4);
    CHECK(z_st(Partition({2, 1}), q(4), q(2)) == RationalFunctionQ(2) * (one() + q(4)) * (one() + q(2)));
    CHECK(z_q(Partition({2, 1})) == RationalFunctionQ(2) * (one() + q(4)) * (one() + q(2)));
    CHECK(z_q(Partition({1, 1})) == RationalFunctionQ(2) * (one() + q(2)) * (one() + q(2)));
}

TEST_CASE("dominance")
{
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
    CHECK(dominance_leq(Partition({1, 1, 1, 1}), Partition({4})));
    // incomparable pair
    CHECK_FALSE(dominance_leq(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    CHECK_FALSE(dominance_leq(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
    CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), std::invalid_argument);
}
