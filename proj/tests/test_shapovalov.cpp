#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toroidal/shapovalov.hpp"

using namespace toroidal;

TEST_CASE("partition functions") {
    const PartitionTable t = partition_functions(4);
    CHECK(t.p3 == std::vector<unsigned long>{1, 3, 9, 22, 51});
    // level 1: one monomial per t1-degree in -1..1
    CHECK(t.plus(1, -1) == 1);
    CHECK(t.plus(1, 0) == 1);
    CHECK(t.plus(1, 1) == 1);
    CHECK(t.plus(1, 2) == 0);
    // symmetry
    for (unsigned s = 0; s <= 4; ++s)
        for (long n = -4; n <= 4; ++n) CHECK(t.plus(s, n) == t.plus(s, -n));
    // independent generating-series route
    CHECK(triple_partition_series(4) == t.p3);
    // cumulative counts saturate at the level count
    CHECK(t.cumulative(2, 5) == 9);
    CHECK(t.cumulative(2, -3) == 0);
}

TEST_CASE("level-1 pairing matrix") {
    const GramPair pair = gram_matrices(1);
    REQUIRE(pair.r == std::vector<long>{-1, 0, 1});
    CHECK(pair.g(1, 2) == Poly::parse("-(n+1+alpha)"));
    CHECK(pair.g(2, 2) == Poly::parse("-2*(n+1)"));
    CHECK(pair.g(2, 0) == Poly::parse("0"));
    CHECK(det(pair.g) == Poly::parse("-4*alpha*(alpha+1)"));
    // base-independence of the determinant
    CHECK(det(pair.g).degree_in(default_ctx()->id("n")) == 0);
}

TEST_CASE("interpolated determinant agrees with elimination") {
    const GramPair pair = gram_matrices(2);
    const Poly direct = det(pair.g);
    const Poly interp = gram_determinant(pair.g);
    CHECK(direct == interp);
}

TEST_CASE("suite at levels 1 and 2") {
    const SuiteReport rep = shapovalov_suite(2);
    for (const auto& c : rep.checks) {
        INFO(c.id, " residual: ", c.residual);
        CHECK(c.pass);
    }
}
