#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "toroidal/linalg.hpp"
#include "toroidal/poly.hpp"

using namespace toroidal;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

Poly random_poly(std::mt19937& rng, int max_terms = 4, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coef(-5, 5);
    std::uniform_int_distribution<std::size_t> sym(0, default_ctx()->size() - 1);
    Poly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Mono m;
        for (int v = 0; v < 2; ++v) m.set(default_ctx(), sym(rng), deg(rng));
        p += Poly::monomial(default_ctx(), m, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("substitution examples") {
    const Poly p = P("n - alpha*m");
    CHECK(p.substitute("m", Rational(1)).substitute("n", Rational(0)) == P("-alpha"));
    CHECK(P("alpha^2-1").divexact(P("alpha-1")) == P("alpha+1"));
    CHECK(P("(2+2alpha)*(-2alpha)") == P("-4alpha - 4alpha^2"));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng);
        const Poly val = random_poly(rng, 2, 2);
        const std::map<std::string, Poly> repl{{"m", val}};
        CHECK((a * b).substitute(repl) == a.substitute(repl) * b.substitute(repl));
        CHECK((a + b).substitute(repl) == a.substitute(repl) + b.substitute(repl));
    }
}

TEST_CASE("exact division errors and roundtrip") {
    CHECK_THROWS_AS(P("alpha^2+1").divexact(P("alpha-1")), std::domain_error);
    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        const Poly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK((a * b).divexact(b) == a);
    }
}

TEST_CASE("string round trip") {
    std::mt19937 rng(23);
    for (int i = 0; i < 40; ++i) {
        const Poly a = random_poly(rng);
        CHECK(Poly::parse(a.str()) == a);
    }
    CHECK(P("0").str() == "0");
    CHECK(P("m^2 - 2m + 1").str() == "m^2 - 2*m + 1");
}

TEST_CASE("rational function arithmetic stays reduced") {
    const Poly a = P("alpha"), one = P("1");
    RatFn f(one, a);              // 1/alpha
    RatFn g(a * a - one, a + one);  // (alpha^2-1)/(alpha+1) = alpha - 1
    CHECK(g.is_polynomial());
    CHECK(g.as_poly() == P("alpha-1"));
    RatFn h = f + f;
    CHECK(h.num() == P("2"));
    CHECK(h.den() == a);
    CHECK((f * RatFn(a)).is_polynomial());
}

TEST_CASE("nullspace basics") {
    QMatrix id3(3, 3);
    for (int i = 0; i < 3; ++i) id3(i, i) = 1;
    CHECK(nullspace(id3).empty());

    QMatrix z22(2, 2);
    CHECK(nullspace(z22).size() == 2);

    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix m(4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m(i, j) = Rational(coef(rng));
        const auto basis = nullspace(m);
        CHECK(rank(m) + basis.size() == 6);  // rank-nullity
        for (const auto& v : basis)
            for (std::size_t i = 0; i < 4; ++i) {
                Rational dot(0);
                for (std::size_t j = 0; j < 6; ++j) dot += m(i, j) * v[j];
                CHECK(dot == 0);
            }
    }
}

TEST_CASE("polynomial nullspace is exact") {
    // [[alpha, alpha^2], [1, alpha]] has kernel (alpha, -1)
    PolyMatrix m(2, 2, Poly());
    m(0, 0) = P("alpha");
    m(0, 1) = P("alpha^2");
    m(1, 0) = P("1");
    m(1, 1) = P("alpha");
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) {
        Poly dot;
        for (std::size_t j = 0; j < 2; ++j) dot += m(i, j) * basis[0][j];
        CHECK(dot.is_zero());
    }
}

TEST_CASE("determinants") {
    QMatrix m(3, 3);
    long vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {0, 1, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rational(vals[i][j]);
    CHECK(det(m) == Rational(21));

    PolyMatrix pm(2, 2, Poly());
    pm(0, 0) = P("alpha");
    pm(0, 1) = P("1");
    pm(1, 0) = P("1");
    pm(1, 1) = P("alpha");
    CHECK(det(pm) == P("alpha^2-1"));
}

TEST_CASE("lagrange interpolation") {
    const Poly c = P("alpha + 2");
    // constant family
    std::vector<std::pair<long, std::vector<Poly>>> nodes{
        {-1, {c}}, {0, {c}}, {1, {c}}};
    CHECK(lagrange_interpolate(nodes, 2, "m")[0] == c);
    // symmetric parabola through (-1,1),(0,0),(1,1)
    std::vector<std::pair<long, std::vector<Poly>>> nodes2{
        {-1, {P("1")}}, {0, {P("0")}}, {1, {P("1")}}};
    CHECK(lagrange_interpolate(nodes2, 2, "m")[0] == P("m^2"));
    // re-evaluation at the nodes reproduces inputs exactly
    const Poly q = lagrange_interpolate(nodes2, 2, "m")[0];
    CHECK(q.substitute("m", Rational(-1)) == P("1"));
    CHECK(q.substitute("m", Rational(0)) == P("0"));
    // error paths
    CHECK_THROWS_AS(lagrange_interpolate({{0, {c}}, {0, {c}}}, 1, "m"), std::domain_error);
    CHECK_THROWS_AS(lagrange_interpolate(nodes2, 5, "m"), std::domain_error);
}

TEST_CASE("univariate gcd") {
    const Poly a = P("alpha^2-1"), b = P("alpha^2+2alpha+1");
    const Poly g = gcd_univariate(a, b, default_ctx()->id("alpha"));
    CHECK(g == P("alpha+1"));
}
