#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "toroidal/lie.hpp"

using namespace toroidal;

namespace {

AffineExp aff(long m_coeff, long c) {
    AffineExp e = AffineExp::constant(c);
    if (m_coeff != 0) e = e + AffineExp::symbol(default_ctx(), "m", m_coeff);
    return e;
}

LieElement random_element(std::mt19937& rng, bool formal, bool d0_allowed) {
    std::uniform_int_distribution<int> nterms(1, 3), t0(-3, 3), t1(-2, 2), mc(-1, 1);
    std::uniform_int_distribution<long> coef(-3, 3);
    LieElement x;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        BasisDeriv d;
        d.t0 = t0(rng);
        d.t1 = formal ? aff(mc(rng), t1(rng)) : AffineExp::constant(t1(rng));
        d.dir = d0_allowed ? (rng() % 2 ? 1 : 0) : 1;
        x.add_term(d, Poly::constant(Rational(coef(rng))));
    }
    return x;
}

} // namespace

TEST_CASE("bracket on basis pairs") {
    // [t0 d1, t0^-1 t1 d1] = t1 d1
    const LieElement b = bracket(default_ctx(), deriv1(1, 0), deriv1(-1, 1));
    LieElement expect;
    expect.add_term(deriv1(0, 1), Poly::constant(Rational(1)));
    CHECK(b == expect);

    // formal exponents: [t0^-1 t1^mu d1, t0^-1 t1^nu d1] = (nu-mu) t0^-2 t1^{mu+nu} d1
    const AffineExp mu = aff(1, 0), nu = aff(1, 1);  // m and m+1
    const LieElement bf = bracket(default_ctx(), deriv1(-1, mu), deriv1(-1, nu));
    LieElement ef;
    ef.add_term(deriv1(-2, mu + nu), (nu - mu).to_poly(default_ctx()));
    CHECK(bf == ef);
}

TEST_CASE("antisymmetry and jacobi") {
    std::mt19937 rng(17);
    for (int i = 0; i < 30; ++i) {
        const bool formal = i % 2 == 0;
        const LieElement x = random_element(rng, formal, true);
        const LieElement y = random_element(rng, formal, true);
        const LieElement z = random_element(rng, formal, true);
        CHECK(bracket(x, x).is_zero());
        CHECK((bracket(x, y) + bracket(y, x)).is_zero());
        const LieElement jac =
            bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("bidegree additivity of the bracket") {
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> t0(-3, 3), t1(-2, 2);
    for (int i = 0; i < 40; ++i) {
        BasisDeriv x{t0(rng), AffineExp::constant(t1(rng)), rng() % 2 ? 1 : 0};
        BasisDeriv y{t0(rng), AffineExp::constant(t1(rng)), rng() % 2 ? 1 : 0};
        const LieElement bxy = bracket(default_ctx(), x, y);
        for (const auto& [d, c] : bxy.terms()) {
            CHECK(d.t0 == x.t0 + y.t0);
            CHECK(d.t1 == x.t1 + y.t1);
        }
    }
}

TEST_CASE("classification") {
    const BasisDeriv d = deriv0(-1, 3);
    CHECK(classify(d, Splitting::vertex) == Part::plus);
    CHECK(classify(d, Splitting::triangular) == Part::minus);
    CHECK(classify(deriv1(0, 5), Splitting::triangular) == Part::zero);
    CHECK(classify(deriv1(0, 5), Splitting::vertex) == Part::plus);
    CHECK(classify(deriv1(-1, 5), Splitting::vertex) == Part::minus);
    CHECK(classify(deriv0(-2, 5), Splitting::vertex) == Part::minus);
}

TEST_CASE("classification respects brackets") {
    // generator pairs within one part stay in that part
    std::vector<BasisDeriv> gens;
    for (long i = -3; i <= 3; ++i)
        for (long e = -2; e <= 2; ++e) {
            gens.push_back(deriv1(i, e));
            gens.push_back(deriv0(i, e));
        }
    for (Splitting s : {Splitting::triangular, Splitting::vertex})
        for (Part p : {Part::plus, Part::minus})
            for (const auto& x : gens)
                for (const auto& y : gens) {
                    if (classify(x, s) != p || classify(y, s) != p) continue;
                    const LieElement bxy = bracket(default_ctx(), x, y);
                    for (const auto& [d, c] : bxy.terms())
                        CHECK(classify(d, s) == p);
                }
}

TEST_CASE("specialization is a Lie homomorphism") {
    // t0^-1 t1^{m+1} d1 at m = 2
    LieElement x;
    x.add_term(deriv1(-1, aff(1, 1)), Poly::constant(Rational(1)));
    const LieElement sx = x.specialize({{"m", 2}});
    LieElement expect;
    expect.add_term(deriv1(-1, 3), Poly::constant(Rational(1)));
    CHECK(sx == expect);

    // (n - alpha m) t0^-1 t1^m d1 at (m,n) = (1,0)
    LieElement y;
    y.add_term(deriv1(-1, aff(1, 0)), Poly::parse("n - alpha*m"));
    const LieElement sy = y.specialize({{"m", 1}, {"n", 0}});
    LieElement ey;
    ey.add_term(deriv1(-1, 1), Poly::parse("-alpha"));
    CHECK(sy == ey);

    std::mt19937 rng(31);
    for (int i = 0; i < 25; ++i) {
        const LieElement a = random_element(rng, true, true);
        const LieElement b = random_element(rng, true, true);
        const std::map<std::string, long> at{{"m", 2}, {"n", -1}};
        CHECK(bracket(a, b).specialize(at) == bracket(a.specialize(at), b.specialize(at)));
    }
}

TEST_CASE("element syntax round trip") {
    for (const std::string s : {"t0^-1 t1^{m+1} d1", "t0^2 d0", "d1", "t1^-2 d0",
                                "t0^-3 t1^{2*m-1} d1", "t1^{n-m} d1"}) {
        const BasisDeriv d = BasisDeriv::parse(s, default_ctx());
        CHECK(BasisDeriv::parse(d.str(default_ctx()), default_ctx()) == d);
    }
    std::mt19937 rng(41);
    for (int i = 0; i < 30; ++i) {
        const LieElement x = random_element(rng, true, true);
        CHECK(LieElement::parse(x.str()) == x);
    }
}
