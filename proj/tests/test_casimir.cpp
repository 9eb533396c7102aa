#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "toroidal/casimir.hpp"

using namespace toroidal;

namespace {
Poly C(const std::string& s) { return Poly::parse(s, casimir_ctx()); }
} // namespace

TEST_CASE("circle action basics") {
    const Ctx ctx = casimir_ctx();
    const WittModule w(ctx, "x", C("a1"));
    // d p(x) = -x p(x)
    CHECK(w.act(0, C("x^2 + 1")) == C("-x^3 - x"));
    // (t d) 1 = a1 - x
    CHECK(w.act(1, C("1")) == C("a1 - x"));
}

TEST_CASE("casimir on the default instance of the coefficient space") {
    // (a1, a2) = (1, alpha) on symbols (m, n) in the main ring
    const Ctx& R = default_ctx();
    const WittModule wm(R, "m", Poly::constant(Rational(1), R));
    const WittModule wn(R, "n", Poly::variable("alpha", R));
    const TensorCasimir omega(wm, wn);
    // Omega(1) = alpha
    CHECK(omega.apply(Poly::constant(Rational(1), R)) == Poly::parse("alpha"));
    // the first-step consistency: (Omega + 1)(n - alpha m) = 0
    const Poly f = Poly::parse("n - alpha*m");
    CHECK((omega.apply(f) + f).is_zero());
    // omega_1 = -1 independently of alpha, omega_2 = -1 - alpha
    CHECK(omega.omega(1) == Poly::parse("-1"));
    CHECK(omega.omega(2) == Poly::parse("-1 - alpha"));
    // Omega preserves span{1, m, n}
    for (const char* s : {"1", "m", "n"}) {
        const Poly img = omega.apply(Poly::parse(s));
        for (const auto& [mono, c] : img.terms()) {
            const unsigned dm = mono.get(R->id("m")), dn = mono.get(R->id("n"));
            CHECK(dm + dn <= 1);
        }
    }
}

TEST_CASE("full casimir suite") {
    const SuiteReport rep = casimir_suite(6);
    for (const auto& c : rep.checks) {
        INFO(c.id, " residual: ", c.residual);
        CHECK(c.pass);
    }
}
