#include "toroidal/casimir.hpp"

namespace toroidal {

WittModule::WittModule(Ctx ctx, std::string x_symbol, Poly alpha)
    : ctx_(std::move(ctx)), x_(std::move(x_symbol)), alpha_(std::move(alpha)) {
    require_same_ctx(ctx_, alpha_.ctx());
    ctx_->id(x_);  // validate
}

Poly WittModule::act(const Poly& m_index, const Poly& p) const {
    require_same_ctx(ctx_, p.ctx());
    const Poly x = Poly::variable(x_, ctx_);
    const Poly shifted = p.substitute(x_, x + m_index);
    return (alpha_ * m_index - x) * shifted;
}

Poly WittModule::f_power_vacuum(unsigned k) const {
    Poly p = Poly::constant(Rational(1), ctx_);
    for (unsigned i = 0; i < k; ++i) p = f(p);
    return p;
}

TensorCasimir::TensorCasimir(WittModule first, WittModule second)
    : first_(std::move(first)), second_(std::move(second)) {
    require_same_ctx(first_.ctx(), second_.ctx());
    if (first_.x() == second_.x())
        throw std::domain_error("tensor factors need distinct symbols");
}

Poly TensorCasimir::apply(const Poly& p) const {
    const Ctx& ctx = first_.ctx();
    const Poly x = Poly::variable(first_.x(), ctx), y = Poly::variable(second_.x(), ctx);
    const Poly one = Poly::constant(Rational(1), ctx);
    const Poly& a1 = first_.alpha();
    const Poly& a2 = second_.alpha();
    const Poly up = p.substitute({{first_.x(), x + one}, {second_.x(), y - one}});
    const Poly down = p.substitute({{first_.x(), x - one}, {second_.x(), y + one}});
    return (x - a1) * (y + a2) * up * Rational(-1, 2) + x * y * p +
           (x + a1) * (y - a2) * down * Rational(-1, 2);
}

Poly TensorCasimir::omega(unsigned n) const {
    const Ctx& ctx = first_.ctx();
    const Rational nq(static_cast<long>(n));
    const Poly& a1 = first_.alpha();
    const Poly& a2 = second_.alpha();
    return Poly::constant(nq * nq / 2, ctx) -
           (a1 + a2 + Poly::constant(Rational(1, 2), ctx)) * nq + a1 * a2;
}

std::vector<Poly> TensorCasimir::block_coordinates(unsigned n, const Poly& p) const {
    const Ctx& ctx = first_.ctx();
    const std::size_t xid = ctx->id(first_.x()), yid = ctx->id(second_.x());
    std::vector<Poly> basis;
    for (unsigned k = 0; k <= n; ++k)
        basis.push_back(first_.f_power_vacuum(k) * second_.f_power_vacuum(n - k));
    // The top part of the k-th basis vector is 2^n x^k y^(n-k); read the
    // coordinates off the top coefficients, then certify membership.
    Rational two_n(1);
    for (unsigned i = 0; i < n; ++i) two_n *= 2;
    std::vector<Poly> coords;
    Poly residue = p;
    for (unsigned k = 0; k <= n; ++k) {
        Poly c(ctx);
        for (const auto& [mono, q] : p.terms())
            if (mono.get(xid) == k && mono.get(yid) == n - k) {
                Mono rest = mono;
                rest.set(ctx, xid, 0);
                rest.set(ctx, yid, 0);
                c += Poly::monomial(ctx, rest, q / two_n);
            }
        coords.push_back(c);
        residue -= c * basis[k];
    }
    if (!residue.is_zero()) throw std::domain_error("vector escapes the tensor block");
    return coords;
}

PolyMatrix TensorCasimir::block_matrix(unsigned n) const {
    const Ctx& ctx = first_.ctx();
    PolyMatrix mat(n + 1, n + 1, Poly(ctx));
    for (unsigned k = 0; k <= n; ++k) {
        const Poly bk = first_.f_power_vacuum(k) * second_.f_power_vacuum(n - k);
        const auto col = block_coordinates(n, apply(bk));
        for (unsigned i = 0; i <= n; ++i) mat(i, k) = col[i];
    }
    return mat;
}

Ctx casimir_ctx() {
    static const Ctx ctx = std::make_shared<RingContext>(
        std::vector<std::string>{"a1", "a2", "x", "y", "lambda", "m", "r"},
        std::vector<bool>(7, false));
    return ctx;
}

namespace {

void check(SuiteReport& rep, const std::string& id, bool pass, const std::string& residual = "",
           std::map<std::string, std::string> params = {}) {
    rep.add(CheckResult{id, std::move(params), pass, pass ? "" : residual});
}

} // namespace

SuiteReport casimir_suite(unsigned max_n) {
    SuiteReport rep{"casimir", {}};
    const Ctx ctx = casimir_ctx();
    const Poly a1 = Poly::variable("a1", ctx), a2 = Poly::variable("a2", ctx);
    const Poly x = Poly::variable("x", ctx), y = Poly::variable("y", ctx);
    const Poly one = Poly::constant(Rational(1), ctx);
    const WittModule wx(ctx, "x", a1), wy(ctx, "y", a2);

    // representation identity with formal indices on a test space
    {
        const Poly m = Poly::variable("m", ctx), r = Poly::variable("r", ctx);
        bool ok = true;
        std::string res;
        for (const Poly& p : {one, x, x * x, x * x * x - x}) {
            const Poly lhs = wx.act(m, wx.act(r, p)) - wx.act(r, wx.act(m, p));
            const Poly rhs = wx.act(m + r, p) * (r - m);
            if (lhs != rhs && res.empty()) {
                ok = false;
                res = (lhs - rhs).str();
            }
        }
        check(rep, "circle-action-is-a-representation", ok, res);
    }

    // sl2 relations as operator identities on polynomials of degree <= max_n
    {
        bool ok = true;
        std::string res;
        for (unsigned d = 0; d <= max_n && ok; ++d) {
            const Poly p = x.pow(d);
            const Poly c1 = wx.h(wx.e(p)) - wx.e(wx.h(p)) - wx.e(p) * Rational(2);
            const Poly c2 = wx.h(wx.f(p)) - wx.f(wx.h(p)) + wx.f(p) * Rational(2);
            const Poly c3 = wx.e(wx.f(p)) - wx.f(wx.e(p)) - wx.h(p);
            if (!c1.is_zero() || !c2.is_zero() || !c3.is_zero()) {
                ok = false;
                res = c1.str() + "|" + c2.str() + "|" + c3.str();
            }
        }
        check(rep, "sl2-triple-relations", ok, res);
    }

    // highest-weight data: h 1 = 2 a1, e 1 = 0
    check(rep, "cartan-on-vacuum", wx.h(one) == a1 * Rational(2), wx.h(one).str());
    check(rep, "raising-kills-vacuum", wx.e(one).is_zero(), wx.e(one).str());

    // f-powers have one new leading term per degree
    {
        bool ok = true;
        Rational lead(1);
        for (unsigned k = 0; k <= max_n; ++k) {
            const Poly fk = wx.f_power_vacuum(k);
            ok = ok && fk.degree_in(ctx->id("x")) == k &&
                 fk.coefficient_of(ctx->id("x"), k) == Poly::constant(lead, ctx);
            lead *= 2;
        }
        check(rep, "f-powers-form-a-graded-basis", ok);
    }

    const TensorCasimir omega(wx, wy);

    // spectrum on each block: the characteristic polynomial factors into
    // the closed-form eigenvalues exactly
    {
        bool ok = true;
        std::string res;
        for (unsigned n = 0; n <= max_n && ok; ++n) {
            const PolyMatrix m = omega.block_matrix(n);
            Poly cp = char_poly(m, "lambda");
            for (unsigned j = 0; j <= n && ok; ++j) {
                const Poly factor = Poly::variable("lambda", ctx) - omega.omega(j);
                auto q = cp.try_divexact(factor);
                if (!q) {
                    ok = false;
                    res = "block " + std::to_string(n) + " misses eigenvalue " +
                          omega.omega(j).str();
                } else {
                    cp = *q;
                }
            }
            if (ok && !(cp == Poly::constant(Rational(1), ctx))) {
                ok = false;
                res = "non-monic remainder " + cp.str();
            }
        }
        check(rep, "block-spectrum-matches-eigenvalue-formula", ok, res,
              {{"max_n", std::to_string(max_n)}});
    }

    // the vacuum eigenvalue a1 a2
    check(rep, "vacuum-eigenvalue", omega.apply(one) == a1 * a2, omega.apply(one).str());

    // trace identity: tr(Omega) = 1/4 tr(h (x) h) = sum of eigenvalues
    {
        bool ok = true;
        std::string res;
        for (unsigned n = 0; n <= max_n && ok; ++n) {
            const PolyMatrix m = omega.block_matrix(n);
            Poly tr(ctx), tr_hh(ctx);
            for (unsigned k = 0; k <= n; ++k) {
                tr += m(k, k);
                const Poly bk = wx.f_power_vacuum(k) * wy.f_power_vacuum(n - k);
                const Poly hh = wy.h(wx.h(bk));
                tr_hh += omega.block_coordinates(n, hh)[k];
            }
            const Poly rhs = tr_hh * Rational(1, 4);
            Poly sum_omega(ctx);
            for (unsigned j = 0; j <= n; ++j) sum_omega += omega.omega(j);
            if (tr != rhs || tr != sum_omega) {
                ok = false;
                res = (tr - rhs).str() + " | " + (tr - sum_omega).str();
            }
        }
        check(rep, "trace-identity", ok, res);
    }

    // [Omega, diagonal g] = 0 for g in {h, e, f} on total degree <= 5
    {
        bool ok = true;
        std::string res;
        auto diag = [&](int which, const Poly& p) {
            switch (which) {
                case 0: return wx.h(p) + wy.h(p);
                case 1: return wx.e(p) + wy.e(p);
                default: return wx.f(p) + wy.f(p);
            }
        };
        for (unsigned a = 0; a <= 5 && ok; ++a)
            for (unsigned b = 0; a + b <= 5 && ok; ++b) {
                const Poly p = x.pow(a) * y.pow(b);
                for (int g = 0; g < 3 && ok; ++g) {
                    const Poly c = omega.apply(diag(g, p)) - diag(g, omega.apply(p));
                    if (!c.is_zero()) {
                        ok = false;
                        res = c.str();
                    }
                }
            }
        check(rep, "casimir-commutes-with-diagonal-action", ok, res);
    }

    // the Casimir preserves total degree
    {
        bool ok = true;
        for (unsigned a = 0; a <= 5 && ok; ++a)
            for (unsigned b = 0; a + b <= 5 && ok; ++b) {
                const Poly q = omega.apply(x.pow(a) * y.pow(b));
                unsigned deg = 0;
                for (const auto& [mono, c] : q.terms())
                    deg = std::max(deg, mono.get(ctx->id("x")) + mono.get(ctx->id("y")));
                ok = deg <= a + b;
            }
        check(rep, "casimir-preserves-total-degree", ok);
    }

    // distinct eigenvalues for a symbolic parameter sum
    {
        bool ok = true;
        for (unsigned i = 0; i <= max_n && ok; ++i)
            for (unsigned j = i + 1; j <= max_n && ok; ++j)
                ok = !(omega.omega(i) - omega.omega(j)).is_zero();
        check(rep, "eigenvalues-distinct-symbolically", ok);
    }

    // every earlier eigenvalue recurs in each later block
    {
        bool ok = true;
        for (unsigned n = 1; n <= max_n && ok; ++n) {
            const Poly cp = char_poly(omega.block_matrix(n), "lambda");
            for (unsigned j = 0; j < n && ok; ++j)
                ok = cp.try_divexact(Poly::variable("lambda", ctx) - omega.omega(j)).has_value();
        }
        check(rep, "eigenvalue-multiplicity-grows", ok);
    }

    // alpha = 0: polynomials vanishing at 0 form an invariant subspace,
    // the constants do not, and no shifted analogue exists generically
    {
        const WittModule w0(ctx, "x", Poly(ctx));
        bool invariant = true;
        for (long mi = -3; mi <= 3 && invariant; ++mi)
            for (unsigned d = 1; d <= 4 && invariant; ++d) {
                const Poly img = w0.act(mi, x.pow(d));
                invariant = img.substitute("x", Rational(0)).is_zero();
            }
        check(rep, "alpha-zero-submodule", invariant);
        check(rep, "alpha-zero-complement-not-invariant",
              w0.act(0, one).degree_in(ctx->id("x")) == 1);
        // symbolic alpha: the invariance condition m(alpha m - c) = 0 fails
        bool no_invariant = true;
        const Poly m = Poly::variable("m", ctx);
        for (long c = -2; c <= 2 && no_invariant; ++c) {
            const Poly cond = m * (a1 * m - Poly::constant(Rational(c), ctx));
            no_invariant = !cond.is_zero();
        }
        check(rep, "no-shifted-submodule-for-symbolic-alpha", no_invariant);
    }

    return rep;
}

} // namespace toroidal
