#include "toroidal/vertex.hpp"

#include <sstream>

namespace toroidal {

std::string FieldSpec::str(const Ctx& ctx) const {
    switch (kind_) {
        case Kind::d1: return "d1(" + exponent_.str(ctx) + ",z)";
        case Kind::d0: return "d0(" + exponent_.str(ctx) + ",z)";
        case Kind::derivative: return "dz " + a_->str(ctx);
        case Kind::pair: return ":" + a_->str(ctx) + " " + b_->str(ctx) + ":";
    }
    return "";
}

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

AffineExp sym(const std::string& name) { return AffineExp::symbol(default_ctx(), name); }

// Extracts the coefficient of the single expected degree -1 line
// (t0^-1 t1^e d1) vac from a raising image; throws if anything else shows up.
Poly line_coefficient(const PBWVector& v) {
    if (v.is_zero()) return Poly(v.mod() ? v.mod()->ring() : default_ctx());
    if (v.terms().size() != 1) throw std::logic_error("raising image is not a single line");
    const auto& [key, c] = *v.terms().begin();
    if (key.mono.length() != 1 || key.mono.factors[0].first.t0 != -1 ||
        key.mono.factors[0].first.dir != 1)
        throw std::logic_error("raising image escaped the degree -1 layer");
    return c;
}

// Expands each tuple entry in the given symbols and stacks one row.
void append_span_row(PolyMatrix& mat, const std::vector<Poly>& tuple,
                     const std::vector<std::size_t>& ids, const std::vector<uint64_t>& col_keys) {
    const Ctx& ctx = tuple.empty() ? default_ctx() : tuple[0].ctx();
    std::vector<Poly> row;
    for (std::size_t comp = 0; comp < tuple.size(); ++comp) {
        auto parts = split_by_symbols(tuple[comp], ids);
        for (uint64_t key : col_keys) {
            auto it = parts.find(key);
            row.push_back(it == parts.end() ? Poly(ctx) : it->second);
        }
    }
    mat.append_row(row);
}

// Quadratic combination c1 :d1(1)d1(m-1): + c0 :d1(0)d1(m): + cm1 :d1(-1)d1(m+1):
// with the exponent family centered at `center`.
FieldCombo quadratic_combo(const Poly& c1, const Poly& c0, const Poly& cm1,
                           const AffineExp& center) {
    FieldCombo combo;
    combo.add(c1, FieldSpec::pair(FieldSpec::d1(AffineExp::constant(1)),
                                  FieldSpec::d1(center + (-1))));
    combo.add(c0, FieldSpec::pair(FieldSpec::d1(AffineExp::constant(0)), FieldSpec::d1(center)));
    combo.add(cm1, FieldSpec::pair(FieldSpec::d1(AffineExp::constant(-1)),
                                   FieldSpec::d1(center + 1)));
    return combo;
}

FieldSpec triple(const AffineExp& a, const AffineExp& b, const AffineExp& c) {
    return FieldSpec::pair(FieldSpec::d1(a), FieldSpec::pair(FieldSpec::d1(b), FieldSpec::d1(c)));
}

std::string residual_string(const PBWVector& v) { return v.is_zero() ? "" : v.str(); }

} // namespace

PolyMatrix cubic_kernel_matrix(const Ctx& ctx) {
    PolyMatrix a(3, 3, Poly(ctx));
    const Poly m = Poly::variable("m", ctx);
    auto f = [&](long u, long v, long w) {
        return (m + Poly::constant(Rational(u), ctx)) * (m + Poly::constant(Rational(v), ctx)) *
               (m + Poly::constant(Rational(w), ctx));
    };
    a(0, 0) = f(0, -1, -2);
    a(0, 1) = f(0, -1, -2) * Rational(-2);
    a(0, 2) = f(-3, -2, 2);
    a(1, 0) = f(-1, -2, 3) * Rational(-2);
    a(1, 1) = f(0, -2, 2) * Rational(4);
    a(1, 2) = f(-3, 1, 2) * Rational(-2);
    a(2, 0) = f(-2, 2, 3);
    a(2, 1) = f(0, 1, 2) * Rational(-2);
    a(2, 2) = f(0, 1, 2);
    return a;
}

PolyMatrix cubic_reduction_matrix(const Ctx& ctx) {
    const Poly r = Poly::variable("r", ctx), k = Poly::variable("k", ctx);
    const Poly c = r * r + Rational(2) * r * k + Rational(3) * k * k;
    const Poly one = Poly::constant(Rational(1), ctx);
    PolyMatrix inner(3, 3, Poly(ctx));
    inner(0, 0) = c + r - k;
    inner(0, 1) = (c + Rational(4) * r + Rational(2) * k) * Rational(-2);
    inner(0, 2) = c + Rational(7) * r + Rational(5) * k + Rational(6) * one;
    inner(1, 0) = (c - Rational(3) * r - Rational(3) * k) * Rational(-2);
    inner(1, 1) = (c - Rational(3) * one) * Rational(4);
    inner(1, 2) = (c + Rational(3) * r + Rational(3) * k) * Rational(-2);
    inner(2, 0) = c - Rational(7) * r - Rational(5) * k + Rational(6) * one;
    inner(2, 1) = (c - Rational(4) * r - Rational(2) * k) * Rational(-2);
    inner(2, 2) = c - r + k;
    const Poly diag[3] = {r * (r - one), (r - one) * (r + one), r * (r + one)};
    PolyMatrix b(3, 3, Poly(ctx));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) b(i, j) = diag[i] * inner(i, j) * Rational(1, 12);
    return b;
}

SuiteReport subradical_deg2() {
    SuiteReport rep{"subradical-deg2", {}};
    const Ctx& ctx = default_ctx();
    const ModCtx mod = InducedModule::vacuum_module(AlgebraKind::D, ctx);
    const TopVector vac = TopVector::vac();
    const AffineExp m = sym("m"), r = sym("r"), s = sym("s");

    auto X = [&](const AffineExp& first) {
        return mod->monomial_vector<Poly>({deriv1(-1, first), deriv1(-1, m - first)}, vac);
    };
    const PBWVector e_d0 = mod->monomial_vector<Poly>({deriv0(-2, m)}, vac);
    const PBWVector e_d1 = mod->monomial_vector<Poly>({deriv1(-2, m)}, vac);
    const PBWVector x_r = X(r);

    auto psi = [&](const PBWVector& v) -> std::vector<Poly> {
        return {line_coefficient(mod->act(deriv0(1, s), v)),
                line_coefficient(mod->act(deriv1(1, s), v))};
    };

    const PBWVector rhs_sugawara = X(AffineExp::constant(1)) * Rational(1, 4) +
                                   X(AffineExp::constant(0)) * Rational(-1, 2) +
                                   X(AffineExp::constant(-1)) * Rational(1, 4);
    const PBWVector rhs_derivative = X(AffineExp::constant(1)) * P("-(m+1)/2") +
                                     X(AffineExp::constant(0)) * P("m") +
                                     X(AffineExp::constant(-1)) * P("-(m-1)/2");
    const PBWVector rhs_quadratic = X(AffineExp::constant(1)) * P("(r^2+r)/2") +
                                    X(AffineExp::constant(0)) * P("-(r-1)*(r+1)") +
                                    X(AffineExp::constant(-1)) * P("(r^2-r)/2");

    auto relation_check = [&](const std::string& id, const PBWVector& lhs, const PBWVector& rhs) {
        const auto img = psi(lhs - rhs);
        CheckResult c{id, {}, img[0].is_zero() && img[1].is_zero(), ""};
        if (!c.pass) c.residual = img[0].str() + " | " + img[1].str();
        rep.add(std::move(c));
    };
    relation_check("deg2-sugawara-reduction", e_d0, rhs_sugawara);
    relation_check("deg2-derivative-reduction", e_d1, rhs_derivative);
    relation_check("deg2-quadratic-reduction", x_r, rhs_quadratic);

    // The image span over all integer values of the family parameter is the
    // span of its coefficient slices in r; columns enumerate s-powers per
    // raising direction.
    const std::vector<std::size_t> ids_s{ctx->id("s")};
    std::vector<uint64_t> keys_s;
    for (unsigned ds = 0; ds <= 2; ++ds) keys_s.push_back(Mono::var(ctx, ctx->id("s"), ds).key());
    const std::size_t r_id = ctx->id("r");
    auto append_r_slices = [&](PolyMatrix& mat, const std::vector<Poly>& tuple) {
        for (unsigned dr = 0; dr <= 2; ++dr) {
            std::vector<Poly> slice;
            bool nonzero = false;
            for (const auto& comp : tuple) {
                slice.push_back(comp.coefficient_of(r_id, dr));
                nonzero = nonzero || !slice.back().is_zero();
            }
            if (nonzero) append_span_row(mat, slice, ids_s, keys_s);
        }
    };

    PolyMatrix span;
    append_r_slices(span, psi(e_d0));
    append_r_slices(span, psi(e_d1));
    append_r_slices(span, psi(x_r));
    const std::size_t rank_images = rank(span);
    rep.add(CheckResult{"deg2-quotient-dimension",
                        {{"dimension", std::to_string(rank_images)}},
                        rank_images == 3,
                        rank_images == 3 ? "" : "rank != 3"});

    const Poly s_p = P("s"), m_p = P("m");
    append_span_row(span, {Poly(ctx), Poly::constant(Rational(1), ctx)}, ids_s, keys_s);
    append_span_row(span, {Poly::constant(Rational(2), ctx), s_p}, ids_s, keys_s);
    append_span_row(span, {Rational(2) * s_p + m_p, s_p * s_p}, ids_s, keys_s);
    const bool same_span = rank(span) == 3;
    rep.add(CheckResult{"deg2-image-span-matches", {}, same_span, same_span ? "" : "span differs"});

    PolyMatrix gen_span;
    for (long e = -1; e <= 1; ++e) append_span_row(gen_span, psi(X(AffineExp::constant(e))), ids_s, keys_s);
    const bool gens_span = rank(gen_span) == 3;
    rep.add(CheckResult{"deg2-spanned-by-loop-exponents", {}, gens_span,
                        gens_span ? "" : "rank < 3"});
    return rep;
}

SuiteReport subradical_deg3() {
    SuiteReport rep{"subradical-deg3", {}};
    const Ctx& ctx = default_ctx();
    const ModCtx mod = InducedModule::vacuum_module(AlgebraKind::H, ctx);
    const TopVector vac = TopVector::vac();
    const AffineExp m = sym("m"), r = sym("r"), k = sym("k"), s = sym("s"), u = sym("u");

    auto X3 = [&](const AffineExp& a, const AffineExp& b) {
        return mod->monomial_vector<Poly>({deriv1(-1, a), deriv1(-1, b), deriv1(-1, m - a - b)},
                                          vac);
    };

    // one degree-2 jump and the ordered degree-1 pair, with independent
    // formal exponents; both land in the degree -1 layer
    auto images = [&](const PBWVector& v) -> std::vector<Poly> {
        return {line_coefficient(mod->act(deriv1(2, s), v)),
                line_coefficient(mod->act(deriv1(1, s), mod->act(deriv1(1, u), v)))};
    };

    std::vector<PBWVector> spanning;
    std::vector<std::vector<Poly>> image_tuples;
    for (long i = -1; i <= 1; ++i)
        for (long j = -1; j <= 1; ++j) {
            spanning.push_back(X3(AffineExp::constant(i), AffineExp::constant(j)));
            image_tuples.push_back(images(spanning.back()));
        }

    const std::vector<std::size_t> ids_su{ctx->id("s"), ctx->id("u")};
    std::vector<uint64_t> col_keys;
    for (unsigned ds = 0; ds <= 4; ++ds)
        for (unsigned du = 0; du <= 4; ++du) {
            Mono mn;
            mn.set(ctx, ctx->id("s"), ds);
            mn.set(ctx, ctx->id("u"), du);
            col_keys.push_back(mn.key());
        }
    PolyMatrix by_vector;
    for (const auto& tuple : image_tuples) append_span_row(by_vector, tuple, ids_su, col_keys);
    PolyMatrix constraint(by_vector.cols(), by_vector.rows(), Poly(ctx));
    for (std::size_t i = 0; i < by_vector.rows(); ++i)
        for (std::size_t j = 0; j < by_vector.cols(); ++j) constraint(j, i) = by_vector(i, j);

    const std::size_t rk = rank(constraint);
    rep.add(CheckResult{
        "deg3-rank", {{"rank", std::to_string(rk)}}, rk == 8, rk == 8 ? "" : "rank != 8"});

    const auto kernel = nullspace(constraint);
    bool kernel_matches = kernel.size() == 1;
    if (kernel_matches) {
        const PolyMatrix a = cubic_kernel_matrix(ctx);
        std::vector<Poly> a_flat;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a_flat.push_back(a(i, j));
        for (std::size_t p = 0; p < 9 && kernel_matches; ++p)
            for (std::size_t q = p + 1; q < 9 && kernel_matches; ++q)
                kernel_matches = (kernel[0][p] * a_flat[q] == kernel[0][q] * a_flat[p]);
    }
    rep.add(CheckResult{"deg3-kernel-is-cubic-relation", {}, kernel_matches,
                        kernel_matches ? "" : "kernel not proportional to the stated matrix"});

    const PolyMatrix b = cubic_reduction_matrix(ctx);
    PBWVector rhs(mod);
    for (long i = -1; i <= 1; ++i)
        for (long j = -1; j <= 1; ++j)
            rhs = rhs + spanning[static_cast<std::size_t>((i + 1) * 3 + (j + 1))] *
                            b(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1));
    const PBWVector lhs = X3(r, k);
    const auto diff_images = images(lhs - rhs);
    const bool reduction_ok = diff_images[0].is_zero() && diff_images[1].is_zero();
    rep.add(CheckResult{"deg3-general-reduction", {}, reduction_ok,
                        reduction_ok ? "" : diff_images[0].str() + " | " + diff_images[1].str()});

    std::map<std::string, Poly> at10{{"r", Poly::constant(Rational(1), ctx)}, {"k", Poly(ctx)}};
    PBWVector rhs10(mod);
    for (long i = -1; i <= 1; ++i)
        for (long j = -1; j <= 1; ++j)
            rhs10 = rhs10 +
                    spanning[static_cast<std::size_t>((i + 1) * 3 + (j + 1))] *
                        b(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1))
                            .substitute(at10);
    const PBWVector lhs10 = X3(AffineExp::constant(1), AffineExp::constant(0));
    const bool taut = (lhs10 - rhs10).is_zero();
    rep.add(CheckResult{"deg3-reduction-fixes-basis",
                        {{"r", "1"}, {"k", "0"}},
                        taut,
                        taut ? "" : residual_string(lhs10 - rhs10)});
    return rep;
}

SuiteReport verify_top_moments() {
    SuiteReport rep{"top-moments", {}};
    const Ctx& ctx = default_ctx();
    const ModCtx mod = InducedModule::weight_module(AlgebraKind::H, ctx);
    const AffineExp m = sym("m"), r = sym("r"), k = sym("k");
    const auto vn = mod->top_vector<Poly>(TopVector::weight(0L));

    // quadratic series: the reduction residue of :d1(r)d1(m-r):
    FieldCombo quad;
    quad.add(Poly::constant(Rational(1), ctx),
             FieldSpec::pair(FieldSpec::d1(r), FieldSpec::d1(m - r)));
    quad.add(P("-(r^2+r)/2"), FieldSpec::pair(FieldSpec::d1(1L), FieldSpec::d1(m + (-1))));
    quad.add(P("(r-1)*(r+1)"), FieldSpec::pair(FieldSpec::d1(0L), FieldSpec::d1(m)));
    quad.add(P("-(r^2-r)/2"), FieldSpec::pair(FieldSpec::d1(-1L), FieldSpec::d1(m + 1)));
    const PBWVector q_res = apply_mode(mod, quad, -2, vn);
    rep.add(CheckResult{"quadratic-series-kills-top", {}, q_res.is_zero(), residual_string(q_res)});

    // cubic series: the general triple minus its reduction
    const PolyMatrix b = cubic_reduction_matrix(ctx);
    FieldCombo cubic;
    cubic.add(Poly::constant(Rational(1), ctx), triple(r, k, m - r - k));
    for (long i = -1; i <= 1; ++i)
        for (long j = -1; j <= 1; ++j)
            cubic.add(-b(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1)),
                      triple(AffineExp::constant(i), AffineExp::constant(j), m + (-i) + (-j)));
    const PBWVector c_res = apply_mode(mod, cubic, -3, vn);
    rep.add(CheckResult{"cubic-reduction-series-kills-top", {}, c_res.is_zero(),
                        residual_string(c_res)});

    // cubic kernel series
    const PolyMatrix a = cubic_kernel_matrix(ctx);
    FieldCombo kern;
    for (long i = -1; i <= 1; ++i)
        for (long j = -1; j <= 1; ++j)
            kern.add(a(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1)),
                     triple(AffineExp::constant(i), AffineExp::constant(j), m + (-i) + (-j)));
    const PBWVector k_res = apply_mode(mod, kern, -3, vn);
    rep.add(CheckResult{"cubic-kernel-series-kills-top", {}, k_res.is_zero(),
                        residual_string(k_res)});

    // negative controls: a perturbed coefficient must break each identity
    FieldCombo quad_bad = quad;
    quad_bad.terms[1].first += Poly::constant(Rational(1), ctx);
    rep.add(CheckResult{"quadratic-negative-control", {},
                        !apply_mode(mod, quad_bad, -2, vn).is_zero(), ""});
    FieldCombo cubic_bad = cubic;
    cubic_bad.terms[4].first += Poly::constant(Rational(1), ctx);
    rep.add(CheckResult{"cubic-negative-control", {},
                        !apply_mode(mod, cubic_bad, -3, vn).is_zero(), ""});
    return rep;
}

SuiteReport remark_consistency() {
    SuiteReport rep{"remark-consistency", {}};
    const Ctx& ctx = default_ctx();
    const ModCtx mod = InducedModule::vacuum_module(AlgebraKind::D, ctx);
    const TopVector vac = TopVector::vac();
    const AffineExp m = sym("m"), r = sym("r");
    const Poly r_p = P("r"), m_p = P("m");

    auto X = [&](const AffineExp& first) {
        return mod->monomial_vector<Poly>({deriv1(-1, first), deriv1(-1, m - first)}, vac);
    };
    auto rhs_quadratic = [&](const Poly& rv) {
        const Poly one = Poly::constant(Rational(1), ctx);
        return X(AffineExp::constant(1)) * (rv * (rv + one) * Rational(1, 2)) +
               X(AffineExp::constant(0)) * (-(rv - one) * (rv + one)) +
               X(AffineExp::constant(-1)) * (rv * (rv - one) * Rational(1, 2));
    };
    auto derive = [&](const AffineExp& m_e, const AffineExp& r_e, const Poly& rv) {
        if ((m_e - r_e - r_e).is_zero())
            throw std::domain_error("bracket substitution requires m - 2r != 0");
        return rhs_quadratic(rv) - rhs_quadratic(m_p - rv);
    };

    const PBWVector lhs = derive(m, r, r_p);
    const PBWVector rhs_derivative = X(AffineExp::constant(1)) * P("-(m+1)/2") +
                                     X(AffineExp::constant(0)) * P("m") +
                                     X(AffineExp::constant(-1)) * P("-(m-1)/2");
    const PBWVector diff = lhs - rhs_derivative * (m_p - Rational(2) * r_p);
    rep.add(CheckResult{"bracket-substitution-derives-derivative-reduction", {}, diff.is_zero(),
                        residual_string(diff)});

    const PBWVector lhs0 = derive(m, AffineExp::constant(0), Poly(ctx));
    const PBWVector diff0 = lhs0 - rhs_derivative * m_p;
    rep.add(CheckResult{
        "bracket-substitution-r0", {{"r", "0"}}, diff0.is_zero(), residual_string(diff0)});

    bool rejected = false;
    try {
        derive(r + r, r, r_p);
    } catch (const std::domain_error&) {
        rejected = true;
    }
    rep.add(CheckResult{"degenerate-denominator-rejected", {}, rejected, ""});
    return rep;
}

SuiteReport verify_commutators(long mode_window, long t1_window, unsigned depth_cut) {
    SuiteReport rep{"commutators", {}};
    const Ctx& ctx = default_ctx();

    struct Instance {
        std::string name;
        ModCtx mod;
        long t1_bound;
        bool with_d0;
    };
    const std::vector<Instance> instances = {
        {"loop-weight", InducedModule::weight_module(AlgebraKind::L, ctx), 1, false},
        {"vacuum-full", InducedModule::vacuum_module(AlgebraKind::D, ctx), t1_window, true},
        {"vacuum-horizontal", InducedModule::vacuum_module(AlgebraKind::H, ctx), t1_window, false},
        {"vacuum-loop", InducedModule::vacuum_module(AlgebraKind::L, ctx), 1, false},
    };

    for (const auto& inst : instances) {
        std::vector<PBWVector> basis;
        for (unsigned s = 0; s <= depth_cut; ++s) {
            for (long w = -inst.t1_bound * static_cast<long>(depth_cut);
                 w <= inst.t1_bound * static_cast<long>(depth_cut); ++w) {
                std::optional<std::pair<long, long>> window;
                if (inst.mod->algebra() != AlgebraKind::L)
                    window = std::make_pair(-inst.t1_bound, inst.t1_bound);
                for (auto& v : weight_basis(inst.mod, s, w, window)) basis.push_back(std::move(v));
                if (inst.mod->top_kind() == TopKind::weight) break;  // offsets shift with n
            }
        }

        long failures = 0, count = 0;
        std::string first_residual;
        for (long me = -inst.t1_bound; me <= inst.t1_bound; ++me)
            for (long re = -inst.t1_bound; re <= inst.t1_bound; ++re)
                for (int kind = 0; kind < (inst.with_d0 ? 3 : 1); ++kind)
                    for (long p = -mode_window; p <= mode_window; ++p)
                        for (long q = -mode_window; q <= mode_window; ++q) {
                            BasisDeriv A, B;
                            LieElement expect(ctx);
                            const AffineExp mexp = AffineExp::constant(me),
                                            rexp = AffineExp::constant(re);
                            if (kind == 0) {  // two d1-type fields
                                A = deriv1(-p - 1, mexp);
                                B = deriv1(-q - 1, rexp);
                                expect.add_term(deriv1(-p - q - 2, mexp + rexp),
                                                Poly::constant(Rational(re - me), ctx));
                            } else if (kind == 1) {  // d1 against d0
                                A = deriv1(-p - 1, mexp);
                                B = deriv0(-q - 2, rexp);
                                expect.add_term(deriv0(-p - q - 3, mexp + rexp),
                                                Poly::constant(Rational(re), ctx));
                                expect.add_term(deriv1(-p - q - 3, mexp + rexp),
                                                Poly::constant(Rational(p + 1), ctx));
                            } else {  // two d0-type fields
                                A = deriv0(-p - 2, mexp);
                                B = deriv0(-q - 2, rexp);
                                expect.add_term(deriv0(-p - q - 4, mexp + rexp),
                                                Poly::constant(Rational(p - q), ctx));
                            }
                            for (const auto& w : basis) {
                                const auto lhs = inst.mod->act(A, inst.mod->act(B, w)) -
                                                 inst.mod->act(B, inst.mod->act(A, w));
                                const auto rhs = inst.mod->act(expect, w);
                                const auto d = lhs - rhs;
                                ++count;
                                if (!d.is_zero()) {
                                    ++failures;
                                    if (first_residual.empty()) first_residual = d.str();
                                }
                            }
                        }
        rep.add(CheckResult{"mode-commutators-" + inst.name,
                            {{"instances", std::to_string(count)},
                             {"basis", std::to_string(basis.size())}},
                            failures == 0,
                            first_residual});
    }
    return rep;
}

SuiteReport verify_field_identities(unsigned depth_cut, long t1_window, long mode_window) {
    SuiteReport rep{"field-identities", {}};
    const Ctx& ctx = default_ctx();
    const AffineExp m = sym("m"), r = sym("r");
    const std::vector<std::string> fresh_all{"s", "r", "k", "u"};
    const std::vector<std::string> fresh_no_r{"s", "k", "u"};

    struct Identity {
        std::string id;
        ModCtx mod;
        FieldCombo lhs;
        FieldCombo rhs;
        std::vector<std::string> fresh;
    };
    std::vector<Identity> identities;

    {  // d0 field expressed through the quadratic combination
        const ModCtx mod = InducedModule::weight_module(AlgebraKind::D, ctx);
        FieldCombo lhs;
        lhs.add(Poly::constant(Rational(1), ctx), FieldSpec::d0(m));
        identities.push_back({"sugawara-field", mod, lhs,
                              quadratic_combo(P("1/4"), P("-1/2"), P("1/4"), m), fresh_all});
    }
    {  // z-derivative of the d1 field
        const ModCtx mod = InducedModule::weight_module(AlgebraKind::H, ctx);
        FieldCombo lhs;
        lhs.add(Poly::constant(Rational(1), ctx), FieldSpec::derivative(FieldSpec::d1(m)));
        identities.push_back({"derivative-field", mod, lhs,
                              quadratic_combo(P("-(m+1)/2"), P("m"), P("-(m-1)/2"), m), fresh_all});
    }
    {  // general quadratic contraction
        const ModCtx mod = InducedModule::weight_module(AlgebraKind::H, ctx);
        FieldCombo lhs;
        lhs.add(Poly::constant(Rational(1), ctx),
                FieldSpec::pair(FieldSpec::d1(r), FieldSpec::d1(m - r)));
        identities.push_back({"quadratic-field", mod, lhs,
                              quadratic_combo(P("(r^2+r)/2"), P("-(r-1)*(r+1)"), P("(r^2-r)/2"), m),
                              fresh_no_r});
    }

    for (const auto& ident : identities) {
        long exact = 0, certified = 0, failures = 0;
        std::string first_residual;
        std::vector<PBWVector> basis;
        for (unsigned s = 0; s <= depth_cut; ++s) {
            std::optional<std::pair<long, long>> window = std::make_pair(-t1_window, t1_window);
            for (auto& v : weight_basis(ident.mod, s, 0, window)) basis.push_back(std::move(v));
        }
        for (const auto& w : basis) {
            const long d = depth_below_top(w);
            for (long p = -d - 2; p <= -d - 2 + static_cast<long>(depth_cut); ++p) {
                if (p < -mode_window - 2 || p > mode_window) continue;
                const auto diff =
                    apply_mode(ident.mod, ident.lhs, p, w) - apply_mode(ident.mod, ident.rhs, p, w);
                if (diff.is_zero()) {
                    ++exact;
                    continue;
                }
                const long deg = depth_below_top(diff);
                const auto residuals =
                    radical_residuals(ident.mod, diff, static_cast<unsigned>(deg), ident.fresh);
                if (residuals.empty()) {
                    ++certified;
                } else {
                    ++failures;
                    if (first_residual.empty())
                        first_residual =
                            residuals.front().first + " -> " + residuals.front().second;
                }
            }
        }
        rep.add(CheckResult{ident.id,
                            {{"exact", std::to_string(exact)},
                             {"modulo-radical", std::to_string(certified)}},
                            failures == 0,
                            first_residual});
    }

    // r = 1 collapses the quadratic contraction to a tautology: the
    // reduction coefficients become (1, 0, 0)
    const Poly r1 = Poly::constant(Rational(1), ctx);
    const bool taut = P("(r^2+r)/2").substitute("r", Rational(1)) == r1 &&
                      P("-(r-1)*(r+1)").substitute("r", Rational(1)).is_zero() &&
                      P("(r^2-r)/2").substitute("r", Rational(1)).is_zero();
    rep.add(CheckResult{"quadratic-field-r1-tautology", {{"r", "1"}}, taut, ""});
    return rep;
}

} // namespace toroidal
