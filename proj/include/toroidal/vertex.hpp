#ifndef TOROIDAL_VERTEX_HPP
#define TOROIDAL_VERTEX_HPP

#include <memory>

#include "toroidal/linalg.hpp"
#include "toroidal/module.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

/// A generating field, a z-derivative, or a normal-ordered product. Triple
/// products are right-nested. The mode conventions are fixed here: the
/// d1-type field carries t0^j at z^{-j-1} and the d0-type field carries
/// t0^j at z^{-j-2}.
class FieldSpec {
public:
    enum class Kind { d1, d0, derivative, pair };

    static FieldSpec d1(AffineExp m) { return FieldSpec(Kind::d1, std::move(m)); }
    static FieldSpec d1(long m) { return d1(AffineExp::constant(m)); }
    static FieldSpec d0(AffineExp m) { return FieldSpec(Kind::d0, std::move(m)); }
    static FieldSpec d0(long m) { return d0(AffineExp::constant(m)); }
    static FieldSpec derivative(FieldSpec a) {
        FieldSpec f(Kind::derivative, AffineExp());
        f.a_ = std::make_shared<FieldSpec>(std::move(a));
        return f;
    }
    static FieldSpec pair(FieldSpec a, FieldSpec b) {
        FieldSpec f(Kind::pair, AffineExp());
        f.a_ = std::make_shared<FieldSpec>(std::move(a));
        f.b_ = std::make_shared<FieldSpec>(std::move(b));
        return f;
    }

    Kind kind() const { return kind_; }
    const AffineExp& exponent() const { return exponent_; }
    const FieldSpec& left() const { return *a_; }
    const FieldSpec& right() const { return *b_; }

    /// Conformal weight; modes below z^{-(weight+depth)} annihilate a
    /// vector of the given depth.
    int weight() const {
        switch (kind_) {
            case Kind::d1: return 1;
            case Kind::d0: return 2;
            case Kind::derivative: return a_->weight() + 1;
            case Kind::pair: return a_->weight() + b_->weight();
        }
        return 0;
    }

    std::string str(const Ctx& ctx) const;

private:
    FieldSpec(Kind k, AffineExp e) : kind_(k), exponent_(std::move(e)) {}
    Kind kind_;
    AffineExp exponent_;
    std::shared_ptr<const FieldSpec> a_, b_;
};

/// Depth of a vector below its top layer: the largest |t0-degree| among
/// its monomials.
template <class S>
long depth_below_top(const BasicPBW<S>& w) {
    long d = 0;
    for (const auto& [key, c] : w.terms()) d = std::max(d, -key.mono.t0_degree());
    return d;
}

/// Exact coefficient of z^p in the field applied to the target. Normal
/// ordering is evaluated as a_+(z) b(z) + b(z) a_-(z); only the finitely
/// many contributing mode products are expanded.
template <class S>
BasicPBW<S> apply_mode(const ModCtx& mod, const FieldSpec& field, long p, const BasicPBW<S>& w);

/// Linear combination of fields with polynomial coefficients.
struct FieldCombo {
    std::vector<std::pair<Poly, FieldSpec>> terms;
    void add(Poly c, FieldSpec f) {
        if (!c.is_zero()) terms.emplace_back(std::move(c), std::move(f));
    }
};

template <class S>
BasicPBW<S> apply_mode(const ModCtx& mod, const FieldCombo& combo, long p, const BasicPBW<S>& w) {
    BasicPBW<S> out(mod);
    for (const auto& [c, f] : combo.terms) {
        BasicPBW<S> piece = apply_mode(mod, f, p, w);
        out = out + piece * scalar_from_poly<S>(c);
    }
    return out;
}

/// --- verification suites ---------------------------------------------------

/// Mode-wise commutator check of the generating-field bracket relations on
/// every basis vector of depth <= depth_cut, all mode pairs with |i|,|j| <=
/// mode_window, t1-exponents in [-t1_window, t1_window].
SuiteReport verify_commutators(long mode_window = 3, long t1_window = 2, unsigned depth_cut = 3);

/// Degree -2 layer of the vacuum module over the full algebra: the raising
/// images with a formal exponent, the dimension-3 quotient certificate, and
/// the three reduction relations.
SuiteReport subradical_deg2();

/// Degree -3 layer of the vacuum module over the horizontal algebra: the
/// rank-8 certificate, the kernel relation against the cubic coefficient
/// matrix, and the general reduction with its diagonal prefactor matrix.
SuiteReport subradical_deg3();

/// The quadratic field relations verified on module vectors: exact
/// equality where both sides land in the top layer, membership of the
/// difference in the graded radical elsewhere.
SuiteReport verify_field_identities(unsigned depth_cut = 2, long t1_window = 1,
                                    long mode_window = 2);

/// Degree-zero moments of the three generating series annihilate the top:
/// zero polynomials in all formal parameters, with perturbed negative
/// controls.
SuiteReport verify_top_moments();

/// Derives the derivative-field reduction from the quadratic one through
/// the bracket substitution, with the degenerate denominator rejected.
SuiteReport remark_consistency();

/// The cubic coefficient matrices of the degree -3 layer.
PolyMatrix cubic_kernel_matrix(const Ctx& ctx);   // entries in m
PolyMatrix cubic_reduction_matrix(const Ctx& ctx);  // entries in r, k

} // namespace toroidal

#include "toroidal/vertex_impl.hpp"

#endif
