#ifndef TOROIDAL_LIE_HPP
#define TOROIDAL_LIE_HPP

#include <array>
#include <map>
#include <string>

#include "toroidal/poly.hpp"

namespace toroidal {

/// Integer-affine torus exponent: an integer-coefficient combination of the
/// exponent-capable symbols plus a constant. Constant exponents recover the
/// ordinary integer-graded algebras; a nonzero symbol part is a formal
/// exponent in the group-algebra extension.
class AffineExp {
public:
    AffineExp() = default;

    static AffineExp constant(long c) {
        AffineExp e;
        e.cst_ = c;
        return e;
    }
    static AffineExp symbol(const Ctx& ctx, const std::string& name, long coeff = 1) {
        const std::size_t id = ctx->id(name);
        if (!ctx->exponent_capable(id))
            throw std::domain_error("symbol cannot appear in a torus exponent: " + name);
        AffineExp e;
        e.coeff_[id] = coeff;
        return e;
    }

    bool is_constant() const {
        for (long c : coeff_)
            if (c != 0) return false;
        return true;
    }
    long constant_value() const {
        if (!is_constant()) throw std::domain_error("formal exponent has no integer value");
        return cst_;
    }
    long constant_part() const { return cst_; }
    long coeff(std::size_t id) const { return coeff_.at(id); }
    bool is_zero() const { return is_constant() && cst_ == 0; }

    AffineExp operator+(const AffineExp& o) const {
        AffineExp r;
        for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] = coeff_[i] + o.coeff_[i];
        r.cst_ = cst_ + o.cst_;
        return r;
    }
    AffineExp operator-(const AffineExp& o) const { return *this + (-o); }
    AffineExp operator-() const {
        AffineExp r;
        for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] = -coeff_[i];
        r.cst_ = -cst_;
        return r;
    }
    AffineExp operator+(long c) const {
        AffineExp r = *this;
        r.cst_ += c;
        return r;
    }

    Poly to_poly(const Ctx& ctx) const;

    /// Substitutes integer values for symbols; untouched symbols remain.
    AffineExp substitute(const Ctx& ctx, const std::map<std::string, long>& values) const;

    friend bool operator==(const AffineExp& a, const AffineExp& b) {
        return a.coeff_ == b.coeff_ && a.cst_ == b.cst_;
    }
    friend bool operator!=(const AffineExp& a, const AffineExp& b) { return !(a == b); }
    friend bool operator<(const AffineExp& a, const AffineExp& b) {
        if (a.coeff_ != b.coeff_) return a.coeff_ < b.coeff_;
        return a.cst_ < b.cst_;
    }

    std::string str(const Ctx& ctx) const;
    static AffineExp parse(const std::string& text, const Ctx& ctx);

private:
    std::array<long, RingContext::kMaxSymbols> coeff_{};
    long cst_ = 0;
};

/// Basis derivation t0^i t1^mu d_dir of the vector-field algebra on the
/// 2-torus (dir selects d0 or d1). The t1-exponent may be formal.
struct BasisDeriv {
    long t0 = 0;
    AffineExp t1;
    int dir = 1;  // 0 or 1

    friend bool operator==(const BasisDeriv& a, const BasisDeriv& b) {
        return a.t0 == b.t0 && a.dir == b.dir && a.t1 == b.t1;
    }
    friend bool operator!=(const BasisDeriv& a, const BasisDeriv& b) { return !(a == b); }

    /// Canonical total order: t0 ascending, then d0 before d1, then the
    /// exponent lexicographically. Fixes PBW normal forms downstream.
    friend bool operator<(const BasisDeriv& a, const BasisDeriv& b) {
        if (a.t0 != b.t0) return a.t0 < b.t0;
        if (a.dir != b.dir) return a.dir < b.dir;
        return a.t1 < b.t1;
    }

    std::string str(const Ctx& ctx) const;
    static BasisDeriv parse(const std::string& text, const Ctx& ctx);
};

inline BasisDeriv deriv1(long t0, AffineExp t1) { return BasisDeriv{t0, t1, 1}; }
inline BasisDeriv deriv1(long t0, long t1) { return BasisDeriv{t0, AffineExp::constant(t1), 1}; }
inline BasisDeriv deriv0(long t0, AffineExp t1) { return BasisDeriv{t0, t1, 0}; }
inline BasisDeriv deriv0(long t0, long t1) { return BasisDeriv{t0, AffineExp::constant(t1), 0}; }

/// Membership predicates for the distinguished subalgebras: horizontal
/// fields (d1 only), and the loop algebra (d1 with t1-exponent in -1..1).
inline bool in_horizontal(const BasisDeriv& d) { return d.dir == 1; }
inline bool in_loop(const BasisDeriv& d) {
    return d.dir == 1 && d.t1.is_constant() && d.t1.constant_value() >= -1 &&
           d.t1.constant_value() <= 1;
}

enum class Splitting { triangular, vertex };
enum class Part { plus, zero, minus };

/// Triangular scheme grades by the t0-degree; the vertex scheme splits by
/// field modes: d1 with i >= 0 and d0 with i >= -1 are non-lowering.
inline Part classify(const BasisDeriv& d, Splitting scheme) {
    if (scheme == Splitting::triangular) {
        if (d.t0 > 0) return Part::plus;
        if (d.t0 < 0) return Part::minus;
        return Part::zero;
    }
    const long threshold = (d.dir == 1) ? 0 : -1;
    return d.t0 >= threshold ? Part::plus : Part::minus;
}

/// Finite linear combination of basis derivations with polynomial scalars.
class LieElement {
public:
    LieElement() : ctx_(default_ctx()) {}
    explicit LieElement(Ctx ctx) : ctx_(std::move(ctx)) {}
    LieElement(const Ctx& ctx, const BasisDeriv& d)
        : ctx_(ctx) { terms_[d] = Poly::constant(Rational(1), ctx); }

    static LieElement basis(const BasisDeriv& d, const Ctx& ctx = default_ctx()) {
        return LieElement(ctx, d);
    }

    const Ctx& ctx() const { return ctx_; }
    const std::map<BasisDeriv, Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BasisDeriv& d, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement operator-() const;
    LieElement operator*(const Poly& c) const;
    LieElement operator*(const Rational& c) const { return *this * Poly::constant(c, ctx_); }

    bool horizontal() const {
        for (const auto& [d, c] : terms_)
            if (!in_horizontal(d)) return false;
        return true;
    }

    LieElement specialize(const std::map<std::string, long>& values) const;

    std::string str() const;
    static LieElement parse(const std::string& text, const Ctx& ctx = default_ctx());

    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

private:
    Ctx ctx_;
    std::map<BasisDeriv, Poly> terms_;
};

/// Structure constants of the algebra: the bracket of two basis
/// derivations. The scalar parts of formal exponents enter the coefficient
/// ring as degree-one polynomials.
LieElement bracket(const Ctx& ctx, const BasisDeriv& x, const BasisDeriv& y);
LieElement bracket(const LieElement& x, const LieElement& y);

} // namespace toroidal

#endif
