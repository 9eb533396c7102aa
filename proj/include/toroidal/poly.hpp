#ifndef TOROIDAL_POLY_HPP
#define TOROIDAL_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toroidal/rational.hpp"
#include "toroidal/ring.hpp"

namespace toroidal {

/// Sparse multivariate polynomial over the rationals in a fixed ring
/// context. Terms are kept in descending graded-lex order with no zero
/// coefficients, so equality is structural and printing is canonical.
class Poly {
public:
    using Term = std::pair<Mono, Rational>;

    Poly() : ctx_(default_ctx()) {}
    explicit Poly(Ctx ctx) : ctx_(std::move(ctx)) {}
    Poly(Ctx ctx, const Rational& c) : ctx_(std::move(ctx)) {
        if (c != 0) terms_.emplace_back(Mono::one(), c);
    }

    static Poly constant(const Rational& c, const Ctx& ctx = default_ctx()) {
        return Poly(ctx, c);
    }
    static Poly variable(const std::string& name, const Ctx& ctx = default_ctx()) {
        Poly p(ctx);
        p.terms_.emplace_back(Mono::var(ctx, ctx->id(name)), Rational(1));
        return p;
    }
    static Poly monomial(const Ctx& ctx, const Mono& m, const Rational& c) {
        Poly p(ctx);
        if (c != 0) p.terms_.emplace_back(m, c);
        return p;
    }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_[0].second;
    }

    /// Leading term in graded-lex order.
    const Term& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    unsigned degree_in(std::size_t id) const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.get(id));
        return d;
    }
    bool depends_on(std::size_t id) const { return degree_in(id) > 0; }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c) { return *this = *this * c; }

    Poly pow(unsigned e) const;

    /// Exact division; throws if the division leaves a remainder.
    Poly divexact(const Poly& d) const;

    /// Division attempt that reports failure instead of throwing.
    std::optional<Poly> try_divexact(const Poly& d) const;

    /// Simultaneous substitution symbol -> polynomial. Substituting a value
    /// commutes with ring arithmetic.
    Poly substitute(const std::map<std::string, Poly>& repl) const;
    Poly substitute(const std::string& name, const Poly& value) const {
        return substitute(std::map<std::string, Poly>{{name, value}});
    }
    Poly substitute(const std::string& name, const Rational& value) const {
        return substitute(name, Poly::constant(value, ctx_));
    }

    /// Evaluates at a full rational point (all symbols assigned).
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Evaluates a polynomial supported on at most two symbols; throws if
    /// any other symbol occurs.
    Rational evaluate_two(std::size_t id1, const Rational& v1, std::size_t id2,
                          const Rational& v2) const;

    Poly derivative(std::size_t id) const;

    /// gcd of all coefficients, with the sign of the leading coefficient;
    /// zero polynomial has content 0.
    Rational content() const;
    Poly primitive_part() const;

    /// Coefficient of sym^k, as a polynomial in the remaining symbols.
    Poly coefficient_of(std::size_t id, unsigned k) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.ctx_.get() == b.ctx_.get() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b);  // arbitrary total order for map keys

    std::string str() const;

    /// Recursive-descent parser for +, -, *, ^, parentheses, rationals and
    /// context symbols. Round-trips everything str() produces.
    static Poly parse(const std::string& text, const Ctx& ctx = default_ctx());

private:
    void normalize();
    Ctx ctx_;
    std::vector<Term> terms_;  // descending graded-lex, no zero coefficients
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

/// Univariate gcd (monic, by Euclid) for polynomials supported on a single
/// symbol. Used to keep fraction-field scalars reduced.
Poly gcd_univariate(const Poly& a, const Poly& b, std::size_t id);

/// Decomposes p as a sum over monomials in the selected symbols with
/// polynomial coefficients in the remaining ones. Keys are packed exponent
/// words of the selected part.
std::map<uint64_t, Poly> split_by_symbols(const Poly& p, const std::vector<std::size_t>& ids);

/// Fraction-field scalar. Reduction is complete when both parts are
/// supported on at most one common symbol (the case the library exercises:
/// denominators stay univariate in alpha); otherwise only rational content
/// is cancelled.
class RatFn {
public:
    RatFn() : num_(default_ctx()), den_(Poly::constant(Rational(1))) {}
    RatFn(Poly num) : num_(std::move(num)), den_(Poly::constant(Rational(1), num_.ctx())) {}
    RatFn(Poly num, Poly den);

    static RatFn constant(const Rational& c, const Ctx& ctx = default_ctx()) {
        return RatFn(Poly::constant(c, ctx));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const Ctx& ctx() const { return num_.ctx(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    /// The underlying Poly; throws unless the denominator is trivial.
    Poly as_poly() const {
        if (!is_polynomial()) throw std::domain_error("fraction has nontrivial denominator");
        return num_ * (Rational(1) / den_.constant_value());
    }

    RatFn operator-() const { return RatFn(-num_, den_); }
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const { return *this + (-o); }
    RatFn operator*(const RatFn& o) const;
    RatFn operator/(const RatFn& o) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }

    RatFn substitute(const std::map<std::string, Poly>& repl) const {
        return RatFn(num_.substitute(repl), den_.substitute(repl));
    }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce();
    Poly num_, den_;
};

inline RatFn operator*(const Poly& p, const RatFn& f) { return RatFn(p) * f; }

} // namespace toroidal

#endif
