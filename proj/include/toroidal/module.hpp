#ifndef TOROIDAL_MODULE_HPP
#define TOROIDAL_MODULE_HPP

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "toroidal/lie.hpp"

namespace toroidal {

/// Top-layer vector of an induced module: the vacuum vector, or a weight
/// vector v(n + nu) where n is the symbolic weight base point and nu an
/// affine offset.
struct TopVector {
    bool vacuum = false;
    AffineExp nu;

    static TopVector vac() { return TopVector{true, AffineExp()}; }
    static TopVector weight(AffineExp off = AffineExp()) { return TopVector{false, off}; }
    static TopVector weight(long off) { return TopVector{false, AffineExp::constant(off)}; }

    friend bool operator==(const TopVector& a, const TopVector& b) {
        return a.vacuum == b.vacuum && (a.vacuum || a.nu == b.nu);
    }
    friend bool operator!=(const TopVector& a, const TopVector& b) { return !(a == b); }
    friend bool operator<(const TopVector& a, const TopVector& b) {
        if (a.vacuum != b.vacuum) return a.vacuum < b.vacuum;
        if (a.vacuum) return false;
        return a.nu < b.nu;
    }

    std::string str(const Ctx& ctx) const;
};

/// Ordered PBW monomial of lowering operators: factors strictly descending
/// in the canonical BasisDeriv order from left to right, equal factors
/// merged with multiplicities. The word acts on a top vector by left
/// application.
struct PBWMono {
    std::vector<std::pair<BasisDeriv, unsigned>> factors;

    bool empty() const { return factors.empty(); }
    std::size_t length() const {
        std::size_t l = 0;
        for (const auto& [d, k] : factors) l += k;
        return l;
    }
    long t0_degree() const {
        long deg = 0;
        for (const auto& [d, k] : factors) deg += d.t0 * static_cast<long>(k);
        return deg;
    }
    AffineExp t1_degree() const {
        AffineExp deg;
        for (const auto& [d, k] : factors)
            for (unsigned i = 0; i < k; ++i) deg = deg + d.t1;
        return deg;
    }
    /// Flattened factor sequence (leftmost first).
    std::vector<BasisDeriv> word() const {
        std::vector<BasisDeriv> w;
        for (const auto& [d, k] : factors)
            for (unsigned i = 0; i < k; ++i) w.push_back(d);
        return w;
    }

    friend bool operator==(const PBWMono& a, const PBWMono& b) { return a.factors == b.factors; }
    friend bool operator<(const PBWMono& a, const PBWMono& b) { return a.factors < b.factors; }
};

struct PBWKey {
    PBWMono mono;
    TopVector top;

    friend bool operator==(const PBWKey& a, const PBWKey& b) {
        return a.mono == b.mono && a.top == b.top;
    }
    friend bool operator<(const PBWKey& a, const PBWKey& b) {
        if (!(a.mono == b.mono)) return a.mono < b.mono;
        return a.top < b.top;
    }
};

enum class AlgebraKind { D, H, L, Hhat };
enum class TopKind { weight, vacuum };

inline bool algebra_member(AlgebraKind a, const BasisDeriv& d) {
    switch (a) {
        case AlgebraKind::D: return true;
        case AlgebraKind::H:
        case AlgebraKind::Hhat: return in_horizontal(d);
        case AlgebraKind::L: return in_loop(d);
    }
    return false;
}

class InducedModule;
using ModCtx = std::shared_ptr<const InducedModule>;

template <class S>
S scalar_from_poly(const Poly& p);
template <>
inline Poly scalar_from_poly<Poly>(const Poly& p) { return p; }
template <>
inline RatFn scalar_from_poly<RatFn>(const Poly& p) { return RatFn(p); }

/// Element of an induced module in PBW normal form: a finite linear
/// combination of (ordered lowering monomial, top vector) pairs. The scalar
/// type is the polynomial ring or its fraction field.
template <class S>
class BasicPBW {
public:
    BasicPBW() = default;
    explicit BasicPBW(ModCtx mod) : mod_(std::move(mod)) {}

    const ModCtx& mod() const { return mod_; }
    const std::map<PBWKey, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWKey& key, const S& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicPBW operator+(const BasicPBW& o) const {
        BasicPBW r = *this;
        if (!r.mod_) r.mod_ = o.mod_;
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    BasicPBW operator-(const BasicPBW& o) const { return *this + (o * Rational(-1)); }
    BasicPBW operator*(const Rational& c) const {
        BasicPBW r(mod_);
        if (c == 0) return r;
        for (const auto& [k, q] : terms_) {
            S v = q;
            v *= scalar_from_poly<S>(Poly::constant(c, ring_of(q)));
            r.terms_.emplace(k, std::move(v));
        }
        return r;
    }
    BasicPBW operator*(const S& c) const {
        BasicPBW r(mod_);
        if (c.is_zero()) return r;
        for (const auto& [k, q] : terms_) {
            S v = q;
            v *= c;
            if (!v.is_zero()) r.terms_.emplace(k, std::move(v));
        }
        return r;
    }

    friend bool operator==(const BasicPBW& a, const BasicPBW& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicPBW& a, const BasicPBW& b) { return !(a == b); }

    /// Coefficient of a key (zero scalar if absent). Requires a nonempty
    /// vector to derive the ring context for the zero.
    S coefficient(const PBWKey& key) const {
        auto it = terms_.find(key);
        if (it != terms_.end()) return it->second;
        if (terms_.empty()) return S();
        return scalar_from_poly<S>(Poly(ring_of(terms_.begin()->second)));
    }

    std::string str() const;

private:
    static const Ctx& ring_of(const Poly& p) { return p.ctx(); }
    static const Ctx& ring_of(const RatFn& f) { return f.ctx(); }

    ModCtx mod_;
    std::map<PBWKey, S> terms_;
};

using PBWVector = BasicPBW<Poly>;
using PBWFracVector = BasicPBW<RatFn>;

/// An induced-module context: the acting algebra, the splitting used for
/// induction and the kind of top layer. Weight tops pair with the
/// triangular splitting, the vacuum top with the field-mode splitting.
class InducedModule : public std::enable_shared_from_this<InducedModule> {
public:
    /// Weight module with symbolic alpha and the critical beta.
    static ModCtx weight_module(AlgebraKind algebra, const Ctx& ring = default_ctx());
    /// Weight module with the given alpha (symbol or value); beta defaults
    /// to the critical value -alpha(alpha+1)/2.
    static ModCtx weight_module(AlgebraKind algebra, const Ctx& ring, Poly alpha);
    static ModCtx weight_module(AlgebraKind algebra, const Ctx& ring, Poly alpha, Poly beta);
    static ModCtx vacuum_module(AlgebraKind algebra, const Ctx& ring = default_ctx());

    const Ctx& ring() const { return ring_; }
    AlgebraKind algebra() const { return algebra_; }
    Splitting splitting() const { return splitting_; }
    TopKind top_kind() const { return top_; }
    const Poly& alpha() const { return alpha_; }
    const Poly& beta() const { return beta_; }

    static Poly critical_beta(const Poly& alpha);

    TopVector top(long offset = 0) const {
        return top_ == TopKind::vacuum ? TopVector::vac() : TopVector::weight(offset);
    }
    template <class S = Poly>
    BasicPBW<S> top_vector(const TopVector& t) const {
        BasicPBW<S> v(shared_from_this());
        v.add_term(PBWKey{PBWMono{}, t}, scalar_from_poly<S>(Poly::constant(Rational(1), ring_)));
        return v;
    }
    template <class S = Poly>
    BasicPBW<S> monomial_vector(const std::vector<BasisDeriv>& word, const TopVector& t) const;

    /// Action of a degree-zero operator on a top vector (triangular
    /// splitting): t1^mu d1 scales by (n + nu - alpha mu) and shifts the
    /// weight; t1^mu d0 scales by beta.
    template <class S>
    BasicPBW<S> top_action(const BasisDeriv& x, const TopVector& t) const;

    /// Full straightening action. The result is in canonical PBW form and
    /// does not depend on the reduction order.
    template <class S>
    BasicPBW<S> act(const BasisDeriv& x, const BasicPBW<S>& w) const;
    template <class S>
    BasicPBW<S> act(const LieElement& x, const BasicPBW<S>& w) const;

    /// Applies an operator word (word[0] acting last).
    template <class S>
    BasicPBW<S> act_word(const std::vector<BasisDeriv>& word, const BasicPBW<S>& w) const;

    /// Straightening by explicit adjacent transpositions with a caller
    /// chosen (possibly randomized) strategy; used to exercise confluence.
    PBWVector straighten_unordered(const std::vector<BasisDeriv>& word, const TopVector& top,
                                   const std::function<std::size_t(std::size_t)>& pick) const;

private:
    InducedModule(AlgebraKind algebra, Splitting splitting, TopKind top, Ctx ring, Poly alpha,
                  Poly beta)
        : algebra_(algebra), splitting_(splitting), top_(top), ring_(std::move(ring)),
          alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    template <class S>
    BasicPBW<S> act_on_term(const BasisDeriv& x, const PBWMono& mono, const TopVector& top) const;

    AlgebraKind algebra_;
    Splitting splitting_;
    TopKind top_;
    Ctx ring_;
    Poly alpha_;
    Poly beta_;
};

/// --- enumeration, characters, radicals -----------------------------------

/// Ordered monomial basis of the weight space of t0-degree -s whose total
/// t1-weight offset (monomial plus top) equals `weight_offset`. For the
/// loop algebra the enumeration is complete; the other algebras need an
/// explicit per-factor t1-window.
std::vector<PBWVector> weight_basis(const ModCtx& mod, unsigned s, long weight_offset = 0,
                                    std::optional<std::pair<long, long>> t1_window = {});

/// Dimensions of the loop-module weight spaces at t0-degrees 0..max_s,
/// by direct enumeration. Every weight offset gives the same count, so a
/// single table is returned.
std::vector<unsigned long> character_dims(const ModCtx& mod, unsigned max_s);

/// One raising product u = ops[0] ops[1] ... (ops[0] applied last).
struct RaisingChain {
    std::vector<BasisDeriv> ops;
    std::string str(const Ctx& ctx) const;
};

/// All products of triangular raising generators with total t0-degree
/// `total`. Loop algebra: concrete generators with t1 in -1..1. Horizontal
/// algebra: one fresh formal exponent symbol per factor, drawn in order
/// from `fresh_symbols`; throws if the chain length can exceed the supply.
std::vector<RaisingChain> raising_chains(const ModCtx& mod, unsigned total,
                                         const std::vector<std::string>& fresh_symbols = {});

struct RadicalKernel {
    std::vector<std::vector<Poly>> kernel;  // coordinates over the supplied basis
    std::size_t space_dim = 0;
    std::size_t rank = 0;
    std::size_t condition_count = 0;
};

/// Kernel of the raising map on the span of `basis`: combinations sent to
/// zero by every raising chain of matching degree, with formal exponents
/// kept symbolic so the infinite family of integer conditions becomes
/// finitely many polynomial-coefficient conditions.
RadicalKernel radical_kernel(const ModCtx& mod, const std::vector<PBWVector>& basis,
                             unsigned degree,
                             const std::vector<std::string>& fresh_symbols = {},
                             const std::map<std::string, Rational>& specialize = {});

/// Membership certificate: every raising chain of matching degree kills w.
/// Returns the list of nonzero residual polynomials (empty = member).
template <class S>
std::vector<std::pair<std::string, std::string>> radical_residuals(
    const ModCtx& mod, const BasicPBW<S>& w, unsigned degree,
    const std::vector<std::string>& fresh_symbols = {});

/// --- formal-exponent machinery --------------------------------------------

/// Shifts the weight base point by c: coefficients substitute n -> n + c,
/// top offsets gain c. An isomorphism of the weight lattice bookkeeping.
template <class S>
BasicPBW<S> shift_base(const BasicPBW<S>& w, long c);

/// Specialization homomorphism from the formal-exponent module: substitutes
/// m -> m0 in coefficients and torus exponents and shifts the weight base
/// point by n0.
template <class S>
BasicPBW<S> specialize_vector(const BasicPBW<S>& w, long m0, long n0, const ModCtx& target);

/// Oracle for the loop reduction: expresses the length-one generator
/// (t0^-j t1^mexp d1) v(n) as a loop-supported vector.
template <class S>
using LoopOracle = std::function<BasicPBW<S>(long j, long mexp)>;

/// Rewrites w into a combination of loop-algebra monomials applied to top
/// vectors, by double induction on degree and length, consulting the oracle
/// for the length-one base case.
template <class S>
BasicPBW<S> reduce_to_loop(const BasicPBW<S>& w, const LoopOracle<S>& oracle);

/// Polynomial family through integer specializations: specializes the
/// family at each node, reduces with the supplied map, and interpolates the
/// reduced coefficients back to a polynomial family of the stated degree.
PBWVector interpolate_reduction(
    const PBWVector& family, unsigned degree_bound, const std::vector<long>& nodes,
    const std::function<PBWVector(const PBWVector&, long)>& reduce_at,
    const ModCtx& target);

/// Canonical JSON form of a PBW vector (stable ordering; byte-identical
/// across runs).
std::string to_json(const PBWVector& w);
std::string to_json(const PBWFracVector& w);

} // namespace toroidal

#include "toroidal/module_impl.hpp"

#endif
