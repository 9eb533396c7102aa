#ifndef TOROIDAL_CASIMIR_HPP
#define TOROIDAL_CASIMIR_HPP

#include "toroidal/linalg.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

/// Polynomials in one designated symbol as a module over the vector fields
/// on a circle: (t^m d) p(x) = (alpha m - x) p(x + m). The index m may be a
/// polynomial (formal index); the restriction to the span of t^-1 d, d, t d
/// is an sl2 action with a nonstandard Cartan element.
class WittModule {
public:
    WittModule(Ctx ctx, std::string x_symbol, Poly alpha);

    const Ctx& ctx() const { return ctx_; }
    const std::string& x() const { return x_; }
    const Poly& alpha() const { return alpha_; }

    Poly act(const Poly& m_index, const Poly& p) const;
    Poly act(long m_index, const Poly& p) const {
        return act(Poly::constant(Rational(m_index), ctx_), p);
    }

    Poly h(const Poly& p) const { return act(1, p) - act(-1, p); }
    Poly e(const Poly& p) const {
        return (act(1, p) - act(0, p) * Rational(2) + act(-1, p)) * Rational(1, 2);
    }
    Poly f(const Poly& p) const {
        return (act(1, p) + act(0, p) * Rational(2) + act(-1, p)) * Rational(-1, 2);
    }

    /// f^k applied to the cyclic vector 1; degree k with leading
    /// coefficient 2^k.
    Poly f_power_vacuum(unsigned k) const;

private:
    Ctx ctx_;
    std::string x_;
    Poly alpha_;
};

/// The bilinear sl2 Casimir on the tensor product of two Witt modules,
/// realized on polynomials in the two designated symbols.
class TensorCasimir {
public:
    TensorCasimir(WittModule first, WittModule second);

    const WittModule& first() const { return first_; }
    const WittModule& second() const { return second_; }

    /// -1/2 (x - a1)(y + a2) p(x+1, y-1) + x y p - 1/2 (x + a1)(y - a2) p(x-1, y+1)
    Poly apply(const Poly& p) const;

    /// Eigenvalue n^2/2 - n(a1 + a2 + 1/2) + a1 a2.
    Poly omega(unsigned n) const;

    /// Matrix on the span of f^k 1 (x) f^(n-k) 1, in that basis; asserts the
    /// span is preserved.
    PolyMatrix block_matrix(unsigned n) const;

    /// Coordinates of p in the product basis of the degree-n block; throws
    /// if p is outside the span.
    std::vector<Poly> block_coordinates(unsigned n, const Poly& p) const;

private:
    WittModule first_, second_;
};

/// Ring context for the generic two-parameter checks.
Ctx casimir_ctx();

/// Full verification suite: the sl2 triple and highest-weight data, the
/// representation identity with formal indices, the block spectra against
/// the closed eigenvalue formula, trace identity, commutation with the
/// diagonal action, degree preservation, eigenvalue distinctness, and the
/// invariant-subspace dichotomy at alpha = 0.
SuiteReport casimir_suite(unsigned max_n = 6);

} // namespace toroidal

#endif
