#ifndef TOROIDAL_SHAPOVALOV_HPP
#define TOROIDAL_SHAPOVALOV_HPP

#include "toroidal/linalg.hpp"
#include "toroidal/module.hpp"
#include "toroidal/report.hpp"

namespace toroidal {

/// Partition counts of the loop algebra: p_plus(s, n) enumerates raising
/// monomials by bidegree, p(s, n) adds the degree-(0,1) Cartan direction,
/// p3(s) is the total per level.
struct PartitionTable {
    unsigned max_s = 0;
    std::vector<std::map<long, unsigned long>> p_plus;  // by s, then t1-degree
    std::vector<std::map<long, unsigned long>> p;       // window |n| <= max_s
    std::vector<unsigned long> p3;

    unsigned long plus(unsigned s, long n) const {
        auto it = p_plus.at(s).find(n);
        return it == p_plus.at(s).end() ? 0ul : it->second;
    }
    unsigned long cumulative(unsigned s, long n) const {
        if (n >= static_cast<long>(s)) return p3.at(s);
        auto it = p.at(s).find(n);
        return it == p.at(s).end() ? 0ul : it->second;
    }
};

/// Direct enumeration; the internal identities relating the three counts
/// hold by construction and are re-checked in the suite.
PartitionTable partition_functions(unsigned max_s);

/// Coefficients of prod_{i>=1} (1 - q^i)^(-3) through q^max_s, an
/// independent route to p3.
std::vector<unsigned long> triple_partition_series(unsigned max_s);

/// Dual level-s bases and both pairing matrices over Q[alpha, n].
struct GramPair {
    unsigned s = 0;
    std::vector<std::vector<BasisDeriv>> raising;   // u_i^+
    std::vector<std::vector<BasisDeriv>> lowering;  // u_i^-
    std::vector<long> r;                            // t1-degree of u_i^+
    PolyMatrix g, f;
};

GramPair gram_matrices(unsigned s, const Ctx& ring = default_ctx());

/// Exact determinant by bivariate evaluation-interpolation with row degree
/// bounds; equals the fraction-free elimination determinant, which is used
/// directly on small matrices.
Poly gram_determinant(const PolyMatrix& m, const Ctx& ring = default_ctx());

/// The closed-form product: prod_{m=1..s} prod_{k=1..floor(s/m)}
/// ((2m-k+2alpha+1)(2m-k-2alpha-1))^(p3(s-mk)).
Poly closed_form_det_g(unsigned s, const PartitionTable& table,
                       const Ctx& ring = default_ctx());

/// Rational alpha-roots of the closed-form factors present at level s.
std::vector<Rational> vanishing_alphas(unsigned s_max, const PartitionTable& table);

/// Full Appendix suite: partition identities, the frozen level-1 values,
/// determinants against the closed form (n-free, constant ratio), the
/// bridge identity in its three groupings, the kernel cross-check against
/// the raising-operator radical, and the vanishing locus dichotomy.
SuiteReport shapovalov_suite(unsigned s_max = 3);

} // namespace toroidal

#endif
