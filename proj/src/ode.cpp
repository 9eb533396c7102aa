#include "toroidal/ode.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "toroidal/linalg.hpp"

namespace toroidal {

BlockOde::BlockOde(QMatrix omega, std::vector<QMatrix> moments)
    : omega_(std::move(omega)), moments_(std::move(moments)) {
    if (omega_.rows() != omega_.cols()) throw std::domain_error("square operator expected");
    for (const auto& a : moments_)
        if (a.rows() != omega_.rows() || a.cols() != omega_.cols())
            throw std::domain_error("moment dimensions mismatch");
}

BlockOde::Vec BlockOde::apply_omega(const Vec& v) const {
    Vec out(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) out[i] += omega_(i, j) * v[j];
    return out;
}

BlockOde::Vec BlockOde::apply_moment(std::size_t i, const Vec& v) const {
    Vec out(dim(), Rational(0));
    if (i >= moments_.size()) return out;
    for (std::size_t a = 0; a < dim(); ++a)
        for (std::size_t b = 0; b < dim(); ++b) out[a] += moments_[i](a, b) * v[b];
    return out;
}

BlockOde::Vec BlockOde::resolvent(long j, const Vec& b) const {
    // Gaussian elimination on (jI - omega | b), exact.
    const std::size_t n = dim();
    QMatrix w(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c)
            w(i, c) = (i == c ? Rational(Rational(j) - omega_(i, c)) : Rational(-omega_(i, c)));
        w(i, n) = b[i];
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w(p, col) == 0) ++p;
        if (p == n) throw SingularResolvent(j, "block determinant vanishes");
        if (p != col)
            for (std::size_t c = 0; c <= n; ++c) std::swap(w(col, c), w(p, c));
        const Rational inv = Rational(1) / w(col, col);
        for (std::size_t c = col; c <= n; ++c) w(col, c) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col) == 0) continue;
            const Rational f = w(i, col);
            for (std::size_t c = col; c <= n; ++c) w(i, c) -= f * w(col, c);
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = w(i, n);
    return x;
}

BlockOde::Series BlockOde::twisted_integrate(const Series& b) const {
    Series out;
    for (const auto& [j, v] : b) {
        bool zero = true;
        for (const auto& q : v) zero = zero && q == 0;
        if (zero) continue;
        out[j + 1] = resolvent(j + 1, v);
    }
    return out;
}

BlockOde::Vec BlockOde::consistency(const Vec& w_r, long r) const {
    Vec res = apply_omega(w_r);
    for (std::size_t i = 0; i < dim(); ++i) res[i] -= Rational(r) * w_r[i];
    return res;
}

BlockOde::Series BlockOde::solve_recursive(const Vec& w_r, long r, long top_power) const {
    for (const auto& q : consistency(w_r, r))
        if (q != 0) throw std::domain_error("consistency condition violated");
    Series w;
    w[r] = w_r;
    for (long j = r + 1; j <= top_power; ++j) {
        Vec b(dim(), Rational(0));
        for (long i = r; i < j; ++i) {
            auto it = w.find(i);
            if (it == w.end()) continue;
            const Vec t = apply_moment(static_cast<std::size_t>(j - i - 1), it->second);
            for (std::size_t a = 0; a < dim(); ++a) b[a] += t[a];
        }
        w[j] = resolvent(j, b);
    }
    return w;
}

BlockOde::Series BlockOde::solve_iterative(const Vec& w_r, long r, long top_power) const {
    Series total, current;
    current[r] = w_r;
    total[r] = w_r;
    while (!current.empty()) {
        Series rhs;
        for (const auto& [j, v] : current)
            for (std::size_t i = 0; i < moments_.size(); ++i) {
                if (j + static_cast<long>(i) > top_power) break;
                const Vec t = apply_moment(i, v);
                auto& acc =
                    rhs.emplace(j + static_cast<long>(i), Vec(dim(), Rational(0))).first->second;
                for (std::size_t a = 0; a < dim(); ++a) acc[a] += t[a];
            }
        current = twisted_integrate(rhs);
        for (auto it = current.begin(); it != current.end();) {
            if (it->first > top_power) it = current.erase(it);
            else ++it;
        }
        for (const auto& [j, v] : current) {
            auto& acc = total.emplace(j, Vec(dim(), Rational(0))).first->second;
            for (std::size_t a = 0; a < dim(); ++a) acc[a] += v[a];
        }
    }
    return total;
}

bool BlockOde::residual_ok(const Series& w, long r, long top_power) const {
    auto coeff = [&](long j) -> Vec {
        auto it = w.find(j);
        return it == w.end() ? Vec(dim(), Rational(0)) : it->second;
    };
    for (long j = r; j <= top_power; ++j) {
        Vec lhs = coeff(j);
        for (auto& q : lhs) q *= Rational(j);
        Vec rhs = apply_omega(coeff(j));
        for (long i = r; i < j; ++i) {
            const Vec t = apply_moment(static_cast<std::size_t>(j - i - 1), coeff(i));
            for (std::size_t a = 0; a < dim(); ++a) rhs[a] += t[a];
        }
        for (std::size_t a = 0; a < dim(); ++a)
            if (lhs[a] != rhs[a]) return false;
    }
    return true;
}

/// --- torus instance --------------------------------------------------------

namespace {

// m -> m + j on scalars, torus exponents and top offsets.
PBWFracVector shift_index(const PBWFracVector& w, long j) {
    if (j == 0 || w.is_zero()) return w;
    const ModCtx& mod = w.mod();
    const Ctx& ring = mod->ring();
    const std::size_t m_id = ring->id("m");
    const Poly shifted_m = Poly::variable("m", ring) + Poly::constant(Rational(j), ring);
    PBWFracVector out(mod);
    for (const auto& [key, coef] : w.terms()) {
        PBWKey nk = key;
        PBWMono mono;
        for (auto [d, mult] : key.mono.factors) {
            d.t1 = d.t1 + AffineExp::constant(d.t1.coeff(m_id) * j);
            mono.factors.emplace_back(d, mult);
        }
        nk.mono = mono;
        if (!nk.top.vacuum)
            nk.top.nu = nk.top.nu + AffineExp::constant(nk.top.nu.coeff(m_id) * j);
        out.add_term(nk, coef.substitute({{"m", shifted_m}}));
    }
    return out;
}

} // namespace

ToroidalOde::ToroidalOde(Poly alpha)
    : ring_(alpha.ctx()), alpha_(alpha),
      mod_(InducedModule::weight_module(AlgebraKind::Hhat, ring_, alpha)),
      casimir_(WittModule(ring_, "m", Poly::constant(Rational(1), ring_)),
               WittModule(ring_, "n", alpha)) {}

PBWFracVector ToroidalOde::initial() const {
    const AffineExp m = AffineExp::symbol(ring_, "m");
    PBWFracVector w(mod_);
    const Poly coeff = Poly::variable("n", ring_) - alpha_ * Poly::variable("m", ring_);
    w.add_term(PBWKey{PBWMono{}, TopVector::weight(m)}, RatFn(coeff));
    return w;
}

PBWFracVector ToroidalOde::apply_omega(const PBWFracVector& w) const {
    PBWFracVector out(mod_);
    for (const auto& [key, coef] : w.terms()) {
        // the lift acts on the polynomial coefficient only
        out.add_term(key, RatFn(casimir_.apply(coef.num()), coef.den()));
    }
    return out;
}

PBWFracVector ToroidalOde::apply_moment(unsigned i, const PBWFracVector& w) const {
    const Poly m = Poly::variable("m", ring_);
    const Poly one = Poly::constant(Rational(1), ring_);
    const long depth = -static_cast<long>(i) - 1;
    PBWFracVector out = mod_->act(deriv1(depth, 1), shift_index(w, -1)) *
                        scalar_from_poly<RatFn>((m + one) * Rational(-1, 2));
    out = out + mod_->act(deriv1(depth, 0), w) * scalar_from_poly<RatFn>(m);
    out = out + mod_->act(deriv1(depth, -1), shift_index(w, 1)) *
                    scalar_from_poly<RatFn>((m - one) * Rational(-1, 2));
    return out;
}

PBWFracVector ToroidalOde::consistency_residual() const {
    const PBWFracVector w = initial();
    return apply_omega(w) + w;  // the series starts at power -1
}

std::vector<Mono> ToroidalOde::block_basis(unsigned d) const {
    std::vector<Mono> basis;
    const std::size_t mid = ring_->id("m"), nid = ring_->id("n");
    for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) {
            Mono mono;
            mono.set(ring_, mid, a);
            mono.set(ring_, nid, b);
            basis.push_back(mono);
        }
    return basis;
}

PolyMatrix ToroidalOde::omega_matrix(unsigned d) const {
    const auto basis = block_basis(d);
    const std::size_t mid = ring_->id("m"), nid = ring_->id("n");
    PolyMatrix mat(basis.size(), basis.size(), Poly(ring_));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const Poly img = casimir_.apply(Poly::monomial(ring_, basis[c], Rational(1)));
        for (std::size_t rw = 0; rw < basis.size(); ++rw) {
            Poly entry(ring_);
            for (const auto& [mono, q] : img.terms())
                if (mono.get(mid) == basis[rw].get(mid) && mono.get(nid) == basis[rw].get(nid)) {
                    Mono rest = mono;
                    rest.set(ring_, mid, 0);
                    rest.set(ring_, nid, 0);
                    entry += Poly::monomial(ring_, rest, q);
                }
            mat(rw, c) = entry;
        }
    }
    return mat;
}

PBWFracVector ToroidalOde::resolvent(long j, const PBWFracVector& b) const {
    const std::size_t mid = ring_->id("m"), nid = ring_->id("n");

    auto layer_part = [&](const Poly& p, unsigned d, const std::vector<Mono>& layer,
                          PolyMatrix& rhs) {
        for (std::size_t rw = 0; rw < layer.size(); ++rw) {
            Poly entry(ring_);
            for (const auto& [mono, q] : p.terms())
                if (mono.get(mid) == layer[rw].get(mid) && mono.get(nid) == layer[rw].get(nid)) {
                    Mono rest = mono;
                    rest.set(ring_, mid, 0);
                    rest.set(ring_, nid, 0);
                    entry += Poly::monomial(ring_, rest, q);
                }
            rhs(rw, 0) = entry;
        }
    };
    auto singular_detail = [&](unsigned d) {
        std::ostringstream os;
        for (unsigned level = 0; level <= d; ++level) {
            const Poly gap = Poly::constant(Rational(j), ring_) - casimir_.omega(level);
            if (gap.is_zero()) os << "resolvent index meets the level-" << level << " eigenvalue";
        }
        return os.str();
    };

    PBWFracVector out(mod_);
    for (const auto& [key, coef] : b.terms()) {
        // Peel the coefficient into homogeneous layers in (m, n) and solve
        // top-down; the Casimir never raises the total degree, so each
        // layer closes against its graded symbol block.
        const Poly& num = coef.num();
        Poly x_num(ring_);
        Poly denom = Poly::constant(Rational(1), ring_);
        Poly rem = num;
        while (!rem.is_zero()) {
            unsigned d = 0;
            for (const auto& [mono, q] : rem.terms())
                d = std::max(d, mono.get(mid) + mono.get(nid));
            std::vector<Mono> layer;
            for (unsigned a = 0; a <= d; ++a) {
                Mono mono;
                mono.set(ring_, mid, a);
                mono.set(ring_, nid, d - a);
                layer.push_back(mono);
            }
            const std::size_t dim = layer.size();
            PolyMatrix A(dim, dim, Poly(ring_));
            for (std::size_t c = 0; c < dim; ++c) {
                const Poly img = casimir_.apply(Poly::monomial(ring_, layer[c], Rational(1)));
                PolyMatrix col(dim, 1, Poly(ring_));
                layer_part(img, d, layer, col);
                for (std::size_t rw = 0; rw < dim; ++rw)
                    A(rw, c) =
                        (rw == c ? Poly::constant(Rational(j), ring_) - col(rw, 0) : -col(rw, 0));
            }
            const Poly delta = det(A);
            if (delta.is_zero()) throw SingularResolvent(j, singular_detail(d));
            PolyMatrix rhs(dim, 1, Poly(ring_));
            layer_part(rem, d, layer, rhs);
            auto sol = solve_columns(A, rhs);
            if (!sol) throw SingularResolvent(j, singular_detail(d));
            Poly xi(ring_);
            for (std::size_t c = 0; c < dim; ++c) {
                const RatFn& coord = (*sol)[0][c];
                const Poly scaled = coord.num() * delta.divexact(coord.den());
                xi += scaled * Poly::monomial(ring_, layer[c], Rational(1));
            }
            x_num = x_num * delta + xi;
            rem = rem * delta - (xi * Rational(j) - casimir_.apply(xi));
            denom = denom * delta;
            unsigned d2 = 0;
            for (const auto& [mono, q] : rem.terms())
                d2 = std::max(d2, mono.get(mid) + mono.get(nid));
            if (!rem.is_zero() && d2 >= d)
                throw std::logic_error("layered resolvent failed to reduce the degree");
        }
        out.add_term(key, RatFn(x_num, denom * coef.den()));
    }
    return out;
}

std::map<long, PBWFracVector> ToroidalOde::solve(long top_power) const {
    std::map<long, PBWFracVector> w;
    if (!consistency_residual().is_zero())
        throw std::domain_error("consistency condition violated");
    w[-1] = initial();
    for (long j = 0; j <= top_power; ++j) {
        PBWFracVector b(mod_);
        for (long i = -1; i < j; ++i)
            b = b + apply_moment(static_cast<unsigned>(j - i - 1), w.at(i));
        w[j] = resolvent(j, b);
    }
    return w;
}

std::map<long, PBWFracVector> ToroidalOde::solve_iterative(
    long top_power, std::vector<long>* lowest_powers) const {
    std::map<long, PBWFracVector> total, current;
    current[-1] = initial();
    total[-1] = current.at(-1);
    if (lowest_powers) lowest_powers->push_back(-1);
    while (!current.empty()) {
        std::map<long, PBWFracVector> rhs;
        for (const auto& [j, v] : current)
            for (unsigned i = 0; j + static_cast<long>(i) <= top_power; ++i) {
                const PBWFracVector t = apply_moment(i, v);
                if (t.is_zero()) continue;
                auto [it, inserted] = rhs.emplace(j + static_cast<long>(i), t);
                if (!inserted) it->second = it->second + t;
            }
        std::map<long, PBWFracVector> next;
        for (const auto& [l, v] : rhs) {
            if (v.is_zero() || l + 1 > top_power) continue;
            next[l + 1] = resolvent(l + 1, v);
        }
        current = std::move(next);
        if (!current.empty() && lowest_powers) lowest_powers->push_back(current.begin()->first);
        for (const auto& [j, v] : current) {
            auto [it, inserted] = total.emplace(j, v);
            if (!inserted) it->second = it->second + v;
        }
    }
    return total;
}

bool ToroidalOde::residual_ok(const std::map<long, PBWFracVector>& w, long top_power) const {
    auto coeff = [&](long j) -> PBWFracVector {
        auto it = w.find(j);
        return it == w.end() ? PBWFracVector(mod_) : it->second;
    };
    for (long j = -1; j <= top_power; ++j) {
        PBWFracVector rhs = apply_omega(coeff(j));
        for (long i = -1; i < j; ++i)
            rhs = rhs + apply_moment(static_cast<unsigned>(j - i - 1), coeff(i));
        const PBWFracVector lhs = coeff(j) * Rational(j);
        if (!(lhs - rhs).is_zero()) return false;
    }
    return true;
}

bool ToroidalOde::spectrum_contained(unsigned d) const {
    for (const auto& mono : block_basis(d)) {
        Poly v = Poly::monomial(ring_, mono, Rational(1));
        for (unsigned n = 0; n <= d; ++n) v = casimir_.apply(v) - casimir_.omega(n) * v;
        if (!v.is_zero()) return false;
    }
    return true;
}

/// --- suites ----------------------------------------------------------------

namespace {

void check(SuiteReport& rep, const std::string& id, bool pass, const std::string& residual = "",
           std::map<std::string, std::string> params = {}) {
    rep.add(CheckResult{id, std::move(params), pass, pass ? "" : residual});
}

QMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> coef(-3, 3);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(coef(rng));
    return m;
}

} // namespace

SuiteReport ode_generic_suite(long top_power, unsigned seed) {
    SuiteReport rep{"ode-generic", {}};
    std::mt19937 rng(seed);

    // twisted integration identity on random finite inputs
    {
        bool ok = true;
        std::string res;
        int done = 0;
        for (int trial = 0; trial < 40 && done < 8 && ok; ++trial) {
            const std::size_t n = 3;
            QMatrix omega = random_matrix(rng, n);
            for (std::size_t i = 0; i < n; ++i) omega(i, i) += Rational(1, 3);
            BlockOde sys(omega, {});
            BlockOde::Series b;
            std::uniform_int_distribution<long> coef(-4, 4);
            for (long j = -2; j <= 3; ++j) {
                BlockOde::Vec v(n);
                for (auto& q : v) q = Rational(coef(rng));
                b[j] = v;
            }
            BlockOde::Series t;
            try {
                t = sys.twisted_integrate(b);
            } catch (const SingularResolvent&) {
                continue;  // resample
            }
            ++done;
            // d/dz t(z) = z^-1 omega t(z) + b(z), termwise
            for (long j = -2; j <= 4 && ok; ++j) {
                BlockOde::Vec lhs(n, Rational(0));
                BlockOde::Vec rhs(n, Rational(0));
                if (auto it = t.find(j + 1); it != t.end()) {
                    lhs = it->second;
                    for (auto& q : lhs) q *= Rational(j + 1);
                    rhs = sys.apply_omega(it->second);
                }
                if (auto it = b.find(j); it != b.end())
                    for (std::size_t a = 0; a < n; ++a) rhs[a] += it->second[a];
                ok = lhs == rhs;
                if (!ok) res = "derivative identity fails at power " + std::to_string(j);
            }
        }
        check(rep, "twisted-integral-derivative-identity", ok && done > 0, res,
              {{"trials", std::to_string(done)}});
    }

    // recursive and iterative solutions agree termwise on random systems
    {
        bool ok = true, residual = true, unique = true;
        std::string res;
        for (int trial = 0; trial < 6 && ok; ++trial) {
            const std::size_t n = 4;
            QMatrix omega(n, n);
            omega(1, 1) = Rational(1, 3);
            omega(2, 2) = Rational(-2, 3);
            omega(3, 3) = Rational(7, 5);
            std::vector<QMatrix> moments;
            for (int i = 0; i < 3; ++i) moments.push_back(random_matrix(rng, n));
            BlockOde sys(omega, moments);
            BlockOde::Vec w0(n, Rational(0));
            w0[0] = 1;
            const auto wa = sys.solve_recursive(w0, 0, top_power);
            const auto wb = sys.solve_iterative(w0, 0, top_power);
            for (long j = 0; j <= top_power && ok; ++j) {
                const auto ita = wa.find(j);
                const auto itb = wb.find(j);
                const BlockOde::Vec va =
                    ita == wa.end() ? BlockOde::Vec(n, Rational(0)) : ita->second;
                const BlockOde::Vec vb =
                    itb == wb.end() ? BlockOde::Vec(n, Rational(0)) : itb->second;
                ok = va == vb;
                if (!ok) res = "solutions differ at power " + std::to_string(j);
            }
            residual = residual && sys.residual_ok(wa, 0, top_power);
            auto perturbed = wa;
            perturbed[1][2] += 1;
            unique = unique && !sys.residual_ok(perturbed, 0, top_power);
        }
        check(rep, "recursive-equals-iterative-random-blocks", ok, res,
              {{"top_power", std::to_string(top_power)}});
        check(rep, "equation-residual-random-blocks", residual);
        check(rep, "perturbed-solution-fails", unique);
    }

    // no moments: the series terminates at the initial power
    {
        QMatrix omega(2, 2);
        omega(0, 0) = Rational(0);
        omega(1, 1) = Rational(1, 2);
        BlockOde sys(omega, {});
        BlockOde::Vec w0{Rational(1), Rational(0)};
        const auto w = sys.solve_recursive(w0, 0, top_power);
        bool ok = true;
        for (const auto& [j, v] : w)
            if (j != 0)
                for (const auto& q : v) ok = ok && q == 0;
        const auto wi = sys.solve_iterative(w0, 0, top_power);
        ok = ok && wi.size() == 1;
        check(rep, "homogeneous-case-terminates", ok);
    }

    return rep;
}

SuiteReport ode_toroidal_suite(long top_power) {
    SuiteReport rep{"ode", {}};
    const ToroidalOde ode;

    check(rep, "consistency-of-initial-coefficient", ode.consistency_residual().is_zero(),
          ode.consistency_residual().str());

    {  // the initial coefficient is an eigenvector with eigenvalue -1
        const auto w = ode.initial();
        const auto img = ode.apply_omega(w);
        check(rep, "initial-eigenvalue-minus-one", (img + w).is_zero(), (img + w).str());
    }

    std::map<long, PBWFracVector> wr;
    bool solved = true;
    std::string err;
    try {
        wr = ode.solve(top_power);
    } catch (const std::exception& e) {
        solved = false;
        err = e.what();
    }
    check(rep, "recursion-solves", solved, err, {{"top_power", std::to_string(top_power)}});
    if (!solved) return rep;

    {  // first computed coefficient is supported on loop generators
        bool ok = !wr.at(0).is_zero();
        for (const auto& [key, c] : wr.at(0).terms()) {
            ok = ok && key.mono.length() == 1;
            for (const auto& [d, mult] : key.mono.factors) ok = ok && in_loop(d) && d.t0 == -1;
        }
        check(rep, "first-step-loop-support", ok);
    }

    {  // every coefficient is loop-supported by construction
        bool ok = true;
        for (const auto& [j, v] : wr)
            for (const auto& [key, c] : v.terms())
                for (const auto& [d, mult] : key.mono.factors) ok = ok && in_loop(d);
        check(rep, "series-loop-support", ok);
    }

    {  // iterated integration agrees termwise and has rising support
        std::vector<long> lowest;
        const auto wi = ode.solve_iterative(top_power, &lowest);
        bool agree = true;
        std::string res;
        for (long j = -1; j <= top_power && agree; ++j) {
            const auto a = wr.find(j);
            const auto b = wi.find(j);
            const bool za = (a == wr.end()) || a->second.is_zero();
            const bool zb = (b == wi.end()) || b->second.is_zero();
            if (za != zb) agree = false;
            else if (!za) agree = (a->second - b->second).is_zero();
            if (!agree) res = "mismatch at power " + std::to_string(j);
        }
        check(rep, "recursive-equals-iterative", agree, res);
        bool support = true;
        for (std::size_t k = 0; k < lowest.size() && k <= 4; ++k)
            support = support && lowest[k] == -1 + static_cast<long>(k);
        check(rep, "iterate-support-rises", support);
    }

    check(rep, "equation-residual", ode.residual_ok(wr, top_power));

    {  // spectrum of the block action is inside the eigenvalue list
        bool ok = true;
        for (unsigned d = 0; d <= 3 && ok; ++d) ok = ode.spectrum_contained(d);
        check(rep, "block-spectrum-containment", ok);
    }

    {  // specializing the parameter into the half-integers breaks a resolvent
        bool raised = false;
        std::string detail;
        try {
            const ToroidalOde bad(Poly::constant(Rational(1, 2)));
            bad.solve(top_power);
        } catch (const SingularResolvent& e) {
            raised = true;
            detail = "power " + std::to_string(e.index()) +
                     (e.factor().empty() ? "" : ": " + e.factor());
        }
        check(rep, "singular-specialization-detected", raised, "no singularity surfaced",
              {{"alpha", "1/2"}, {"detail", detail}});
    }

    return rep;
}

SuiteReport loop_membership_suite(long top_power, long m_lo, long m_hi, long n_lo, long n_hi) {
    SuiteReport rep{"loop-membership", {}};
    const ToroidalOde ode;
    std::map<long, PBWFracVector> wr;
    try {
        wr = ode.solve(top_power);
    } catch (const std::exception& e) {
        check(rep, "series-solved", false, e.what());
        return rep;
    }
    check(rep, "series-solved", true, "", {{"top_power", std::to_string(top_power)}});

    {  // structural loop support of every computed coefficient
        bool ok = true;
        for (const auto& [j, v] : wr)
            for (const auto& [key, c] : v.terms())
                for (const auto& [d, mult] : key.mono.factors) ok = ok && in_loop(d);
        check(rep, "series-loop-support", ok);
    }

    const ModCtx modH = InducedModule::weight_module(AlgebraKind::H, default_ctx());
    const std::vector<std::string> fresh{"s", "r", "k", "u"};
    const std::string n_note = "symbolic base point covers offsets " + std::to_string(n_lo) +
                               ".." + std::to_string(n_hi);

    for (long m0 = m_lo; m0 <= m_hi; ++m0) {
        for (long j = 1; j <= top_power + 1; ++j) {
            const PBWFracVector q = specialize_vector(wr.at(j - 1), m0, 0, modH);
            PBWFracVector direct(modH);
            PBWMono mono;
            mono.factors.emplace_back(deriv1(-j, m0), 1u);
            direct.add_term(PBWKey{mono, TopVector::weight(0L)},
                            RatFn(Poly::constant(Rational(1), default_ctx())));
            const PBWFracVector diff = q - direct;
            bool pass;
            std::string residual;
            std::map<std::string, std::string> params{{"m0", std::to_string(m0)},
                                                      {"degree", std::to_string(j)},
                                                      {"base", n_note}};
            if (j == 1 && m0 >= -1 && m0 <= 1) {
                pass = diff.is_zero();
                params["mode"] = "exact";
                if (!pass) residual = diff.str();
            } else {
                const auto bad = radical_residuals(modH, diff, static_cast<unsigned>(j), fresh);
                pass = bad.empty();
                params["mode"] = "modulo-radical";
                if (!pass) residual = bad.front().first + " -> " + bad.front().second;
            }
            rep.add(CheckResult{"specialization-matches-direct-action", std::move(params), pass,
                                residual});
        }
    }
    return rep;
}

} // namespace toroidal
