#include "toroidal/linalg.hpp"

#include <algorithm>

namespace toroidal {

namespace {

// Fraction-free (Bareiss) forward elimination in place. Returns the rank,
// fills pivot_cols with the pivot column of each eliminated row and sign
// with the permutation sign. After the call, m is upper-echelon and the
// determinant of a full-rank square input is the last pivot times sign.
std::size_t bareiss_echelon(PolyMatrix& m, std::vector<std::size_t>& pivot_cols, int& sign) {
    const std::size_t rows = m.rows(), cols = m.cols();
    sign = 1;
    pivot_cols.clear();
    Poly prev;  // previous pivot; empty means 1
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Exact pivoting: pick the shortest nonzero candidate to slow growth.
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            if (best == rows || m(i, c).terms().size() < m(best, c).terms().size()) best = i;
        }
        if (best == rows) continue;
        if (best != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(best, j));
            sign = -sign;
        }
        const Poly pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Poly factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                Poly num = m(i, j) * pivot - factor * m(r, j);
                m(i, j) = prev.is_zero() ? std::move(num) : num.divexact(prev);
            }
        }
        prev = pivot;
        pivot_cols.push_back(c);
        ++r;
    }
    return r;
}

} // namespace

Rational det(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    // Clear denominators row by row, then integer Bareiss.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class lcm(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = m(i, j) * Rational(lcm);
            a[i][j] = v.get_num();
        }
        scale *= Rational(lcm);
    }
    int sign = 1;
    mpz_class prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k) { std::swap(a[p], a[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    Rational d(a[n - 1][n - 1] * sign);
    return d / scale;
}

Poly det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
    if (m.rows() == 0) return Poly::constant(Rational(1));
    PolyMatrix w = m;
    std::vector<std::size_t> pivots;
    int sign = 1;
    const std::size_t r = bareiss_echelon(w, pivots, sign);
    const Ctx ctx = m(0, 0).ctx();
    if (r < m.rows()) return Poly(ctx);
    Poly d = w(m.rows() - 1, m.cols() - 1);
    return sign < 0 ? -d : d;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    QMatrix w = m;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && w(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(w(r, j), w(p, j));
        const Rational inv = Rational(1) / w(r, c);
        for (std::size_t j = c; j < cols; ++j) w(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || w(i, c) == 0) continue;
            const Rational f = w(i, c);
            for (std::size_t j = c; j < cols; ++j) w(i, j) -= f * w(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -w(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const QMatrix& m) {
    return m.cols() - nullspace(m).size();
}

std::vector<std::vector<Poly>> nullspace(const PolyMatrix& m) {
    const std::size_t cols = m.cols();
    if (m.rows() == 0 || cols == 0) return {};
    const Ctx ctx = m(0, 0).ctx();
    PolyMatrix w = m;
    std::vector<std::size_t> pivot_cols;
    int sign = 1;
    const std::size_t r = bareiss_echelon(w, pivot_cols, sign);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Poly>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // Back-substitute over the fraction field, then clear denominators.
        std::vector<RatFn> v(cols, RatFn(Poly(ctx)));
        v[f] = RatFn(Poly::constant(Rational(1), ctx));
        for (std::size_t ii = r; ii-- > 0;) {
            const std::size_t pc = pivot_cols[ii];
            RatFn acc{Poly(ctx)};
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!v[j].is_zero() && !w(ii, j).is_zero()) acc += w(ii, j) * v[j];
            v[pc] = -acc / RatFn(w(ii, pc));
        }
        // Clear denominators by the plain product; the primitive
        // normalization below removes the overshoot.
        Poly common_den = Poly::constant(Rational(1), ctx);
        for (const auto& e : v)
            if (!e.den().is_constant()) common_den *= e.den();
        std::vector<Poly> pv(cols, Poly(ctx));
        for (std::size_t j = 0; j < cols; ++j)
            pv[j] = v[j].num() * common_den.divexact(v[j].den());
        // Primitive normalization, first nonzero entry with positive lead.
        Rational g(0);
        for (const auto& p : pv) {
            if (p.is_zero()) continue;
            Rational c = p.content();
            if (c < 0) c = -c;
            if (g == 0) {
                g = c;
            } else {
                mpz_class num, den;
                mpz_gcd(num.get_mpz_t(), g.get_num().get_mpz_t(), c.get_num().get_mpz_t());
                mpz_lcm(den.get_mpz_t(), g.get_den().get_mpz_t(), c.get_den().get_mpz_t());
                g = Rational(num, den);
                g.canonicalize();
            }
        }
        if (g != 0) {
            bool negate = false;
            for (const auto& p : pv)
                if (!p.is_zero()) { negate = p.terms().front().second < 0; break; }
            const Rational scale = (negate ? -Rational(1) : Rational(1)) / g;
            for (auto& p : pv) p *= scale;
        }
        basis.push_back(std::move(pv));
    }
    return basis;
}

std::size_t rank(const PolyMatrix& m) {
    PolyMatrix w = m;
    std::vector<std::size_t> pivots;
    int sign = 1;
    return bareiss_echelon(w, pivots, sign);
}

std::optional<std::vector<RatFn>> solve(const PolyMatrix& a, const std::vector<Poly>& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::domain_error("solve expects a square system");
    const std::size_t n = a.rows();
    if (n == 0) return std::vector<RatFn>{};
    const Ctx ctx = a(0, 0).ctx();
    PolyMatrix w(n, n + 1, Poly(ctx));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n) = b[i];
    }
    std::vector<std::size_t> pivots;
    int sign = 1;
    const std::size_t r = bareiss_echelon(w, pivots, sign);
    if (r < n || pivots.back() == n) return std::nullopt;  // singular on this block
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    std::vector<RatFn> x(n, RatFn(Poly(ctx)));
    for (std::size_t ii = n; ii-- > 0;) {
        RatFn acc = RatFn(w(ii, n));
        for (std::size_t j = ii + 1; j < n; ++j) acc -= w(ii, j) * x[j];
        x[ii] = acc / RatFn(w(ii, ii));
    }
    return x;
}

std::optional<std::vector<std::vector<RatFn>>> solve_columns(const PolyMatrix& a,
                                                             const PolyMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::domain_error("solve_columns expects a square system");
    const std::size_t n = a.rows(), k = b.cols();
    if (n == 0) return std::vector<std::vector<RatFn>>(k);
    const Ctx ctx = a(0, 0).ctx();
    PolyMatrix w(n, n + k, Poly(ctx));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j) w(i, n + j) = b(i, j);
    }
    std::vector<std::size_t> pivots;
    int sign = 1;
    const std::size_t r = bareiss_echelon(w, pivots, sign);
    if (r < n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    std::vector<std::vector<RatFn>> out(k, std::vector<RatFn>(n, RatFn{Poly(ctx)}));
    for (std::size_t col = 0; col < k; ++col)
        for (std::size_t ii = n; ii-- > 0;) {
            RatFn acc = RatFn(w(ii, n + col));
            for (std::size_t j = ii + 1; j < n; ++j) acc -= w(ii, j) * out[col][j];
            out[col][ii] = acc / RatFn(w(ii, ii));
        }
    return out;
}

Poly char_poly(const PolyMatrix& m, const std::string& lambda_symbol) {
    if (m.rows() != m.cols()) throw std::domain_error("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(Rational(1));
    const Ctx ctx = m(0, 0).ctx();
    const Poly lambda = Poly::variable(lambda_symbol, ctx);
    PolyMatrix w(n, n, Poly(ctx));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w(i, j) = (i == j ? lambda - m(i, j) : -m(i, j));
    return det(w);
}

std::vector<Poly> lagrange_interpolate(
    const std::vector<std::pair<long, std::vector<Poly>>>& nodes,
    unsigned degree_bound, const std::string& symbol, const Ctx& ctx) {
    if (nodes.empty()) throw std::domain_error("interpolation requires nodes");
    if (nodes.size() < degree_bound + 1)
        throw std::domain_error("insufficient interpolation nodes for degree bound");
    const std::size_t arity = nodes[0].second.size();
    for (const auto& [x, vals] : nodes)
        if (vals.size() != arity)
            throw std::domain_error("interpolation values have inconsistent basis arity");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::domain_error("repeated interpolation node");

    const Poly X = Poly::variable(symbol, ctx);
    // master polynomial prod (X - x_j)
    Poly master = Poly::constant(Rational(1), ctx);
    for (const auto& [x, vals] : nodes)
        master *= X - Poly::constant(Rational(x), ctx);

    std::vector<Poly> out(arity, Poly(ctx));
    for (const auto& [xi, vals] : nodes) {
        const Poly li_num = master.divexact(X - Poly::constant(Rational(xi), ctx));
        Rational denom(1);
        for (const auto& [xj, vj] : nodes)
            if (xj != xi) denom *= Rational(xi - xj);
        const Poly li = li_num * (Rational(1) / denom);
        for (std::size_t t = 0; t < arity; ++t)
            if (!vals[t].is_zero()) out[t] += vals[t] * li;
    }
    const std::size_t id = ctx->id(symbol);
    for (const auto& p : out)
        if (p.degree_in(id) > degree_bound)
            throw std::domain_error("interpolated family exceeds stated degree bound");
    return out;
}

} // namespace toroidal
