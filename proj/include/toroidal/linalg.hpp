#ifndef TOROIDAL_LINALG_HPP
#define TOROIDAL_LINALG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "toroidal/poly.hpp"

namespace toroidal {

/// Dense rectangular matrix; entries share one ring context by construction
/// of the callers.
template <typename S>
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols, S fill = S())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<S>& row) {
        if (cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw std::domain_error("row length mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<S> data_;
};

using QMatrix = DenseMatrix<Rational>;
using PolyMatrix = DenseMatrix<Poly>;

/// Exact determinant of a rational matrix (denominator-cleared integer
/// Bareiss elimination).
Rational det(const QMatrix& m);

/// Exact determinant over the polynomial ring, by fraction-free elimination
/// with exact divisions.
Poly det(const PolyMatrix& m);

/// Exact kernel basis of a rational matrix; vectors satisfy Mv = 0 and the
/// basis is in reduced echelon form of the free columns. Empty result means
/// trivial kernel.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);

/// Exact kernel basis over the fraction field of the polynomial ring,
/// returned with denominators cleared: entries are primitive polynomial
/// vectors. Fraction-free forward elimination with exact pivoting.
std::vector<std::vector<Poly>> nullspace(const PolyMatrix& m);

std::size_t rank(const QMatrix& m);
std::size_t rank(const PolyMatrix& m);

/// Solves A x = b over the fraction field; empty result when A is singular
/// on the relevant block (rank-deficient square system).
std::optional<std::vector<RatFn>> solve(const PolyMatrix& a, const std::vector<Poly>& b);

/// Simultaneous solve for every column of B; one elimination pass.
std::optional<std::vector<std::vector<RatFn>>> solve_columns(const PolyMatrix& a,
                                                             const PolyMatrix& b);

/// det(lambda I - m) with lambda a designated context symbol.
Poly char_poly(const PolyMatrix& m, const std::string& lambda_symbol);

/// Lagrange interpolation of a tuple family through integer nodes.
/// Values are coefficient tuples over a common basis; the result is the
/// unique polynomial tuple of degree <= degree_bound in `symbol` matching
/// every node. Throws on repeated nodes, inconsistent tuple arity or an
/// insufficient node count.
std::vector<Poly> lagrange_interpolate(
    const std::vector<std::pair<long, std::vector<Poly>>>& nodes,
    unsigned degree_bound, const std::string& symbol, const Ctx& ctx = default_ctx());

} // namespace toroidal

#endif
