#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

/// Default relative tolerance used to decide which pivots count as nonzero.
inline constexpr double kDefaultRankTol = 1e-9;

template <class Scalar>
struct RrefResult {
    DenseMatrix<Scalar> reduced;              ///< the reduced row echelon form
    std::vector<std::size_t> pivot_columns;   ///< ascending pivot column indices
    std::size_t rank = 0;                     ///< number of pivots
    double zero_threshold = 0.0;              ///< absolute threshold that was applied
};

/// Reduced row echelon form by Gauss–Jordan elimination with partial
/// (largest-magnitude) pivoting.
///
/// Entries are treated as zero when their magnitude is at most
/// rank_tol * max|entry of the input|. Pivots are normalised to exactly 1 and
/// eliminated positions set to exactly 0, so two matrices with the same row
/// space reduce to the same RREF up to roundoff in the non-pivot columns.
template <class Scalar>
RrefResult<Scalar> rref(DenseMatrix<Scalar> m, double rank_tol = kDefaultRankTol) {
    if (m.empty())
        throw DegenerateInput("rref: matrix must have at least one row and one column");
    if (!(rank_tol > 0.0))
        throw DegenerateInput("rref: rank tolerance must be positive");

    RrefResult<Scalar> out;
    out.zero_threshold = rank_tol * m.max_abs();

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        // Largest magnitude entry in this column at or below pivot_row.
        std::size_t best = pivot_row;
        double best_mag = std::abs(m(pivot_row, col));
        for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
            const double mag = std::abs(m(r, col));
            if (mag > best_mag) {
                best = r;
                best_mag = mag;
            }
        }
        if (best_mag <= out.zero_threshold) continue;

        m.swap_rows(pivot_row, best);
        const Scalar pivot = m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) /= pivot;
        m(pivot_row, col) = Scalar{1};

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row) continue;
            const Scalar factor = m(r, col);
            if (factor == Scalar{}) continue;
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= factor * m(pivot_row, j);
            m(r, col) = Scalar{};
        }

        out.pivot_columns.push_back(col);
        ++pivot_row;
    }

    // Rows beyond the rank are numerically zero; clear them outright so the
    // reduced form is canonical, and strip signed zeros for the same reason.
    out.rank = out.pivot_columns.size();
    for (std::size_t r = out.rank; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = Scalar{};
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(r, j) == Scalar{}) m(r, j) = Scalar{};

    out.reduced = std::move(m);
    return out;
}

/// Null space basis read off an already-computed RREF: one basis row per free
/// column f, with +1 in position f and -R[i][f] in pivot column p_i. Rows are
/// ordered by ascending free column, which makes the basis canonical for a
/// given row space.
template <class Scalar>
DenseMatrix<Scalar> null_space_from_rref(const RrefResult<Scalar>& r) {
    const std::size_t n = r.reduced.cols();
    const std::size_t k = n - r.rank;
    DenseMatrix<Scalar> basis(k, n);

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivot_columns) is_pivot[p] = true;

    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        basis(row, f) = Scalar{1};
        for (std::size_t i = 0; i < r.rank; ++i) {
            const Scalar v = -r.reduced(i, f);
            // avoid writing -0.0 into a canonical basis
            basis(row, r.pivot_columns[i]) = v == Scalar{} ? Scalar{} : v;
        }
        ++row;
    }
    return basis;
}

/// Canonical basis of { x : m x = 0 }, as rows of a (cols - rank) x cols matrix.
template <class Scalar>
DenseMatrix<Scalar> null_space_basis(const DenseMatrix<Scalar>& m,
                                     double rank_tol = kDefaultRankTol) {
    return null_space_from_rref(rref(m, rank_tol));
}

/// Numerical rank checked across a sweep of tolerances. Throws RankInstability
/// when the decision flips anywhere in [1e-10, 1e-7], since no dimension could
/// then be reported with confidence.
template <class Scalar>
std::size_t stable_rank(const DenseMatrix<Scalar>& m, double rank_tol = kDefaultRankTol) {
    std::array<double, 4> sweep{1e-10, 1e-9, 1e-8, 1e-7};
    sweep[1] = std::clamp(rank_tol, 1e-10, 1e-7);

    std::size_t base = rref(m, sweep[0]).rank;
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        const std::size_t r = rref(m, sweep[i]).rank;
        if (r != base) {
            std::ostringstream msg;
            msg << "rank is " << base << " at tolerance " << sweep[0] << " but " << r
                << " at " << sweep[i];
            throw RankInstability(msg.str());
        }
    }
    return base;
}

/// Real part of a numerically real complex matrix. Any imaginary part larger
/// than `imag_tol` in magnitude means the realness assumption failed, which is
/// reported rather than silently truncated.
inline RealMatrix realify(const ComplexMatrix& m, double imag_tol = 1e-9) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            worst = std::max(worst, std::abs(m(i, j).imag()));
    if (worst > imag_tol) {
        std::ostringstream msg;
        msg << "realify: imaginary part " << worst << " exceeds tolerance " << imag_tol;
        throw NumericalFailure(msg.str());
    }
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).real();
    return out;
}

/// Gram matrix b * b^T of a real row basis, symmetrised exactly.
inline RealMatrix gram(const RealMatrix& b) {
    if (b.empty())
        throw DegenerateInput("gram: matrix must have at least one row and one column");
    RealMatrix g(b.rows(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i; j < b.rows(); ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t < b.cols(); ++t) s += b(i, t) * b(j, t);
            g(i, j) = s;
            g(j, i) = s;
        }
    return g;
}

/// Cholesky factor L (lower triangular, m = L L^T) of a symmetric positive
/// definite matrix. A pivot at or below pivot_floor * max diagonal entry
/// raises NotPositiveDefinite; the default floor of 0 rejects only pivots
/// that are actually non-positive.
inline RealMatrix cholesky(const RealMatrix& m, double pivot_floor = 0.0) {
    if (m.empty() || m.rows() != m.cols())
        throw DegenerateInput("cholesky: matrix must be square and non-empty");

    double scale = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) scale = std::max(scale, std::abs(m(i, i)));
    double sym = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            sym = std::max(sym, std::abs(m(i, j) - m(j, i)));
    if (sym > 1e-9 * std::max(1.0, scale))
        throw DegenerateInput("cholesky: matrix is not symmetric");

    const std::size_t n = m.rows();
    RealMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = m(i, j);
            for (std::size_t t = 0; t < j; ++t) s -= l(i, t) * l(j, t);
            if (i == j) {
                if (s <= pivot_floor * scale || !(s > 0.0)) {
                    std::ostringstream msg;
                    msg << "cholesky: pivot " << s << " at index " << i
                        << " is not acceptably positive";
                    throw NotPositiveDefinite(msg.str());
                }
                l(i, i) = std::sqrt(s);
            } else {
                l(i, j) = s / l(j, j);
            }
        }
    }
    return l;
}

/// Determinant of a symmetric positive definite matrix via Cholesky.
inline double det_spd(const RealMatrix& m) {
    const RealMatrix l = cholesky(m);
    double det = 1.0;
    for (std::size_t i = 0; i < l.rows(); ++i) det *= l(i, i) * l(i, i);
    return det;
}

/// Solves (L L^T) x = b given the Cholesky factor L.
inline std::vector<double> cholesky_solve(const RealMatrix& l, std::span<const double> b) {
    const std::size_t n = l.rows();
    if (b.size() != n) throw LengthMismatch("cholesky_solve: dimension mismatch");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t t = 0; t < i; ++t) s -= l(i, t) * y[t];
        y[i] = s / l(i, i);
    }
    std::vector<double> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t t = ii + 1; t < n; ++t) s -= l(t, ii) * x[t];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

/// Largest infinity-norm residual left after orthogonally projecting each row
/// of `a` onto the row space of `b`. Near zero iff rowspace(a) is contained in
/// rowspace(b).
inline double subspace_residual(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.cols())
        throw LengthMismatch("subspace_residual: ambient dimensions differ");
    const RealMatrix l = cholesky(gram(b), 1e-14);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        // coefficients of the projection: (b b^T)^-1 b a_i
        std::vector<double> rhs(b.rows(), 0.0);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            double s = 0.0;
            for (std::size_t j = 0; j < b.cols(); ++j) s += b(r, j) * a(i, j);
            rhs[r] = s;
        }
        const std::vector<double> coeff = cholesky_solve(l, rhs);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double res = a(i, j);
            for (std::size_t r = 0; r < b.rows(); ++r) res -= coeff[r] * b(r, j);
            worst = std::max(worst, std::abs(res));
        }
    }
    return worst;
}

} // namespace spectral
