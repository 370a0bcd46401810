#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/linalg.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

/// A full-row-rank real matrix whose rows generate a lattice under integer
/// combinations. Construction validates independence once so the algorithms
/// below can assume it.
class LatticeBasis {
public:
    explicit LatticeBasis(RealMatrix rows) : rows_(std::move(rows)) {
        if (rows_.empty())
            throw NotFullRank("lattice basis must contain at least one row");
        try {
            cholesky(gram(rows_), 1e-12);
        } catch (const NotPositiveDefinite&) {
            throw NotFullRank("lattice basis rows are not linearly independent");
        }
    }

    const RealMatrix& rows() const { return rows_; }
    std::size_t k() const { return rows_.rows(); }
    std::size_t ambient_dim() const { return rows_.cols(); }

private:
    RealMatrix rows_;
};

/// Volume of the unit ball in R^k.
inline double unit_ball_volume(std::size_t k) {
    const double kd = static_cast<double>(k);
    return std::pow(std::numbers::pi, kd / 2.0) / std::tgamma(kd / 2.0 + 1.0);
}

/// An LLL-reduced basis together with the unimodular integer transform that
/// produced it: basis = transform * original.
struct ReducedBasis {
    RealMatrix basis;
    std::vector<std::vector<long long>> transform;
};

/// Lenstra–Lenstra–Lovász reduction with parameter delta_param in (0.25, 1).
/// The default 0.99 gives near-optimal reduction quality, which keeps the
/// exact enumeration below cheap.
inline ReducedBasis lll_reduce_with_transform(const LatticeBasis& lattice,
                                              double delta_param = 0.99) {
    if (!(delta_param > 0.25 && delta_param < 1.0))
        throw DegenerateInput("lll: delta parameter must lie in (0.25, 1)");

    RealMatrix b = lattice.rows();
    const std::size_t k = b.rows();
    const std::size_t dim = b.cols();

    std::vector<std::vector<long long>> u(k, std::vector<long long>(k, 0));
    for (std::size_t i = 0; i < k; ++i) u[i][i] = 1;

    // Gram–Schmidt data for the current basis: orthogonal rows bstar, the
    // projection coefficients mu, and the squared norms of bstar.
    RealMatrix bstar(k, dim);
    RealMatrix mu(k, k);
    std::vector<double> nsq(k);
    auto recompute_gs = [&] {
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < dim; ++j) bstar(i, j) = b(i, j);
            for (std::size_t t = 0; t < i; ++t) {
                double dot = 0.0;
                for (std::size_t j = 0; j < dim; ++j) dot += b(i, j) * bstar(t, j);
                const double m = dot / nsq[t];
                mu(i, t) = m;
                for (std::size_t j = 0; j < dim; ++j) bstar(i, j) -= m * bstar(t, j);
            }
            double n = 0.0;
            for (std::size_t j = 0; j < dim; ++j) n += bstar(i, j) * bstar(i, j);
            nsq[i] = n;
        }
    };
    recompute_gs();

    std::size_t kk = 1;
    long iterations = 0;
    while (kk < k) {
        if (++iterations > 1'000'000)
            throw NumericalFailure("lll: iteration budget exhausted");

        // Size-reduce row kk against rows kk-1 .. 0. Subtracting an integer
        // multiple of an earlier row leaves bstar untouched, so mu can be
        // updated in place.
        for (std::size_t jj = kk; jj-- > 0;) {
            const long long q = std::llround(mu(kk, jj));
            if (q == 0) continue;
            for (std::size_t j = 0; j < dim; ++j)
                b(kk, j) -= static_cast<double>(q) * b(jj, j);
            for (std::size_t j = 0; j < k; ++j) u[kk][j] -= q * u[jj][j];
            for (std::size_t t = 0; t < jj; ++t)
                mu(kk, t) -= static_cast<double>(q) * mu(jj, t);
            mu(kk, jj) -= static_cast<double>(q);
        }

        const double lovasz = (delta_param - mu(kk, kk - 1) * mu(kk, kk - 1)) * nsq[kk - 1];
        if (nsq[kk] >= lovasz) {
            ++kk;
        } else {
            b.swap_rows(kk, kk - 1);
            std::swap(u[kk], u[kk - 1]);
            recompute_gs();
            kk = std::max<std::size_t>(kk - 1, 1);
        }
    }

    return {std::move(b), std::move(u)};
}

inline LatticeBasis lll_reduce(const LatticeBasis& lattice, double delta_param = 0.99) {
    return LatticeBasis(lll_reduce_with_transform(lattice, delta_param).basis);
}

namespace detail {

/// Depth-first enumeration of all nonzero integer coefficient vectors c with
/// ||R c||^2 <= radius2, where R is the upper-triangular Cholesky transpose of
/// the basis Gram matrix. Visits levels from the last coordinate down, pruning
/// on the accumulated partial norm. The callback receives (c, squared norm).
template <class Callback>
void enumerate_in_sphere(const RealMatrix& r, double radius2, Callback&& cb,
                         long node_budget = 50'000'000) {
    const std::size_t k = r.rows();
    std::vector<long long> c(k, 0);
    long nodes = 0;
    const double fuzz = radius2 * 1e-12 + 1e-300;

    auto descend = [&](auto&& self, std::size_t level, double used) -> void {
        if (++nodes > node_budget)
            throw NumericalFailure("lattice enumeration: node budget exhausted");
        const std::size_t i = level - 1;
        double off = 0.0;
        for (std::size_t j = i + 1; j < k; ++j) off += r(i, j) * static_cast<double>(c[j]);

        const double rem = radius2 - used;
        const double rii = r(i, i);
        const double center = -off / rii;
        const double halfwidth = std::sqrt(std::max(rem, 0.0)) / rii;
        const long long lo = static_cast<long long>(std::ceil(center - halfwidth - 1e-9));
        const long long hi = static_cast<long long>(std::floor(center + halfwidth + 1e-9));

        for (long long v = lo; v <= hi; ++v) {
            const double term = off + rii * static_cast<double>(v);
            const double contribution = term * term;
            if (contribution > rem + fuzz) continue;
            c[i] = v;
            if (i == 0) {
                bool zero = true;
                for (long long x : c)
                    if (x != 0) { zero = false; break; }
                if (!zero) cb(c, used + contribution);
            } else {
                self(self, i, used + contribution);
            }
        }
        c[i] = 0;
    };

    descend(descend, k, 0.0);
}

} // namespace detail

struct ShortestVectorResult {
    double mu = 0.0;                      ///< squared length of a shortest nonzero vector
    std::vector<long long> coeffs;        ///< witness in the original basis, canonical sign
    long long count_up_to_sign = 0;       ///< number of +/- pairs attaining mu
};

/// Exact shortest vector by LLL reduction followed by sphere enumeration.
///
/// The first pass enumerates within the norm of the shortest reduced basis row
/// and takes the minimum; the second collects every solution with squared norm
/// at most mu * (1 + 1e-9). Coefficients are mapped back through the reduction
/// transform, normalised so the first nonzero coefficient is positive, and the
/// lexicographically smallest witness is reported.
inline ShortestVectorResult shortest_vector(const LatticeBasis& lattice) {
    const ReducedBasis red = lll_reduce_with_transform(lattice);
    const std::size_t k = lattice.k();

    const RealMatrix g = gram(red.basis);
    const RealMatrix upper = cholesky(g, 1e-14).transposed();

    double seed = g(0, 0);
    for (std::size_t i = 1; i < k; ++i) seed = std::min(seed, g(i, i));

    double mu = seed;
    detail::enumerate_in_sphere(upper, seed * (1.0 + 1e-9),
                                [&](const std::vector<long long>&, double q) {
                                    mu = std::min(mu, q);
                                });

    std::vector<std::vector<long long>> minimal;
    const double collect_radius = mu * (1.0 + 1e-9);
    detail::enumerate_in_sphere(upper, collect_radius,
                                [&](const std::vector<long long>& c, double q) {
                                    if (q > collect_radius) return;
                                    // back to original-basis coefficients
                                    std::vector<long long> orig(k, 0);
                                    for (std::size_t i = 0; i < k; ++i) {
                                        if (c[i] == 0) continue;
                                        for (std::size_t j = 0; j < k; ++j)
                                            orig[j] += c[i] * red.transform[i][j];
                                    }
                                    for (long long x : orig) {
                                        if (x == 0) continue;
                                        if (x < 0)
                                            for (long long& y : orig) y = -y;
                                        break;
                                    }
                                    minimal.push_back(std::move(orig));
                                });

    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    if (minimal.empty())
        throw NumericalFailure("shortest vector enumeration found no candidates");

    ShortestVectorResult out;
    out.mu = mu;
    out.coeffs = minimal.front();
    out.count_up_to_sign = static_cast<long long>(minimal.size());
    return out;
}

/// Packing parameters of the lattice generated by the basis rows.
struct LatticeReport {
    int k = 0;                                ///< lattice rank
    double mu = 0.0;                          ///< minimal squared norm
    double det_lambda = 0.0;                  ///< covolume sqrt(det(B B^T))
    double delta = 0.0;                       ///< centre density (mu^(1/2)/2)^k / det
    double density = 0.0;                     ///< packing density delta * V_k
    std::vector<long long> shortest_coeffs;   ///< witness coefficients
    std::vector<double> shortest_vector;      ///< witness embedded in R^n
    long long kissing = 0;                    ///< minimal vectors, both signs
};

inline LatticeReport analyze(const LatticeBasis& lattice) {
    const ShortestVectorResult sv = shortest_vector(lattice);
    const std::size_t k = lattice.k();

    LatticeReport report;
    report.k = static_cast<int>(k);
    report.mu = sv.mu;
    report.det_lambda = std::sqrt(det_spd(gram(lattice.rows())));
    report.delta = std::pow(std::sqrt(sv.mu) / 2.0, static_cast<double>(k)) / report.det_lambda;
    report.density = report.delta * unit_ball_volume(k);
    report.shortest_coeffs = sv.coeffs;
    report.shortest_vector.assign(lattice.ambient_dim(), 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < lattice.ambient_dim(); ++j)
            report.shortest_vector[j] +=
                static_cast<double>(sv.coeffs[i]) * lattice.rows()(i, j);
    report.kissing = 2 * sv.count_up_to_sign;
    return report;
}

/// Minimal squared norm over all nonzero coefficient vectors with entries in
/// [-coeff_bound, coeff_bound], evaluated directly against the basis rows.
/// Exhaustive and independent of the reduction/enumeration pipeline above,
/// which is exactly what makes it a useful cross-check; cost grows as
/// (2*coeff_bound+1)^k.
inline double brute_force_shortest(const LatticeBasis& lattice, int coeff_bound) {
    if (coeff_bound < 1)
        throw DegenerateInput("brute_force_shortest: coefficient bound must be at least 1");
    const RealMatrix& b = lattice.rows();
    const std::size_t k = b.rows();
    const std::size_t dim = b.cols();

    std::vector<double> x(dim, 0.0);
    std::vector<long long> c(k, -static_cast<long long>(coeff_bound) - 1);
    double best = -1.0;

    auto walk = [&](auto&& self, std::size_t level) -> void {
        if (level == k) {
            bool zero = true;
            for (long long v : c)
                if (v != 0) { zero = false; break; }
            if (zero) return;
            double q = 0.0;
            for (double v : x) q += v * v;
            if (best < 0.0 || q < best) best = q;
            return;
        }
        for (long long v = -coeff_bound; v <= coeff_bound; ++v) {
            c[level] = v;
            if (v != -coeff_bound)
                for (std::size_t j = 0; j < dim; ++j) x[j] += b(level, j);
            else
                for (std::size_t j = 0; j < dim; ++j)
                    x[j] += static_cast<double>(v) * b(level, j);
            self(self, level + 1);
        }
        for (std::size_t j = 0; j < dim; ++j)
            x[j] -= static_cast<double>(coeff_bound) * b(level, j);
        c[level] = 0;
    };
    walk(walk, 0);
    return best;
}

} // namespace spectral
