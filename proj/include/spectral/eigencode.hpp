#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/lattice.hpp"
#include "spectral/linalg.hpp"
#include "spectral/matrix.hpp"
#include "spectral/transforms.hpp"

namespace spectral {

enum class EigenSign { Plus, Minus };

inline std::string to_string(EigenSign s) {
    return s == EigenSign::Plus ? "plus" : "minus";
}

/// Selects one real eigenspace of a transform: the +sqrt(n) or -sqrt(n) one
/// (+1/-1 under unitary scaling).
struct CodeSpec {
    TransformSpec transform;
    EigenSign sign = EigenSign::Plus;
};

inline double code_eigenvalue(const CodeSpec& spec) {
    const double magnitude =
        spec.transform.unitary ? 1.0 : std::sqrt(static_cast<double>(spec.transform.n));
    return spec.sign == EigenSign::Plus ? magnitude : -magnitude;
}

struct DimensionPair {
    int plus = 0;
    int minus = 0;
};

/// Multiplicities of the +sqrt(n) and -sqrt(n) eigenvalues of the Fourier
/// matrix. Writing n = 4m + r: the + multiplicity is m + 1 for every r, and
/// the - multiplicity is m for r in {0, 1} and m + 1 for r in {2, 3}. The
/// remaining dimensions belong to the imaginary eigenvalues.
inline DimensionPair fourier_dimensions(int n) {
    if (n < 1) throw DegenerateInput("fourier_dimensions: length must be at least 1");
    const int m = n / 4;
    const int r = n % 4;
    return {m + 1, m + (r >= 2 ? 1 : 0)};
}

/// Multiplicities of the +sqrt(n) and -sqrt(n) eigenvalues of the Hartley
/// matrix. These two exhaust R^n: ceil(n/2) + [n = 0 mod 4] for the + space
/// and floor(n/2) - [n = 0 mod 4] for the - space.
inline DimensionPair hartley_dimensions(int n) {
    if (n < 1) throw DegenerateInput("hartley_dimensions: length must be at least 1");
    const int adj = (n % 4 == 0) ? 1 : 0;
    return {(n + 1) / 2 + adj, n / 2 - adj};
}

inline DimensionPair eigenspace_dimensions(TransformKind kind, int n) {
    return kind == TransformKind::Fourier ? fourier_dimensions(n) : hartley_dimensions(n);
}

inline int expected_dimension(const CodeSpec& spec) {
    const DimensionPair d = eigenspace_dimensions(spec.transform.kind, spec.transform.n);
    return spec.sign == EigenSign::Plus ? d.plus : d.minus;
}

/// A real [n, k] block code carved out of one real eigenspace of a transform:
/// the generator rows form a canonical basis of ker([T] - lambda*I) and the
/// parity-check rows are the nonzero rows of its RREF.
struct EigencodeResult {
    CodeSpec spec;
    int k = 0;
    RealMatrix generator;                      ///< k x n, canonical null space basis
    RealMatrix parity_check;                   ///< (n - k) x n, RREF rows
    std::vector<std::size_t> pivot_columns;
    bool systematic = false;                   ///< pivots occupy the leading columns
};

struct EigensequenceCheck {
    bool is_eigensequence = false;
    double residual = 0.0;     ///< max |([T]x)_i - lambda*x_i|
    double threshold = 0.0;    ///< residual_tol * sqrt(n) * max|x_i|
    double lambda = 0.0;
};

/// Tests whether x satisfies [T] x = lambda x to within
/// residual_tol * sqrt(n) * ||x||_inf.
inline EigensequenceCheck check_eigensequence(const CodeSpec& spec,
                                              std::span<const double> x,
                                              double residual_tol = 1e-8) {
    if (!(residual_tol > 0.0))
        throw DegenerateInput("check_eigensequence: residual tolerance must be positive");
    if (x.size() != static_cast<std::size_t>(spec.transform.n))
        throw LengthMismatch("check_eigensequence: sequence length does not match transform");
    const double scale = max_abs(x);
    if (scale == 0.0)
        throw ZeroVector("check_eigensequence: sequence is identically zero");

    const double lambda = code_eigenvalue(spec);
    const std::vector<Complex> y = apply(spec.transform, x);
    double residual = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        residual = std::max(residual, std::abs(y[i] - lambda * x[i]));

    EigensequenceCheck out;
    out.lambda = lambda;
    out.residual = residual;
    out.threshold = residual_tol * std::sqrt(static_cast<double>(spec.transform.n)) * scale;
    out.is_eigensequence = residual <= out.threshold;
    return out;
}

inline bool is_eigensequence(const CodeSpec& spec, std::span<const double> x,
                             double residual_tol = 1e-8) {
    return check_eigensequence(spec, x, residual_tol).is_eigensequence;
}

/// Builds the eigenspace code: forms [T] - lambda*I, row-reduces it, and reads
/// the generator off the null space and the parity check off the RREF rows.
/// Both come out real (the eigenspaces are conjugate-closed, so the canonical
/// RREF basis is real) and the construction is validated before returning:
/// stable rank across the tolerance sweep, dimension equal to the closed-form
/// multiplicity, generator rows inside the eigenspace, and G H^T = 0.
inline EigencodeResult build_code(const CodeSpec& spec, double rank_tol = kDefaultRankTol) {
    const int n = spec.transform.n;
    if (n < 1) throw DegenerateInput("build_code: transform length must be at least 1");

    ComplexMatrix m = transform_matrix(spec.transform);
    const double lambda = code_eigenvalue(spec);
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= lambda;

    const std::size_t rank = stable_rank(m, rank_tol);
    const RrefResult<Complex> reduced = rref(m, rank_tol);
    if (reduced.rank != rank) {
        std::ostringstream msg;
        msg << "build_code: rank " << reduced.rank << " at tolerance " << rank_tol
            << " disagrees with the sweep-stable rank " << rank;
        throw RankInstability(msg.str());
    }

    EigencodeResult out;
    out.spec = spec;
    out.k = n - static_cast<int>(rank);
    out.parity_check = realify(reduced.reduced.top_rows(rank));
    out.generator = realify(null_space_from_rref(reduced));
    out.pivot_columns = reduced.pivot_columns;
    out.systematic = true;
    for (std::size_t i = 0; i < out.pivot_columns.size(); ++i)
        if (out.pivot_columns[i] != i) {
            out.systematic = false;
            break;
        }

    const int expected = expected_dimension(spec);
    if (out.k != expected) {
        std::ostringstream msg;
        msg << "build_code: numerical dimension " << out.k
            << " disagrees with the closed-form multiplicity " << expected << " for n=" << n;
        throw NumericalFailure(msg.str());
    }

    // Post-conditions: every generator row lies in the eigenspace and is
    // annihilated by the parity check.
    for (int i = 0; i < out.k; ++i) {
        const EigensequenceCheck c = check_eigensequence(spec, out.generator.row(i), 1e-8);
        if (!c.is_eigensequence) {
            std::ostringstream msg;
            msg << "build_code: generator row " << i << " has eigen-residual " << c.residual
                << " above threshold " << c.threshold;
            throw NumericalFailure(msg.str());
        }
    }
    if (out.k > 0 && rank > 0) {
        const RealMatrix product = out.generator * out.parity_check.transposed();
        const double bound =
            1e-8 * std::max(1.0, out.generator.max_abs() * out.parity_check.max_abs());
        if (product.max_abs() > bound) {
            std::ostringstream msg;
            msg << "build_code: generator/parity product " << product.max_abs()
                << " exceeds " << bound;
            throw NumericalFailure(msg.str());
        }
    }
    return out;
}

namespace detail {

inline bool integral_within(std::span<const double> x, double tol,
                            std::vector<long long>& rounded) {
    rounded.resize(x.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = std::nearbyint(x[i]);
        if (std::abs(x[i] - r) > tol) return false;
        rounded[i] = static_cast<long long>(r);
        if (rounded[i] != 0) nonzero = true;
    }
    return nonzero;
}

} // namespace detail

/// Searches the code for integer eigensequences, i.e. integer combinations of
/// the generator rows whose embedded coordinates are all integers.
///
/// For k <= 5 the coefficient box [-coeff_bound, coeff_bound]^k is scanned
/// exhaustively in lexicographic order. For larger k the basis is LLL-reduced
/// and a sphere of squared radius coeff_bound * mu is enumerated instead,
/// with results sorted lexicographically by original-basis coefficients.
/// Every hit is re-verified through the eigen-residual test before being kept.
inline std::vector<std::vector<long long>> find_integer_eigensequences(
    const CodeSpec& spec, int coeff_bound, std::size_t max_results = 64) {
    if (coeff_bound < 1)
        throw DegenerateInput("find_integer_eigensequences: coefficient bound must be >= 1");

    const EigencodeResult code = build_code(spec);
    const std::size_t k = static_cast<std::size_t>(code.k);
    const std::size_t n = static_cast<std::size_t>(spec.transform.n);
    if (k == 0 || max_results == 0) return {};

    std::vector<std::vector<long long>> results;
    std::vector<long long> rounded;

    auto accept = [&](std::span<const double> x) -> bool {
        if (!detail::integral_within(x, 1e-6, rounded)) return false;
        std::vector<double> exact(rounded.size());
        for (std::size_t i = 0; i < rounded.size(); ++i)
            exact[i] = static_cast<double>(rounded[i]);
        return is_eigensequence(spec, exact, 1e-8);
    };

    if (k <= 5) {
        // Exhaustive box scan; partial sums per level keep the inner loop at
        // O(n) per candidate. Iteration order is lexicographic in c.
        std::vector<double> x(n, 0.0);
        std::vector<long long> c(k, 0);
        bool done = false;
        auto walk = [&](auto&& self, std::size_t level) -> void {
            if (done) return;
            if (level == k) {
                if (accept(x)) {
                    results.emplace_back(rounded);
                    if (results.size() >= max_results) done = true;
                }
                return;
            }
            for (long long v = -coeff_bound; v <= coeff_bound && !done; ++v) {
                c[level] = v;
                if (v == -coeff_bound)
                    for (std::size_t j = 0; j < n; ++j)
                        x[j] += static_cast<double>(v) * code.generator(level, j);
                else
                    for (std::size_t j = 0; j < n; ++j) x[j] += code.generator(level, j);
                self(self, level + 1);
            }
            const double undo = static_cast<double>(done ? c[level] : coeff_bound);
            for (std::size_t j = 0; j < n; ++j) x[j] -= undo * code.generator(level, j);
        };
        walk(walk, 0);
        return results;
    }

    const LatticeBasis basis(code.generator);
    const ReducedBasis red = lll_reduce_with_transform(basis);
    const double mu = shortest_vector(basis).mu;
    const RealMatrix upper = cholesky(gram(red.basis), 1e-14).transposed();
    const double radius2 = static_cast<double>(coeff_bound) * mu;

    std::vector<std::pair<std::vector<long long>, std::vector<long long>>> hits;
    detail::enumerate_in_sphere(upper, radius2,
                                [&](const std::vector<long long>& c, double) {
                                    std::vector<double> x(n, 0.0);
                                    for (std::size_t i = 0; i < k; ++i)
                                        for (std::size_t j = 0; j < n; ++j)
                                            x[j] += static_cast<double>(c[i]) * red.basis(i, j);
                                    if (!accept(x)) return;
                                    std::vector<long long> orig(k, 0);
                                    for (std::size_t i = 0; i < k; ++i)
                                        for (std::size_t j = 0; j < k; ++j)
                                            orig[j] += c[i] * red.transform[i][j];
                                    hits.emplace_back(std::move(orig), rounded);
                                });

    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    for (auto& h : hits) {
        results.push_back(std::move(h.second));
        if (results.size() >= max_results) break;
    }
    return results;
}

} // namespace spectral
