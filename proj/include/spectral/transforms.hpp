#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>

#include "spectral/errors.hpp"
#include "spectral/matrix.hpp"

namespace spectral {

enum class TransformKind { Fourier, Hartley };

inline std::string to_string(TransformKind k) {
    return k == TransformKind::Fourier ? "dft" : "dht";
}

/// A discrete transform of a fixed length. `unitary` divides the kernel by
/// sqrt(n), which rescales the eigenvalues from ±sqrt(n) to ±1 without moving
/// the eigenspaces.
struct TransformSpec {
    TransformKind kind = TransformKind::Fourier;
    int n = 1;
    bool unitary = false;
};

namespace detail {

struct CosSin {
    double cos;
    double sin;
};

/// Cosine and sine of the kernel angle 2*pi*((k*i) mod n)/n. The integer
/// product is reduced modulo n before touching floating point, which keeps
/// large-argument trig error out of the kernel entries, and quarter-turn
/// angles are evaluated exactly so kernels of length divisible by 4 stay
/// integer-clean.
inline CosSin kernel_cos_sin(int k, int i, int n) {
    const std::int64_t r = (static_cast<std::int64_t>(k) * i) % n;
    const std::int64_t quarter = 4 * r;
    if (quarter % n == 0) {
        switch ((quarter / n) & 3) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double a =
        2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return {std::cos(a), std::sin(a)};
}

inline void require_valid(const TransformSpec& spec) {
    if (spec.n < 1)
        throw DegenerateInput("transform length must be at least 1");
}

} // namespace detail

/// Fourier matrix W with W[k][i] = exp(-j*2*pi*k*i/n), scaled by 1/sqrt(n)
/// when the spec is unitary.
inline ComplexMatrix dft_matrix(const TransformSpec& spec) {
    detail::require_valid(spec);
    const int n = spec.n;
    const double scale = spec.unitary ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
    ComplexMatrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const detail::CosSin cs = detail::kernel_cos_sin(k, i, n);
            w(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) =
                Complex(cs.cos * scale, -cs.sin * scale);
        }
    return w;
}

/// Hartley matrix H with H[k][i] = cas(2*pi*k*i/n), cas(x) = cos(x) + sin(x),
/// scaled by 1/sqrt(n) when the spec is unitary. Real and symmetric.
inline RealMatrix dht_matrix(const TransformSpec& spec) {
    detail::require_valid(spec);
    const int n = spec.n;
    const double scale = spec.unitary ? 1.0 / std::sqrt(static_cast<double>(n)) : 1.0;
    RealMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            const detail::CosSin cs = detail::kernel_cos_sin(k, i, n);
            h(static_cast<std::size_t>(k), static_cast<std::size_t>(i)) =
                (cs.cos + cs.sin) * scale;
        }
    return h;
}

/// The transform matrix promoted to complex regardless of kind, which lets the
/// eigenspace machinery treat both kernels uniformly.
inline ComplexMatrix transform_matrix(const TransformSpec& spec) {
    if (spec.kind == TransformKind::Fourier) return dft_matrix(spec);
    return to_complex(dht_matrix(spec));
}

/// Applies the transform to a real vector of matching length.
inline std::vector<Complex> apply(const TransformSpec& spec, std::span<const double> x) {
    detail::require_valid(spec);
    if (x.size() != static_cast<std::size_t>(spec.n))
        throw LengthMismatch("apply: vector length does not match transform length");
    const ComplexMatrix t = transform_matrix(spec);
    std::vector<Complex> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = Complex(x[i], 0.0);
    return t * std::span<const Complex>(cx);
}

} // namespace spectral
