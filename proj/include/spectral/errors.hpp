#pragma once

#include <stdexcept>
#include <string>

namespace spectral {

/// A structurally unusable argument: empty matrix, non-positive length,
/// out-of-domain tolerance, ragged initializer, and the like.
class DegenerateInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Vector/matrix dimensions that do not agree with each other.
class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identically zero vector where a nonzero one is required.
class ZeroVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A matrix whose rows were required to be linearly independent but are not.
class NotFullRank : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation that started from valid inputs but lost numerical integrity:
/// residuals above tolerance, imaginary parts that should have cancelled, etc.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cholesky factorisation hit a non-positive pivot.
class NotPositiveDefinite : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

/// Numerical rank changed across the tolerance sweep, so no dimension can be
/// reported with confidence.
class RankInstability : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

} // namespace spectral
