#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

#include "spectral/errors.hpp"

namespace spectral {

using Complex = std::complex<double>;

/// Dense row-major matrix over double or std::complex<double>.
///
/// Deliberately small: storage, element access, and the handful of algebraic
/// operations the rest of the library needs. Everything heavier (RREF, null
/// spaces, Gram matrices) lives in linalg.hpp.
template <class Scalar>
class DenseMatrix {
public:
    using value_type = Scalar;

    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> init) {
        rows_ = init.size();
        cols_ = rows_ > 0 ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : init) {
            if (r.size() != cols_)
                throw DegenerateInput("matrix initializer rows have unequal lengths");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<Scalar> row_copy(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// First `n` rows as a new matrix.
    DenseMatrix top_rows(std::size_t n) const {
        DenseMatrix t(n, cols_);
        std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_),
                  t.data_.begin());
        return t;
    }

    /// Largest entry magnitude; 0 for an empty matrix.
    double max_abs() const {
        double m = 0.0;
        for (const Scalar& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<Complex>;

template <class Scalar>
DenseMatrix<Scalar> operator*(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.cols() != b.rows())
        throw LengthMismatch("matrix product dimension mismatch");
    DenseMatrix<Scalar> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar aik = a(i, k);
            if (aik == Scalar{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class Scalar>
std::vector<Scalar> operator*(const DenseMatrix<Scalar>& a, std::span<const Scalar> x) {
    if (a.cols() != x.size())
        throw LengthMismatch("matrix-vector product dimension mismatch");
    std::vector<Scalar> y(a.rows(), Scalar{});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

template <class Scalar>
std::vector<Scalar> operator*(const DenseMatrix<Scalar>& a, const std::vector<Scalar>& x) {
    return a * std::span<const Scalar>(x);
}

template <class Scalar>
DenseMatrix<Scalar> operator*(Scalar s, DenseMatrix<Scalar> m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
    return m;
}

template <class Scalar>
DenseMatrix<Scalar> operator-(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LengthMismatch("matrix difference dimension mismatch");
    DenseMatrix<Scalar> c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = Complex(m(i, j), 0.0);
    return c;
}

/// Largest entrywise |a - b|; the matrices must have equal shape.
template <class Scalar>
double max_abs_diff(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw LengthMismatch("max_abs_diff dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double max_abs(std::span<const Complex> v) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace spectral
