#pragma once

#include <algorithm>
#include <array>
#include <complex>

namespace epr {

/// Dense fixed-size complex matrix, row-major. Sized for the handful of
/// shapes this library needs (2x2 Pauli, 4x4 bispinor, 4x2 amplitudes,
/// 3x3 spin-1, 6x6 product space).
template <int Rows, int Cols>
struct Matrix {
    static_assert(Rows > 0 && Cols > 0);
    using value_type = std::complex<double>;

    std::array<value_type, static_cast<size_t>(Rows * Cols)> a{};

    value_type& operator()(int r, int c) { return a[static_cast<size_t>(Cols * r + c)]; }
    const value_type& operator()(int r, int c) const { return a[static_cast<size_t>(Cols * r + c)]; }

    static Matrix zero() { return Matrix{}; }

    static Matrix identity()
        requires(Rows == Cols)
    {
        Matrix m;
        for (int i = 0; i < Rows; ++i) m(i, i) = 1.0;
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix r;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix r;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
        return r;
    }
    Matrix operator*(value_type s) const {
        Matrix r;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = s * a[i];
        return r;
    }
    Matrix operator*(double s) const { return *this * value_type(s); }

    Matrix<Cols, Rows> transpose() const {
        Matrix<Cols, Rows> r;
        for (int i = 0; i < Rows; ++i)
            for (int j = 0; j < Cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Conjugate transpose.
    Matrix<Cols, Rows> adjoint() const {
        Matrix<Cols, Rows> r;
        for (int i = 0; i < Rows; ++i)
            for (int j = 0; j < Cols; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    value_type trace() const
        requires(Rows == Cols)
    {
        value_type s{};
        for (int i = 0; i < Rows; ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a) m = std::max(m, std::abs(v));
        return m;
    }
};

template <int R, int C>
Matrix<R, C> operator*(std::complex<double> s, const Matrix<R, C>& m) {
    return m * s;
}

template <int R, int C>
Matrix<R, C> operator*(double s, const Matrix<R, C>& m) {
    return m * std::complex<double>(s);
}

template <int R, int K, int C>
Matrix<R, C> operator*(const Matrix<R, K>& a, const Matrix<K, C>& b) {
    Matrix<R, C> r;
    for (int i = 0; i < R; ++i)
        for (int k = 0; k < K; ++k) {
            const auto aik = a(i, k);
            if (aik == std::complex<double>{}) continue;
            for (int j = 0; j < C; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

template <int R, int C>
double max_abs_diff(const Matrix<R, C>& a, const Matrix<R, C>& b) {
    return (a - b).max_abs();
}

using SpinorMatrix = Matrix<2, 2>;        // 2x2, Pauli algebra
using BispinorMatrix = Matrix<4, 4>;      // 4x4, gamma algebra
using BispinorAmplitude = Matrix<4, 2>;   // v(p), bispinor x spin index
using Spin1Matrix = Matrix<3, 3>;

}  // namespace epr
