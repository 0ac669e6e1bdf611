#pragma once

#include "spinlink/scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spinlink {

/// Dense complex matrix. Dimensions here are tiny (<= 28), so the
/// implementation favours clarity over blocking tricks.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T::one();
        return m;
    }
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }
    Matrix conj() const {
        Matrix m(rows_, cols_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).conj();
        return m;
    }
    Matrix dagger() const { return conj().transpose(); }

    T trace() const {
        require(rows_ == cols_, "trace: square matrix required");
        T t{};
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const T& s, Matrix m) { return m *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, "matmul: inner dimensions must agree");
        Matrix m(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (int k = 0; k < a.cols_; ++k) {
                const T& x = a(r, k);
                if (x.is_zero()) continue;
                for (int c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        require(cols_ == static_cast<int>(v.size()), "matvec: dimension mismatch");
        std::vector<T> out(rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    static void require(bool cond, const char* what) {
        if (!cond) throw std::invalid_argument(what);
    }

private:
    void require_same_shape(const Matrix& o) const {
        require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = Matrix<ExactC>;
using FloatMatrix = Matrix<FloatC>;

template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

/// Minkowski metric as a matrix, diag(-1, +1, ..., +1).
template <typename T = ExactC>
Matrix<T> eta_matrix(int n) {
    Matrix<T> m = Matrix<T>::identity(n);
    m(0, 0) = -T::one();
    return m;
}

/// M^eta = eta M^T eta.
template <typename T>
Matrix<T> eta_transpose(const Matrix<T>& m) {
    Matrix<T>::require(m.rows() == m.cols(), "eta_transpose: square matrix required");
    const Matrix<T> eta = eta_matrix<T>(m.rows());
    return eta * m.transpose() * eta;
}

/// [A, B]_{eta±} = A^eta B ± B^eta A.
template <typename T>
Matrix<T> bracket_eta(const Matrix<T>& a, const Matrix<T>& b, int sign) {
    Matrix<T>::require(a.rows() == b.rows() && a.cols() == b.cols(), "bracket_eta: shape mismatch");
    const Matrix<T> x = eta_transpose(a) * b;
    const Matrix<T> y = eta_transpose(b) * a;
    return sign >= 0 ? x + y : x - y;
}

/// Largest entrywise max(|re|,|im|); the exact deviation metric of CheckResult.
template <typename T>
auto max_abs_dev(const Matrix<T>& m) {
    auto dev = abs_dev(T{});
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            auto d = abs_dev(m(r, c));
            if (d > dev) dev = d;
        }
    return dev;
}

/// Exact sum of squared moduli (float callers take the square root).
inline Rational frobenius_sq(const ExactMatrix& m) {
    Rational s = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const ExactC& x = m(r, c);
            s += x.re * x.re + x.im * x.im;
        }
    return s;
}

inline double frobenius(const FloatMatrix& m) {
    double s = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            const FloatC& x = m(r, c);
            s += x.re * x.re + x.im * x.im;
        }
    return std::sqrt(s);
}

inline FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix f(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) f(r, c) = to_float(m(r, c));
    return f;
}

/// Row rank by fraction-free (Bareiss) elimination over Q(i); exact.
inline int rank_exact(ExactMatrix m) {
    const int rows = m.rows(), cols = m.cols();
    int rank = 0, row = 0;
    ExactC prev = ExactC::one();
    for (int col = 0; col < cols && row < rows; ++col) {
        int piv = -1;
        for (int r = row; r < rows; ++r)
            if (!m(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < cols; ++c) std::swap(m(piv, c), m(row, c));
        const ExactC pivot = m(row, col);
        for (int r = row + 1; r < rows; ++r) {
            const ExactC f = m(r, col);
            for (int c = 0; c < cols; ++c) m(r, c) = (m(r, c) * pivot - f * m(row, c)) / prev;
        }
        prev = pivot;
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace spinlink
