#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpm/errors.hpp"
#include "kpm/scalar.hpp"

namespace kpm {

/// Dense rectangular matrix over an exact ring T. T() must be the zero of
/// the ring. Empty shapes (0 rows or columns) are legal throughout.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int r, int c) : rows_(r), cols_(c), e_(static_cast<std::size_t>(r) * c) {
        if (r < 0 || c < 0) throw MalformedInput("negative matrix shape");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix operator-() const {
        Matrix m(*this);
        for (auto& x : m.e_) x = -x;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw MalformedInput("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }

    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix m(a);
        for (auto& x : m.e_) x = c * x;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && (a - b).is_zero();
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix& operator+=(const Matrix& o) { *this = *this + o; return *this; }
    Matrix& operator-=(const Matrix& o) { *this = *this - o; return *this; }

    Matrix col(int j) const {
        Matrix m(rows_, 1);
        for (int i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
        return m;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_) throw MalformedInput("hstack row mismatch");
        Matrix m(a.rows_, a.cols_ + b.cols_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
            for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
        }
        return m;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw MalformedInput("vstack column mismatch");
        Matrix m(a.rows_ + b.rows_, a.cols_);
        for (int j = 0; j < a.cols_; ++j) {
            for (int i = 0; i < a.rows_; ++i) m(i, j) = a(i, j);
            for (int i = 0; i < b.rows_; ++i) m(a.rows_ + i, j) = b(i, j);
        }
        return m;
    }

    Matrix block(int i0, int j0, int r, int c) const {
        Matrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw MalformedInput("matrix shape mismatch");
    }
    int rows_, cols_;
    std::vector<T> e_;
};

template <typename T>
struct Echelon {
    Matrix<T> rref;
    std::vector<int> pivots;  // pivot column of each pivot row
    int rank = 0;
};

/// Gauss-Jordan over a field, pivot chosen by minimal height. Each pivot is
/// certified invertible up front, so zero divisors of a dynamic-evaluation
/// tower surface as ZeroDivisorSplit here instead of corrupting the rank.
template <typename T>
Echelon<T> reduced_echelon(Matrix<T> m) {
    Echelon<T> out;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int best = -1;
        std::size_t best_h = 0;
        for (int i = row; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            std::size_t h = m(i, col).height();
            if (best < 0 || h < best_h) best = i, best_h = h;
        }
        if (best < 0) continue;
        T inv = m(best, col).inverse();
        if (best != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
        for (int j = 0; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            T f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.rank = row;
    out.rref = std::move(m);
    return out;
}

/// Kernel basis as matrix columns (standard free-variable construction,
/// lexicographically earliest pivots).
template <typename T>
Matrix<T> kernel_basis_of(const Echelon<T>& e, int cols) {
    std::vector<int> pivot_of_col(cols, -1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) pivot_of_col[e.pivots[r]] = static_cast<int>(r);
    Matrix<T> k(cols, cols - e.rank);
    int out_col = 0;
    for (int j = 0; j < cols; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        k(j, out_col) = T(1);
        for (int r = 0; r < e.rank; ++r) {
            const T& v = e.rref(r, j);
            if (!v.is_zero()) k(e.pivots[r], out_col) = -v;
        }
        ++out_col;
    }
    return k;
}

template <typename T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
    return kernel_basis_of(reduced_echelon(m), m.cols());
}

template <typename T>
int rank_of(const Matrix<T>& m) {
    return reduced_echelon(m).rank;
}

/// Particular solution of A X = B (free variables zero), or nullopt when
/// inconsistent.
template <typename T>
std::optional<Matrix<T>> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw MalformedInput("solve shape mismatch");
    auto e = reduced_echelon(Matrix<T>::hstack(a, b));
    for (int c : e.pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix<T> x(a.cols(), b.cols());
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.rref(r, a.cols() + j);
    return x;
}

template <typename T>
Matrix<T> inverse_of(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw MalformedInput("inverse of non-square matrix");
    auto x = solve_linear(a, Matrix<T>::identity(a.rows()));
    if (!x || rank_of(a) != a.rows()) throw SingularInput("singular matrix");
    return *x;
}

template <typename T>
T det_of(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw MalformedInput("determinant of non-square matrix");
    Matrix<T> m = a;
    T det(1);
    for (int col = 0; col < m.cols(); ++col) {
        int best = -1;
        std::size_t best_h = 0;
        for (int i = col; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            std::size_t h = m(i, col).height();
            if (best < 0 || h < best_h) best = i, best_h = h;
        }
        if (best < 0) return T(0);
        if (best != col) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(col, j));
            det = -det;
        }
        det = det * m(col, col);
        T inv = m(col, col).inverse();
        for (int i = col + 1; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            T f = m(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

using ScalarMatrix = Matrix<Scalar>;

}  // namespace kpm
