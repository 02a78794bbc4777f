#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "netmat/kernels.hpp"
#include "netmat/scalar.hpp"

namespace netmat {

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over an ordered-field scalar. Values are immutable
/// in practice: every operation returns a fresh matrix. Zero-dimensional
/// matrices are legal and all operations treat them as vacuous.
template <typename S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<S>::zero()) {}

    template <typename Gen>
    static Matrix build(std::size_t rows, std::size_t cols, Gen&& gen) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = gen(i, j);
        return m;
    }

    static Matrix identity(std::size_t n) {
        return build(n, n, [](std::size_t i, std::size_t j) {
            return i == j ? scalar_traits<S>::one() : scalar_traits<S>::zero();
        });
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    const S& operator()(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    S& operator()(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    [[nodiscard]] const S* data() const { return data_.data(); }
    [[nodiscard]] S* data() { return data_.data(); }

    Matrix operator+(const Matrix& o) const {
        require_same_dims(o, "matrix addition");
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_dims(o, "matrix subtraction");
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    }
    void require_same_dims(const Matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionError(std::string("dimension mismatch in ") + what);
    }
};

/// Dense vector sharing the matrix scalar backends.
template <typename S>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : data_(dim, scalar_traits<S>::zero()) {}
    explicit Vector(std::vector<S> entries) : data_(std::move(entries)) {}

    [[nodiscard]] std::size_t dim() const { return data_.size(); }

    const S& operator[](std::size_t i) const {
        if (i >= data_.size()) throw std::out_of_range("vector index out of range");
        return data_[i];
    }
    S& operator[](std::size_t i) {
        if (i >= data_.size()) throw std::out_of_range("vector index out of range");
        return data_[i];
    }

    [[nodiscard]] const S* data() const { return data_.data(); }
    [[nodiscard]] S* data() { return data_.data(); }

private:
    std::vector<S> data_;
};

/// Entrywise equality; exact on the rational backend, |a-b| <= eps on float.
/// Matrices of different dimensions are unequal.
template <typename S>
bool mat_eq(const Matrix<S>& a, const Matrix<S>& b, double eps = kDefaultEps) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!scalar_traits<S>::eq(a(i, j), b(i, j), eps)) return false;
    return true;
}

template <typename S>
bool vec_eq(const Vector<S>& a, const Vector<S>& b, double eps = kDefaultEps) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!scalar_traits<S>::eq(a[i], b[i], eps)) return false;
    return true;
}

template <typename S>
Matrix<S> transpose(const Matrix<S>& a) {
    return Matrix<S>::build(a.cols(), a.rows(),
                            [&](std::size_t i, std::size_t j) { return a(j, i); });
}

template <typename S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows()) throw DimensionError("dimension mismatch in matrix product");
    Matrix<S> c(a.rows(), b.cols());
    if constexpr (std::is_same_v<S, double>) {
        kern::active().gemm(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    } else {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const S& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
            }
    }
    return c;
}

template <typename S>
Vector<S> mat_vec_mul(const Matrix<S>& a, const Vector<S>& v) {
    if (a.cols() != v.dim()) throw DimensionError("dimension mismatch in matrix-vector product");
    Vector<S> out(a.rows());
    if constexpr (std::is_same_v<S, double>) {
        for (std::size_t i = 0; i < a.rows(); ++i)
            out[i] = kern::active().dot(a.data() + i * a.cols(), v.data(), a.cols());
    } else {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            S s = scalar_traits<S>::zero();
            for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
            out[i] = s;
        }
    }
    return out;
}

template <typename S>
S inner_prod(const Vector<S>& u, const Vector<S>& v) {
    if (u.dim() != v.dim()) throw DimensionError("dimension mismatch in inner product");
    if constexpr (std::is_same_v<S, double>) {
        return kern::active().dot(u.data(), v.data(), u.dim());
    } else {
        S s = scalar_traits<S>::zero();
        for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
        return s;
    }
}

/// m x m matrix of all ones.
template <typename S>
Matrix<S> ones_mat(std::size_t m) {
    return Matrix<S>::build(m, m, [](std::size_t, std::size_t) { return scalar_traits<S>::one(); });
}

/// Square matrix of size rows(a) keeping the diagonal of the leading window
/// and zeroing everything else. Requires cols(a) >= rows(a).
template <typename S>
Matrix<S> diag_matrix(const Matrix<S>& a) {
    if (a.cols() < a.rows())
        throw DimensionError("diag_matrix requires at least as many columns as rows");
    return Matrix<S>::build(a.rows(), a.rows(), [&](std::size_t i, std::size_t j) {
        return i == j ? a(i, j) : scalar_traits<S>::zero();
    });
}

template <typename S>
bool is_symmetric(const Matrix<S>& a, double eps = kDefaultEps) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (!scalar_traits<S>::eq(a(i, j), a(j, i), eps)) return false;
    return true;
}

/// Row sum of row i.
template <typename S>
S row_sum(const Matrix<S>& a, std::size_t i) {
    if constexpr (std::is_same_v<S, double>) {
        return kern::active().sum(a.data() + i * a.cols(), a.cols());
    } else {
        S s = scalar_traits<S>::zero();
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j);
        return s;
    }
}

/// Laplacian predicate: square, non-positive off-diagonal, non-negative
/// diagonal, zero row sums. Tolerance-aware on the float backend.
template <typename S>
bool is_laplacian(const Matrix<S>& a, double eps = kDefaultEps) {
    if (!a.square()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (i == j) {
                if (!scalar_traits<S>::nonneg(a(i, j), eps)) return false;
            } else {
                if (!scalar_traits<S>::nonpos(a(i, j), eps)) return false;
            }
        }
        if (!scalar_traits<S>::is_zero(row_sum(a, i), eps)) return false;
    }
    return true;
}

template <typename S>
struct BlockSplit {
    Matrix<S> top_left;
    Matrix<S> top_right;
    Matrix<S> bottom_left;
    Matrix<S> bottom_right;
};

/// Splits m into four blocks at row index a and column index b:
/// top_left is a x b, bottom_right is (rows-a) x (cols-b).
template <typename S>
BlockSplit<S> split_block(const Matrix<S>& m, std::size_t a, std::size_t b) {
    if (a > m.rows() || b > m.cols()) throw DimensionError("block split index out of range");
    BlockSplit<S> s;
    s.top_left = Matrix<S>::build(a, b, [&](std::size_t i, std::size_t j) { return m(i, j); });
    s.top_right = Matrix<S>::build(a, m.cols() - b,
                                   [&](std::size_t i, std::size_t j) { return m(i, j + b); });
    s.bottom_left = Matrix<S>::build(m.rows() - a, b,
                                     [&](std::size_t i, std::size_t j) { return m(i + a, j); });
    s.bottom_right = Matrix<S>::build(
        m.rows() - a, m.cols() - b, [&](std::size_t i, std::size_t j) { return m(i + a, j + b); });
    return s;
}

/// Reassembles four conformable blocks into one matrix; inverse of split_block.
template <typename S>
Matrix<S> four_block_mat(const Matrix<S>& tl, const Matrix<S>& tr, const Matrix<S>& bl,
                         const Matrix<S>& br) {
    if (tl.rows() != tr.rows() || bl.rows() != br.rows() || tl.cols() != bl.cols() ||
        tr.cols() != br.cols())
        throw DimensionError("inconsistent block dimensions");
    std::size_t a = tl.rows();
    std::size_t b = tl.cols();
    return Matrix<S>::build(a + bl.rows(), b + tr.cols(), [&](std::size_t i, std::size_t j) {
        if (i < a) return j < b ? tl(i, j) : tr(i, j - b);
        return j < b ? bl(i - a, j) : br(i - a, j - b);
    });
}

/// Gauss-Jordan inverse. Exact first-nonzero pivoting on the rational
/// backend; partial pivoting with a singularity threshold on float.
/// Singularity is an empty optional, not an exception.
template <typename S>
std::optional<Matrix<S>> mat_inverse(const Matrix<S>& m) {
    if (!m.square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = scalar_traits<S>::one();
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        if constexpr (std::is_same_v<S, double>) {
            double best = std::fabs(aug(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                double v = std::fabs(aug(r, col));
                if (v > best) {
                    best = v;
                    pivot = r;
                }
            }
            if (best < kSingularPivotTol) return std::nullopt;
        } else {
            while (pivot < n && aug(pivot, col).is_zero()) ++pivot;
            if (pivot == n) return std::nullopt;
        }
        if (pivot != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(col, j), aug(pivot, j));
        S scale = aug(col, col);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(col, j) /= scale;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            S factor = aug(r, col);
            if (scalar_traits<S>::is_zero(factor, 0.0)) continue;
            for (std::size_t j = 0; j < 2 * n; ++j) aug(r, j) -= factor * aug(col, j);
        }
    }
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace netmat
