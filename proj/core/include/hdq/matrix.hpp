#pragma once

#include "hdq/errors.hpp"
#include "hdq/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace hdq {

/// Hard cap on materialized matrix entries (64M).
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 26;

/// Throws ResourceError when a rows x cols matrix would exceed the budget.
inline void check_dense_size(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) throw ArgumentError("matrix dimensions must be positive");
    if (cols > kMaxDenseEntries / rows) {
        throw ResourceError("dense matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds the entry budget of " + std::to_string(kMaxDenseEntries));
    }
}

/// Row-major dense matrix. Element access is 0-based like any container;
/// the 1-based indices used for columns of T_m, pairs and Hadamard rows live
/// in the domain oracles (walsh.hpp), not here.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols) {
        check_dense_size(rows, cols);
        data_.assign(rows * cols, fill);
    }

    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        check_dense_size(rows_, cols_);
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ArgumentError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using SignMatrix = Matrix<int>;
using ExactMatrix = Matrix<SignedRoot>;
using FloatMatrix = Matrix<double>;

/// Block matrix [a_uv * B], dimensions (A.rows*B.rows) x (A.cols*B.cols).
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() > kMaxDenseEntries / b.rows() || a.cols() > kMaxDenseEntries / b.cols()) {
        throw ResourceError("kronecker product dimensions overflow the entry budget");
    }
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const T& scale = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
                }
            }
        }
    }
    return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    }
    return out;
}

ExactMatrix to_exact(const SignMatrix& m);
FloatMatrix to_float(const ExactMatrix& m);

}  // namespace hdq
