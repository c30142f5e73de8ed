#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tamelat/errors.hpp"

namespace tamelat {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer coordinates of a lattice element relative to a fixed basis.
using CoeffVector = std::vector<Integer>;

/// Dense row-major matrix over an exact scalar type.
template <typename Scalar>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw DimensionError("matrix dimensions must be positive");
        }
    }

    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
        : Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw DimensionError("ragged initializer list");
            }
            std::size_t j = 0;
            for (const auto& value : row) {
                (*this)(i, j++) = value;
            }
            ++i;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix out(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            out(i, i) = 1;
        }
        return out;
    }

    /// Builds a matrix whose j-th column is columns[j].
    static Matrix from_columns(const std::vector<std::vector<Scalar>>& columns) {
        if (columns.empty()) {
            throw DimensionError("no columns given");
        }
        Matrix out(columns.front().size(), columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != out.rows_) {
                throw DimensionError("columns differ in length");
            }
            for (std::size_t i = 0; i < out.rows_; ++i) {
                out(i, j) = columns[j][i];
            }
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Scalar> column(std::size_t j) const {
        std::vector<Scalar> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out[i] = (*this)(i, j);
        }
        return out;
    }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                out(j, i) = (*this)(i, j);
            }
        }
        return out;
    }

    bool is_symmetric() const {
        if (!is_square()) {
            return false;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if ((*this)(i, j) != (*this)(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
        if (lhs.cols_ != rhs.rows_) {
            throw DimensionError("matrix product shape mismatch");
        }
        Matrix out(lhs.rows_, rhs.cols_);
        for (std::size_t i = 0; i < lhs.rows_; ++i) {
            for (std::size_t k = 0; k < lhs.cols_; ++k) {
                if (lhs(i, k) == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out(i, j) += lhs(i, k) * rhs(k, j);
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const Scalar& factor, Matrix m) {
        for (auto& value : m.data_) {
            value *= factor;
        }
        return m;
    }

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
        return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

using IntMatrix = Matrix<Integer>;
/// mpq_class arithmetic keeps every entry canonical (reduced, positive denominator).
using RatMatrix = Matrix<Rational>;

std::string to_string(const IntMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
Integer det_exact(const IntMatrix& m);

/// Rank over Q of an integer matrix.
std::size_t rank(const IntMatrix& m);

/// Column-style Hermite normal form of a full-column-rank matrix.
///
/// The result spans the same integer column lattice. For a square input it is
/// lower triangular with a positive diagonal, and each entry left of a diagonal
/// entry lies in [0, diagonal). Throws RankError on rank deficiency.
IntMatrix hnf(const IntMatrix& m);

/// Column echelon form of an arbitrary integer matrix: the rank(m) nonzero
/// columns of its column HNF, same reduction convention as hnf(). Pivot rows
/// are returned alongside.
struct ColumnEchelon {
    std::vector<std::vector<Integer>> columns;
    std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x in Z^cols : m x = 0}.
/// Empty when the kernel is trivial.
std::vector<CoeffVector> integer_kernel(const IntMatrix& m);

/// True iff the columns of the two full-column-rank matrices span the same
/// subgroup of Z^rows.
bool same_lattice(const IntMatrix& b1, const IntMatrix& b2);

/// True iff the given vectors are linearly independent and extend to a basis
/// of Z^n, i.e. every elementary divisor of their matrix is 1.
bool is_primitive_system(const std::vector<CoeffVector>& vectors);

struct LdltFactors {
    RatMatrix lower;                ///< unit lower triangular
    std::vector<Rational> diagonal; ///< strictly positive pivots
};

/// Exact G = L diag(D) L^T over the rationals. Throws NotPositiveDefiniteError
/// on a non-positive pivot, which makes this the positive-definiteness test.
LdltFactors ldlt(const IntMatrix& gram);

}  // namespace tamelat
