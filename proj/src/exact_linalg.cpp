#include "tamelat/exact_linalg.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace tamelat {
namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::swap(m(i, a), m(i, b));
    }
}

void negate_column(IntMatrix& m, std::size_t c) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, c) = -m(i, c);
    }
}

// col_target -= factor * col_source
void submul_column(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, target) -= factor * m(i, source);
    }
}

// Unimodular 2x2 column combination:
//   (col_a, col_b) <- (p col_a + q col_b, -bq col_a + aq col_b)
// with p a + q b = g, aq = a/g, bq = b/g (determinant 1).
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Integer& p, const Integer& q,
                     const Integer& aq, const Integer& bq) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer x = m(i, a);
        Integer y = m(i, b);
        m(i, a) = p * x + q * y;
        m(i, b) = aq * y - bq * x;
    }
}

// In-place column reduction to echelon form. Columns [0, rank) end up holding
// the echelon columns; the remaining columns are zero. The same column
// operations are mirrored onto `transform` when provided, so that
// original * transform == reduced.
std::vector<std::size_t> reduce_columns(IntMatrix& h, IntMatrix* transform) {
    const std::size_t rows = h.rows();
    const std::size_t cols = h.cols();
    std::vector<std::size_t> pivot_rows;
    std::size_t pc = 0;

    auto apply = [&](auto&& op) {
        op(h);
        if (transform != nullptr) {
            op(*transform);
        }
    };

    for (std::size_t i = 0; i < rows && pc < cols; ++i) {
        for (std::size_t j = pc + 1; j < cols; ++j) {
            if (h(i, j) == 0) {
                continue;
            }
            if (h(i, pc) == 0) {
                apply([&](IntMatrix& m) { swap_columns(m, pc, j); });
                continue;
            }
            Integer g, p, q;
            mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), h(i, pc).get_mpz_t(), h(i, j).get_mpz_t());
            Integer aq = h(i, pc) / g;
            Integer bq = h(i, j) / g;
            apply([&](IntMatrix& m) { combine_columns(m, pc, j, p, q, aq, bq); });
        }
        if (h(i, pc) == 0) {
            continue;
        }
        if (h(i, pc) < 0) {
            apply([&](IntMatrix& m) { negate_column(m, pc); });
        }
        for (std::size_t k = 0; k < pc; ++k) {
            Integer factor;
            mpz_fdiv_q(factor.get_mpz_t(), h(i, k).get_mpz_t(), h(i, pc).get_mpz_t());
            if (factor != 0) {
                apply([&](IntMatrix& m) { submul_column(m, k, pc, factor); });
            }
        }
        pivot_rows.push_back(i);
        ++pc;
    }
    return pivot_rows;
}

}  // namespace

std::string to_string(const IntMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << (j ? ", " : "") << m(i, j).get_str();
        }
        out << "]" << (i + 1 == m.rows() ? "]" : "\n");
    }
    return out.str();
}

Integer det_exact(const IntMatrix& m) {
    if (!m.is_square()) {
        throw DimensionError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    IntMatrix a = m;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(swap_row, j));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // Sylvester's identity guarantees exact division.
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), previous.get_mpz_t());
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

ColumnEchelon column_echelon(const IntMatrix& m) {
    IntMatrix h = m;
    ColumnEchelon out;
    out.pivot_rows = reduce_columns(h, nullptr);
    for (std::size_t j = 0; j < out.pivot_rows.size(); ++j) {
        out.columns.push_back(h.column(j));
    }
    return out;
}

std::size_t rank(const IntMatrix& m) { return column_echelon(m).pivot_rows.size(); }

IntMatrix hnf(const IntMatrix& m) {
    ColumnEchelon echelon = column_echelon(m);
    if (echelon.columns.size() != m.cols()) {
        throw RankError("hnf requires full column rank (rank " + std::to_string(echelon.columns.size()) +
                        " < " + std::to_string(m.cols()) + ")");
    }
    return IntMatrix::from_columns(echelon.columns);
}

std::vector<CoeffVector> integer_kernel(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix transform = IntMatrix::identity(m.cols());
    const std::size_t r = reduce_columns(h, &transform).size();
    std::vector<CoeffVector> basis;
    for (std::size_t j = r; j < m.cols(); ++j) {
        basis.push_back(transform.column(j));
    }
    return basis;
}

bool same_lattice(const IntMatrix& b1, const IntMatrix& b2) {
    if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) {
        throw DimensionError("same_lattice: shape mismatch");
    }
    return hnf(b1) == hnf(b2);
}

bool is_primitive_system(const std::vector<CoeffVector>& vectors) {
    if (vectors.empty()) {
        return true;
    }
    // Column ops on V^T are row ops on V; the pivots of the echelon form of V^T
    // are the diagonal of a triangular matrix with the elementary divisors' product
    // as determinant.
    ColumnEchelon echelon = column_echelon(IntMatrix::from_columns(vectors).transpose());
    if (echelon.columns.size() != vectors.size()) {
        return false;
    }
    for (std::size_t j = 0; j < echelon.columns.size(); ++j) {
        if (echelon.columns[j][echelon.pivot_rows[j]] != 1) {
            return false;
        }
    }
    return true;
}

LdltFactors ldlt(const IntMatrix& gram) {
    if (!gram.is_square()) {
        throw DimensionError("ldlt: Gram matrix must be square");
    }
    if (!gram.is_symmetric()) {
        throw PreconditionError("ldlt: Gram matrix is not symmetric");
    }
    const std::size_t n = gram.rows();
    LdltFactors out{RatMatrix::identity(n), std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational pivot = gram(j, j);
        for (std::size_t k = 0; k < j; ++k) {
            pivot -= out.lower(j, k) * out.lower(j, k) * out.diagonal[k];
        }
        if (pivot <= 0) {
            throw NotPositiveDefiniteError("Gram matrix is not positive definite (pivot " + std::to_string(j) +
                                           " = " + pivot.get_str() + ")");
        }
        out.diagonal[j] = pivot;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational value = gram(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                value -= out.lower(i, k) * out.lower(j, k) * out.diagonal[k];
            }
            out.lower(i, j) = value / pivot;
        }
    }
    return out;
}

}  // namespace tamelat
