#pragma once

// Dense matrices over Q(s) and over Q.
//
// Public index arguments (column, leading_columns, principal_partition) are 1-based;
// element access through operator() is 0-based.

#include "wmp/exact_arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace wmp {

/// Dense constant matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    QMatrix transpose() const;

    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const BigRational& c, const QMatrix& a);
    QMatrix& operator+=(const QMatrix& b);
    QMatrix& operator-=(const QMatrix& b);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
};

/// Rank over Q by Gaussian elimination.
std::size_t rank(const QMatrix& a);

/// Dense matrix over the rational-function field, row-major.
class RfMatrix {
public:
    RfMatrix() = default;
    /// rows x cols zero matrix.
    RfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RfMatrix(std::initializer_list<std::initializer_list<RatFun>> rows);
    RfMatrix(std::size_t rows, std::size_t cols, std::vector<RatFun> entries);

    static RfMatrix identity(std::size_t n);
    static RfMatrix from_constant(const QMatrix& q);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RatFun& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RatFun& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<RatFun>& entries() const { return data_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    /// Every entry has a constant denominator.
    bool is_polynomial() const;

    RfMatrix operator-() const;
    RfMatrix& operator+=(const RfMatrix& b);
    RfMatrix& operator-=(const RfMatrix& b);
    friend RfMatrix operator+(RfMatrix a, const RfMatrix& b) { return a += b; }
    friend RfMatrix operator-(RfMatrix a, const RfMatrix& b) { return a -= b; }
    friend RfMatrix operator*(const RfMatrix& a, const RfMatrix& b);
    friend RfMatrix operator*(const RatFun& f, const RfMatrix& a);
    friend bool operator==(const RfMatrix& a, const RfMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RatFun> data_;
};

/// Leading principal block N_i split as [[n_prev, l], [l*, n_ii]].
struct PrincipalPartition {
    RfMatrix n_prev;
    RfMatrix l;
    RatFun n_ii;
};

enum class MatOp { add, sub, mul };

RfMatrix mat_arith(MatOp op, const RfMatrix& a, const RfMatrix& b);

/// Matrix product, entries computed in parallel when built with OpenMP.
RfMatrix mat_mul(const RfMatrix& a, const RfMatrix& b);
/// Single-threaded reference for mat_mul.
RfMatrix mat_mul_serial(const RfMatrix& a, const RfMatrix& b);

/// Transpose; coefficients are real so the conjugate transpose is the transpose.
RfMatrix transpose_star(const RfMatrix& a);

/// m x 1 matrix holding column i (1-based).
RfMatrix column(const RfMatrix& a, std::size_t i);
/// The first i columns (1-based count).
RfMatrix leading_columns(const RfMatrix& a, std::size_t i);
/// Rows [r0, r0 + nr) and columns [c0, c0 + nc), 0-based.
RfMatrix block(const RfMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
/// Stacks `bottom` under `top`.
RfMatrix vstack(const RfMatrix& top, const RfMatrix& bottom);
/// Places `right` next to `left`.
RfMatrix hstack(const RfMatrix& left, const RfMatrix& right);

/// Partition of the i x i leading block of square n, 2 <= i <= size.
PrincipalPartition principal_partition(const RfMatrix& n, std::size_t i);

/// Inverse by fraction-free Gauss-Jordan elimination. Pivot: first nonzero entry
/// of the current column at or below the diagonal. Throws SingularityError.
RfMatrix ff_inverse(const RfMatrix& a);

/// Rank over Q(s) by fraction-free elimination.
std::size_t generic_rank(const RfMatrix& a);

/// Entrywise evaluation; PoleError carries the 1-based offending position.
QMatrix mat_eval(const RfMatrix& a, const BigRational& s0);

} // namespace wmp
