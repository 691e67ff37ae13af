#include "wmp/rf_matrix.hpp"

#include "wmp/errors.hpp"

#include <string>
#include <utility>

namespace wmp {

namespace {

std::string dims(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

} // namespace

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = 1;
    return q;
}

bool QMatrix::is_zero() const {
    for (const auto& v : data_)
        if (sgn(v) != 0) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("QMatrix add: " + dims(rows_, cols_) + " vs " + dims(b.rows_, b.cols_));
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("QMatrix sub: " + dims(rows_, cols_) + " vs " + dims(b.rows_, b.cols_));
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix r = a;
    return r += b;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix r = a;
    return r -= b;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("QMatrix mul: " + dims(a.rows_, a.cols_) + " * " + dims(b.rows_, b.cols_));
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigRational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

QMatrix operator*(const BigRational& c, const QMatrix& a) {
    QMatrix r = a;
    for (auto& v : r.data_) v *= c;
    return r;
}

std::size_t rank(const QMatrix& a0) {
    QMatrix a = a0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != rank)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (sgn(a(r, c)) == 0) continue;
            BigRational f = a(r, c) / a(rank, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// RfMatrix

RfMatrix::RfMatrix(std::initializer_list<std::initializer_list<RatFun>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RfMatrix::RfMatrix(std::size_t rows, std::size_t cols, std::vector<RatFun> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("entry count " + std::to_string(data_.size()) + " does not match " + dims(rows, cols));
}

RfMatrix RfMatrix::identity(std::size_t n) {
    RfMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFun(1);
    return m;
}

RfMatrix RfMatrix::from_constant(const QMatrix& q) {
    RfMatrix m(q.rows(), q.cols());
    for (std::size_t r = 0; r < q.rows(); ++r)
        for (std::size_t c = 0; c < q.cols(); ++c) m(r, c) = RatFun(q(r, c));
    return m;
}

bool RfMatrix::is_zero() const {
    for (const auto& f : data_)
        if (!f.is_zero()) return false;
    return true;
}

bool RfMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
}

bool RfMatrix::is_polynomial() const {
    for (const auto& f : data_)
        if (!f.is_polynomial()) return false;
    return true;
}

RfMatrix RfMatrix::operator-() const {
    RfMatrix r = *this;
    for (auto& f : r.data_) f = -f;
    return r;
}

RfMatrix& RfMatrix::operator+=(const RfMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix add: " + dims(rows_, cols_) + " vs " + dims(b.rows_, b.cols_));
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
}

RfMatrix& RfMatrix::operator-=(const RfMatrix& b) {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionError("matrix sub: " + dims(rows_, cols_) + " vs " + dims(b.rows_, b.cols_));
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
}

namespace {

RatFun dot_entry(const RfMatrix& a, const RfMatrix& b, std::size_t i, std::size_t j) {
    RatFun acc;
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const RatFun& x = a(i, k);
        const RatFun& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
    }
    return acc;
}

void check_mul(const RfMatrix& a, const RfMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix mul: " + dims(a.rows(), a.cols()) + " * " + dims(b.rows(), b.cols()));
}

} // namespace

RfMatrix mat_mul_serial(const RfMatrix& a, const RfMatrix& b) {
    check_mul(a, b);
    RfMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = dot_entry(a, b, i, j);
    return r;
}

RfMatrix mat_mul(const RfMatrix& a, const RfMatrix& b) {
    check_mul(a, b);
    RfMatrix r(a.rows(), b.cols());
    const long total = static_cast<long>(a.rows() * b.cols());
    const std::size_t nc = b.cols();
    // Entries are independent; each thread writes distinct slots.
#pragma omp parallel for schedule(dynamic) if (total > 4)
    for (long e = 0; e < total; ++e) {
        const std::size_t i = static_cast<std::size_t>(e) / nc;
        const std::size_t j = static_cast<std::size_t>(e) % nc;
        r(i, j) = dot_entry(a, b, i, j);
    }
    return r;
}

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b) { return mat_mul(a, b); }

RfMatrix operator*(const RatFun& f, const RfMatrix& a) {
    RfMatrix r = a;
    for (auto& x : r.data_) x = f * x;
    return r;
}

RfMatrix mat_arith(MatOp op, const RfMatrix& a, const RfMatrix& b) {
    switch (op) {
    case MatOp::add: return a + b;
    case MatOp::sub: return a - b;
    case MatOp::mul: return a * b;
    }
    return {};
}

RfMatrix transpose_star(const RfMatrix& a) {
    RfMatrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
    return t;
}

RfMatrix block(const RfMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw IndexError("block out of range");
    RfMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = a(r0 + r, c0 + c);
    return b;
}

RfMatrix column(const RfMatrix& a, std::size_t i) {
    if (i < 1 || i > a.cols())
        throw IndexError("column index " + std::to_string(i) + " outside 1.." + std::to_string(a.cols()));
    return block(a, 0, i - 1, a.rows(), 1);
}

RfMatrix leading_columns(const RfMatrix& a, std::size_t i) {
    if (i < 1 || i > a.cols())
        throw IndexError("column count " + std::to_string(i) + " outside 1.." + std::to_string(a.cols()));
    return block(a, 0, 0, a.rows(), i);
}

RfMatrix vstack(const RfMatrix& top, const RfMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw DimensionError("vstack: column counts differ");
    std::vector<RatFun> e = top.entries();
    e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
    return RfMatrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

RfMatrix hstack(const RfMatrix& left, const RfMatrix& right) {
    if (left.rows() != right.rows()) throw DimensionError("hstack: row counts differ");
    RfMatrix r(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < left.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) r(i, j) = left(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) r(i, left.cols() + j) = right(i, j);
    }
    return r;
}

PrincipalPartition principal_partition(const RfMatrix& n, std::size_t i) {
    if (!n.is_square()) throw DimensionError("principal_partition: matrix is not square");
    if (i < 2 || i > n.rows())
        throw IndexError("partition index " + std::to_string(i) + " outside 2.." + std::to_string(n.rows()));
    return {block(n, 0, 0, i - 1, i - 1), block(n, 0, i - 1, i - 1, 1), n(i - 1, i - 1)};
}

RfMatrix ff_inverse(const RfMatrix& a) {
    if (!a.is_square()) throw DimensionError("ff_inverse: matrix is not square");
    const std::size_t n = a.rows();
    RfMatrix aug = hstack(a, RfMatrix::identity(n));
    const std::size_t w = 2 * n;
    RatFun prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug(p, k).is_zero()) ++p;
        if (p == n) throw SingularityError("matrix is singular (no pivot in column " + std::to_string(k + 1) + ")", 0);
        if (p != k)
            for (std::size_t j = 0; j < w; ++j) std::swap(aug(p, j), aug(k, j));
        const RatFun pivot = aug(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const RatFun factor = aug(i, k);
            for (std::size_t j = 0; j < w; ++j) {
                RatFun v = pivot * aug(i, j);
                if (!factor.is_zero() && !aug(k, j).is_zero()) v -= factor * aug(k, j);
                aug(i, j) = v / prev;
            }
        }
        prev = pivot;
    }
    RfMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const RatFun d = aug(i, i).inv();
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = d * aug(i, n + j);
    }
    return inv;
}

std::size_t generic_rank(const RfMatrix& a0) {
    RfMatrix a = a0;
    std::size_t rank = 0;
    RatFun prev(1);
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != rank)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
        const RatFun pivot = a(rank, c);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            const RatFun factor = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = (pivot * a(r, j) - factor * a(rank, j)) / prev;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

QMatrix mat_eval(const RfMatrix& a, const BigRational& s0) {
    QMatrix q(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            try {
                q(r, c) = a(r, c).eval(s0);
            } catch (const PoleError& e) {
                throw PoleError("pole at entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + e.what(),
                                r + 1, c + 1);
            }
        }
    return q;
}

} // namespace wmp
