#pragma once

// Coefficient-level weighted Moore-Penrose inverse of polynomial matrices.
//
// Every intermediate rational matrix is held as a matrix polynomial over one
// scalar polynomial denominator, X_i(s) = (sum_j Z_{i,j+1} s^j) / (sum_j Y_{i,j+1} s^j),
// and each rational operation of the column recursion becomes a Cauchy product
// of coefficient sequences. Shorter sequences are zero-padded when combined and
// trailing zero coefficients are dropped afterwards. N_{i-1}^{-1} is carried in
// the same numerator/denominator form.

#include "wmp/rf_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace wmp {

/// sum_j C_j s^j with constant rows x cols coefficients C_j; trailing zero
/// coefficient matrices are trimmed, so the zero matrix polynomial has none.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
    PolyMatrix(std::size_t rows, std::size_t cols, std::vector<QMatrix> coeffs);

    static PolyMatrix constant(const QMatrix& c);
    static PolyMatrix identity(std::size_t n);
    /// 1 x 1 matrix polynomial holding p.
    static PolyMatrix scalar(const UniPoly& p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Number of stored coefficient matrices (degree + 1, 0 for zero).
    std::size_t size() const { return coeffs_.size(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<QMatrix>& coeffs() const { return coeffs_; }
    /// Coefficient of s^j; zero matrix beyond the degree.
    QMatrix coeff(std::size_t j) const;
    /// Entry (r, c) as a polynomial, 0-based.
    UniPoly entry(std::size_t r, std::size_t c) const;

    PolyMatrix transpose() const;
    /// Rows [r0, r0 + nr) and columns [c0, c0 + nc), 0-based.
    PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    bool is_symmetric() const;

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    PolyMatrix operator-() const;
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<QMatrix> coeffs_;
};

/// Cauchy product sum_k A_{j-k} B_k; output coefficients computed in parallel
/// when built with OpenMP.
PolyMatrix conv(const PolyMatrix& a, const PolyMatrix& b);
/// Single-threaded reference for conv.
PolyMatrix conv_serial(const PolyMatrix& a, const PolyMatrix& b);
/// Scalar polynomial times matrix polynomial.
PolyMatrix conv(const UniPoly& p, const PolyMatrix& a);
PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);
/// Value of a 1 x 1 matrix polynomial.
UniPoly as_scalar(const PolyMatrix& a);

/// Coefficient form of a polynomial-entry RfMatrix. InvalidInput names the
/// first entry with a non-constant denominator.
PolyMatrix from_rf_matrix(const RfMatrix& a);
RfMatrix to_rf_matrix(const PolyMatrix& a);

/// num(s) / den(s) with a scalar polynomial denominator.
struct MatrixPolyFraction {
    PolyMatrix num;
    UniPoly den;

    RfMatrix to_rf() const;
};

/// Divides gcd(den, all entries of num) out of both, then scales so den has
/// coprime integer coefficients and a positive leading coefficient.
MatrixPolyFraction fraction_simplify(const PolyMatrix& z, const UniPoly& y);

/// (A, M, N) in coefficient form; the constructor checks shapes and symmetry.
class PolyProblem {
public:
    PolyProblem(PolyMatrix a, PolyMatrix m_weight, PolyMatrix n_weight);
    static PolyProblem unweighted(PolyMatrix a);

    const PolyMatrix& a() const { return a_; }
    const PolyMatrix& m_weight() const { return m_; }
    const PolyMatrix& n_weight() const { return n_; }
    std::size_t rows() const { return a_.rows(); }
    std::size_t cols() const { return a_.cols(); }

private:
    PolyMatrix a_;
    PolyMatrix m_;
    PolyMatrix n_;
};

/// Degree capacities of one stage, computed from the degrees of its inputs
/// (a zero polynomial counts as degree 0).
struct PolyBounds {
    long q = 0;       // deg A
    long m_q = 0;     // deg M
    long n_q = 0;     // deg N
    long nbar_q = 0;  // deg of the numerator of N_{i-1}^{-1}
    long ndbar_q = 0; // deg of the denominator of N_{i-1}^{-1}
    long q_prev = 0;  // deg Z_{i-1}
    long p_prev = 0;  // deg Y_{i-1}

    long q_hat() const;
    long d_cap() const;
    long c_cap() const;
    long phi_cap() const;
    long psi_cap() const;
    long delta_bar_cap() const;
    long delta_dbar_cap() const;
    long b_bar(bool c_zero) const;
    long b_dbar(bool c_zero) const;
    long q_i(bool c_zero) const;
    long p_i(bool c_zero) const;
};

/// One computed sequence: its length before trailing-zero trimming against the
/// capacity (degree bound) for that formula.
struct CapacityRecord {
    std::string name;
    std::size_t stage;
    long raw_length;
    long capacity;

    bool fits() const { return raw_length <= capacity + 1; }
};

/// State of stage i of the coefficient recursion. Before the step, z/y hold
/// Z_{i-1}/Y_{i-1} and ninv holds N_{i-1}^{-1}; the step fills the stage-local
/// sequences and poly_step_ZY produces Z_i/Y_i.
struct PolyPartitionState {
    std::size_t i = 1;
    PolyMatrix z;
    UniPoly y;
    MatrixPolyFraction ninv;

    PolyMatrix d;     // (i-1) x 1
    PolyMatrix c;     // m x 1
    PolyMatrix v;     // 1 x m
    UniPoly w;
    PolyMatrix phi;   // (i-1) x 1
    UniPoly psi;
    PolyMatrix theta; // (i-1) x m
    UniPoly delta_bar;
    UniPoly delta_dbar;
    bool c_zero = false;

    PolyBounds bounds;
    std::vector<CapacityRecord>* capacity_log = nullptr;
};

struct ZYPair {
    PolyMatrix z;
    UniPoly y;
};

/// X_1 = Z_1 / Y_1 with Z_1 = a1* M and Y_1 = a1* M a1, or Z = 0, Y = 1 for a zero column.
/// The pair is returned as computed, without simplification.
ZYPair poly_init_ZY(const PolyMatrix& a1, const PolyMatrix& m_weight);

/// d_{i,j+1} = sum_k Z_{i-1,j-k+1} a_{i,k+1}.
PolyMatrix poly_step_d(PolyPartitionState& state, const PolyMatrix& a_i);
/// c_{i,j+1} = sum_k (a_{i,j-k+1} Y_{i-1,k+1} - A_{i-1,j-k+1} d_{i,k+1}).
PolyMatrix poly_step_c(PolyPartitionState& state, const PolyMatrix& a_i, const PolyMatrix& a_prefix);

struct PhiPsi {
    PolyMatrix phi;
    UniPoly psi;
};

/// sigma_i = (I - X_{i-1} A_{i-1}) N_{i-1}^{-1} l_i = phi / psi.
PhiPsi poly_step_phi_psi(PolyPartitionState& state, const PolyProblem& problem);

struct VWPair {
    PolyMatrix v;
    UniPoly w;
};

/// b_i^* = V / W on either branch; the c = 0 branch also fills delta_bar/delta_dbar.
/// Requires d, c, phi, psi. Throws DegenerateWeightError when W vanishes.
VWPair poly_step_VW(PolyPartitionState& state, const PolyProblem& problem);

/// Z_i = [Theta; psi * V], Y_i = psi * W, simplified. Requires d, V, W, phi, psi.
ZYPair poly_step_ZY(PolyPartitionState& state);

/// Per-stage data kept when tracing is requested.
struct PolyTrace {
    std::vector<MatrixPolyFraction> stages; // X_1 .. X_n after simplification
    std::vector<bool> c_zero;               // entry i-2 is the branch of stage i
    std::vector<CapacityRecord> capacities;
};

/// A^dagger_{MN} as a canonical MatrixPolyFraction.
MatrixPolyFraction poly_wmp_inverse(const PolyProblem& problem, PolyTrace* trace = nullptr);
MatrixPolyFraction poly_wmp_inverse(const PolyMatrix& a, const PolyMatrix& m_weight, const PolyMatrix& n_weight,
                                    PolyTrace* trace = nullptr);

/// N^{-1} as a canonical MatrixPolyFraction via the coefficient block-inverse recursion.
MatrixPolyFraction poly_pd_inverse(const PolyMatrix& n_weight, std::vector<CapacityRecord>* capacity_log = nullptr);

} // namespace wmp
