#pragma once

// Exact correctness checks for a computed weighted pseudoinverse.

#include "wmp/rf_matrix.hpp"
#include "wmp/wmp_polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmp {

struct PenroseFailure {
    std::string equation; // "1", "2", "3M" or "4N"
    std::size_t row;      // 1-based
    std::size_t col;
    RatFun residual;
};

struct PenroseReport {
    bool eq1_holds = false;
    bool eq2_holds = false;
    bool eq3m_holds = false;
    bool eq4n_holds = false;
    std::optional<PenroseFailure> first_failure;

    bool passed() const { return eq1_holds && eq2_holds && eq3m_holds && eq4n_holds; }
};

/// Checks AXA = A, XAX = X, (MAX)* = MAX and (NXA)* = NXA exactly.
PenroseReport penrose_check(const RfMatrix& a, const RfMatrix& m_weight, const RfMatrix& n_weight, const RfMatrix& x);

/// Both paths produce the same canonical matrix.
bool cross_path_check(const PolyMatrix& a, const PolyMatrix& m_weight, const PolyMatrix& n_weight);

enum class PointStatus { pass, skip, fail };

struct PointResult {
    BigRational point;
    PointStatus status;
    std::string note; // why the point was skipped or failed
};

struct EvalReport {
    std::vector<PointResult> points;

    bool passed() const;
    std::size_t count(PointStatus s) const;
};

/// Compares X(s0) with the constant-matrix recursion run on A(s0), M(s0), N(s0).
/// Points at a pole, where A(s0) loses rank, or where the constant recursion
/// breaks down are skipped.
EvalReport eval_consistency_check(const RfMatrix& a, const RfMatrix& m_weight, const RfMatrix& n_weight,
                                  const RfMatrix& x, const std::vector<BigRational>& sample_points);

} // namespace wmp
