#pragma once

// Weighted Moore-Penrose inverse of a rational matrix by column partitioning.
//
// For A in Q(s)^{m x n} and symmetric weights M (m x m), N (n x n), X_i is the
// weighted pseudoinverse of the first i columns of A with respect to M and the
// leading i x i block N_i of N. X_1 comes from the first column alone; every
// later stage appends one column and one row of N. N_i^{-1} is carried along
// by the block-inverse recursion, so no stage inverts N_i from scratch.

#include "wmp/rf_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace wmp {

/// The triple (A, M, N). The constructor checks shapes and symmetry.
class WeightedProblem {
public:
    WeightedProblem(RfMatrix a, RfMatrix m_weight, RfMatrix n_weight);
    /// M = I_m, N = I_n.
    static WeightedProblem unweighted(RfMatrix a);

    const RfMatrix& a() const { return a_; }
    const RfMatrix& m_weight() const { return m_; }
    const RfMatrix& n_weight() const { return n_; }
    std::size_t rows() const { return a_.rows(); }
    std::size_t cols() const { return a_.cols(); }

private:
    RfMatrix a_;
    RfMatrix m_;
    RfMatrix n_;
};

/// Recursion state after stage i, plus the stage-local vectors of the step in progress.
struct PartitionState {
    std::size_t i = 0;
    RfMatrix x;    // X_i, i x m
    RfMatrix ninv; // N_i^{-1}, i x i

    // valid during a step
    RfMatrix d;      // (i-1) x 1
    RfMatrix c;      // m x 1
    RfMatrix b_star; // 1 x m
    std::optional<RatFun> delta; // only on the c = 0 branch
};

/// X_1 = (a1* M a1)^{-1} a1* M, or the zero row when a1 = 0.
RfMatrix column_pinv_init(const RfMatrix& a1, const RfMatrix& m_weight);

struct DcPair {
    RfMatrix d;
    RfMatrix c;
};

/// d = X_{i-1} a_i and c = a_i - A_{i-1} d for stage i (state holds X_{i-1}).
DcPair compute_d_c(const PartitionState& state, const WeightedProblem& problem, std::size_t i);

/// delta_i = n_ii + d* N_{i-1} d - (d* l + l* d) - l* (I - X_{i-1} A_{i-1}) N_{i-1}^{-1} l.
/// Requires state.d and state.ninv = N_{i-1}^{-1}. Throws DegenerateWeightError if zero.
RatFun compute_delta(const PartitionState& state, const WeightedProblem& problem, std::size_t i);

/// b_i^*: (c* M c)^{-1} c* M when c != 0, otherwise delta^{-1} (d* N_{i-1} - l*) X_{i-1}.
RfMatrix compute_b(const PartitionState& state, const WeightedProblem& problem, std::size_t i);

/// Stacks X_{i-1} - (d + (I - X_{i-1} A_{i-1}) N_{i-1}^{-1} l) b* over b*.
RfMatrix assemble_next(const PartitionState& state, const WeightedProblem& problem, std::size_t i);

struct PdBlock {
    RfMatrix e; // (i-1) x (i-1)
    RfMatrix f; // (i-1) x 1
    RatFun g;
};

/// One block-inverse step: g = (n_ii - l* N_{i-1}^{-1} l)^{-1}, f = -g N_{i-1}^{-1} l,
/// E = N_{i-1}^{-1} + g^{-1} f f*. Throws SingularityError (stage 0) on a zero Schur complement.
PdBlock pd_block_step(const RfMatrix& ninv_prev, const PrincipalPartition& part);

/// Assembles [[E, f], [f*, g]].
RfMatrix pd_block_assemble(const PdBlock& blk);

/// N^{-1} through the leading-block recursion. SingularityError names the failing index.
RfMatrix pd_inverse(const RfMatrix& n_weight);

/// Per-stage record kept when tracing is requested.
struct StageRecord {
    std::size_t i;
    RfMatrix x;
    bool c_zero; // branch taken at this stage (false for i = 1)
};

/// A^dagger_{MN}, n x m. Errors carry the failing stage index.
RfMatrix wmp_inverse(const WeightedProblem& problem, std::vector<StageRecord>* trace = nullptr);

} // namespace wmp
