#include "wmp/wmp_rational.hpp"

#include "wmp/errors.hpp"

#include <string>

namespace wmp {

namespace {

std::string stage_str(std::size_t i) { return "stage " + std::to_string(i); }

RatFun scalar(const RfMatrix& one_by_one) { return one_by_one(0, 0); }

// sigma_i = (I - X_{i-1} A_{i-1}) N_{i-1}^{-1} l_i
RfMatrix sigma(const PartitionState& state, const RfMatrix& a_prev, const RfMatrix& l) {
    RfMatrix proj = RfMatrix::identity(state.x.rows()) - state.x * a_prev;
    return proj * (state.ninv * l);
}

} // namespace

WeightedProblem::WeightedProblem(RfMatrix a, RfMatrix m_weight, RfMatrix n_weight)
    : a_(std::move(a)), m_(std::move(m_weight)), n_(std::move(n_weight)) {
    if (a_.rows() == 0 || a_.cols() == 0) throw DimensionError("matrix A is empty");
    if (m_.rows() != a_.rows() || m_.cols() != a_.rows())
        throw DimensionError("weight M must be " + std::to_string(a_.rows()) + "x" + std::to_string(a_.rows()));
    if (n_.rows() != a_.cols() || n_.cols() != a_.cols())
        throw DimensionError("weight N must be " + std::to_string(a_.cols()) + "x" + std::to_string(a_.cols()));
    if (!m_.is_symmetric()) throw InvalidInput("weight M is not symmetric");
    if (!n_.is_symmetric()) throw InvalidInput("weight N is not symmetric");
}

WeightedProblem WeightedProblem::unweighted(RfMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    return WeightedProblem(std::move(a), RfMatrix::identity(m), RfMatrix::identity(n));
}

RfMatrix column_pinv_init(const RfMatrix& a1, const RfMatrix& m_weight) {
    if (a1.cols() != 1) throw DimensionError("column_pinv_init expects a single column");
    RfMatrix a1t = transpose_star(a1);
    if (a1.is_zero()) return a1t;
    RfMatrix a1t_m = a1t * m_weight;
    RatFun q = scalar(a1t_m * a1);
    if (q.is_zero()) throw DegenerateWeightError("a1* M a1 vanishes identically at stage 1", 1);
    return q.inv() * a1t_m;
}

DcPair compute_d_c(const PartitionState& state, const WeightedProblem& problem, std::size_t i) {
    RfMatrix ai = column(problem.a(), i);
    RfMatrix d = state.x * ai;
    RfMatrix c = ai - leading_columns(problem.a(), i - 1) * d;
    return {std::move(d), std::move(c)};
}

RatFun compute_delta(const PartitionState& state, const WeightedProblem& problem, std::size_t i) {
    PrincipalPartition part = principal_partition(problem.n_weight(), i);
    const RfMatrix& d = state.d;
    RfMatrix dt = transpose_star(d);
    RfMatrix lt = transpose_star(part.l);
    RatFun delta = part.n_ii + scalar(dt * part.n_prev * d) - (scalar(dt * part.l) + scalar(lt * d)) -
                   scalar(lt * sigma(state, leading_columns(problem.a(), i - 1), part.l));
    if (delta.is_zero()) throw DegenerateWeightError("delta vanishes identically at " + stage_str(i), i);
    return delta;
}

RfMatrix compute_b(const PartitionState& state, const WeightedProblem& problem, std::size_t i) {
    if (!state.c.is_zero()) {
        RfMatrix ct_m = transpose_star(state.c) * problem.m_weight();
        RatFun q = scalar(ct_m * state.c);
        if (q.is_zero()) throw DegenerateWeightError("c* M c vanishes identically at " + stage_str(i), i);
        return q.inv() * ct_m;
    }
    if (!state.delta) throw Error("compute_b: delta is required on the c = 0 branch");
    PrincipalPartition part = principal_partition(problem.n_weight(), i);
    RfMatrix row = transpose_star(state.d) * part.n_prev - transpose_star(part.l);
    return state.delta->inv() * (row * state.x);
}

RfMatrix assemble_next(const PartitionState& state, const WeightedProblem& problem, std::size_t i) {
    PrincipalPartition part = principal_partition(problem.n_weight(), i);
    RfMatrix corr = state.d + sigma(state, leading_columns(problem.a(), i - 1), part.l);
    RfMatrix top = state.x - corr * state.b_star;
    return vstack(top, state.b_star);
}

PdBlock pd_block_step(const RfMatrix& ninv_prev, const PrincipalPartition& part) {
    RfMatrix ninv_l = ninv_prev * part.l;
    RatFun schur = part.n_ii - scalar(transpose_star(part.l) * ninv_l);
    if (schur.is_zero()) throw SingularityError("Schur complement vanishes identically", 0);
    RatFun g = schur.inv();
    RfMatrix f = (-g) * ninv_l;
    RfMatrix e = ninv_prev + schur * (f * transpose_star(f));
    return {std::move(e), std::move(f), std::move(g)};
}

RfMatrix pd_block_assemble(const PdBlock& blk) {
    RfMatrix top = hstack(blk.e, blk.f);
    RfMatrix bottom = hstack(transpose_star(blk.f), RfMatrix{{blk.g}});
    return vstack(top, bottom);
}

namespace {

RfMatrix first_block_inverse(const RfMatrix& n_weight) {
    const RatFun& n11 = n_weight(0, 0);
    if (n11.is_zero()) throw SingularityError("leading principal submatrix N_1 is singular", 1);
    return RfMatrix{{n11.inv()}};
}

RfMatrix next_block_inverse(const RfMatrix& ninv_prev, const RfMatrix& n_weight, std::size_t i) {
    try {
        return pd_block_assemble(pd_block_step(ninv_prev, principal_partition(n_weight, i)));
    } catch (const SingularityError&) {
        throw SingularityError("leading principal submatrix N_" + std::to_string(i) + " is singular", i);
    }
}

} // namespace

RfMatrix pd_inverse(const RfMatrix& n_weight) {
    if (!n_weight.is_square() || n_weight.rows() == 0) throw DimensionError("pd_inverse: matrix must be square and nonempty");
    RfMatrix ninv = first_block_inverse(n_weight);
    for (std::size_t i = 2; i <= n_weight.rows(); ++i) ninv = next_block_inverse(ninv, n_weight, i);
    return ninv;
}

RfMatrix wmp_inverse(const WeightedProblem& problem, std::vector<StageRecord>* trace) {
    const std::size_t n = problem.cols();
    PartitionState st;
    st.i = 1;
    st.x = column_pinv_init(column(problem.a(), 1), problem.m_weight());
    if (trace) trace->push_back({1, st.x, false});
    if (n == 1) return st.x;
    st.ninv = first_block_inverse(problem.n_weight());

    for (std::size_t i = 2; i <= n; ++i) {
        auto [d, c] = compute_d_c(st, problem, i);
        st.d = std::move(d);
        st.c = std::move(c);
        st.delta.reset();
        const bool c_zero = st.c.is_zero();
        if (c_zero) st.delta = compute_delta(st, problem, i);
        st.b_star = compute_b(st, problem, i);
        RfMatrix next = assemble_next(st, problem, i);
        if (i < n) st.ninv = next_block_inverse(st.ninv, problem.n_weight(), i);
        st.x = std::move(next);
        st.i = i;
        if (trace) trace->push_back({i, st.x, c_zero});
    }
    return st.x;
}

} // namespace wmp
