#include "wmp/verify.hpp"

#include "wmp/errors.hpp"
#include "wmp/wmp_rational.hpp"

#include <algorithm>

namespace wmp {

namespace {

// Records the first nonzero entry of `residual` under `tag`; returns whether it is zero.
bool zero_or_record(const RfMatrix& residual, const char* tag, PenroseReport& rep) {
    for (std::size_t r = 0; r < residual.rows(); ++r)
        for (std::size_t c = 0; c < residual.cols(); ++c)
            if (!residual(r, c).is_zero()) {
                if (!rep.first_failure) rep.first_failure = PenroseFailure{tag, r + 1, c + 1, residual(r, c)};
                return false;
            }
    return true;
}

} // namespace

PenroseReport penrose_check(const RfMatrix& a, const RfMatrix& m_weight, const RfMatrix& n_weight, const RfMatrix& x) {
    const std::size_t m = a.rows(), n = a.cols();
    if (x.rows() != n || x.cols() != m)
        throw DimensionError("X must be " + std::to_string(n) + "x" + std::to_string(m));
    if (m_weight.rows() != m || m_weight.cols() != m) throw DimensionError("weight M must be " + std::to_string(m) + "x" + std::to_string(m));
    if (n_weight.rows() != n || n_weight.cols() != n) throw DimensionError("weight N must be " + std::to_string(n) + "x" + std::to_string(n));

    const RfMatrix ax = a * x;
    const RfMatrix xa = x * a;
    const RfMatrix max = m_weight * ax;
    const RfMatrix nxa = n_weight * xa;

    PenroseReport rep;
    rep.eq1_holds = zero_or_record(ax * a - a, "1", rep);
    rep.eq2_holds = zero_or_record(x * ax - x, "2", rep);
    rep.eq3m_holds = zero_or_record(transpose_star(max) - max, "3M", rep);
    rep.eq4n_holds = zero_or_record(transpose_star(nxa) - nxa, "4N", rep);
    return rep;
}

bool cross_path_check(const PolyMatrix& a, const PolyMatrix& m_weight, const PolyMatrix& n_weight) {
    const RfMatrix rational =
        wmp_inverse(WeightedProblem(to_rf_matrix(a), to_rf_matrix(m_weight), to_rf_matrix(n_weight)));
    const RfMatrix poly = poly_wmp_inverse(a, m_weight, n_weight).to_rf();
    return rational == poly;
}

bool EvalReport::passed() const {
    return std::none_of(points.begin(), points.end(), [](const PointResult& p) { return p.status == PointStatus::fail; });
}

std::size_t EvalReport::count(PointStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [s](const PointResult& p) { return p.status == s; }));
}

EvalReport eval_consistency_check(const RfMatrix& a, const RfMatrix& m_weight, const RfMatrix& n_weight,
                                  const RfMatrix& x, const std::vector<BigRational>& sample_points) {
    EvalReport rep;
    const std::size_t generic = generic_rank(a);
    for (const auto& s0 : sample_points) {
        QMatrix a0, m0, n0, x0;
        try {
            a0 = mat_eval(a, s0);
            m0 = mat_eval(m_weight, s0);
            n0 = mat_eval(n_weight, s0);
            x0 = mat_eval(x, s0);
        } catch (const PoleError& e) {
            rep.points.push_back({s0, PointStatus::skip, std::string("pole: ") + e.what()});
            continue;
        }
        if (rank(a0) != generic) {
            rep.points.push_back({s0, PointStatus::skip, "rank of A drops"});
            continue;
        }
        QMatrix expected;
        try {
            WeightedProblem p(RfMatrix::from_constant(a0), RfMatrix::from_constant(m0), RfMatrix::from_constant(n0));
            expected = mat_eval(wmp_inverse(p), s0);
        } catch (const SingularityError& e) {
            rep.points.push_back({s0, PointStatus::skip, std::string("constant recursion: ") + e.what()});
            continue;
        } catch (const DegenerateWeightError& e) {
            rep.points.push_back({s0, PointStatus::skip, std::string("constant recursion: ") + e.what()});
            continue;
        }
        if (expected == x0)
            rep.points.push_back({s0, PointStatus::pass, ""});
        else
            rep.points.push_back({s0, PointStatus::fail, "X(s0) differs from the constant recomputation"});
    }
    return rep;
}

} // namespace wmp
