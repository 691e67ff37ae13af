#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmp/errors.hpp"
#include "wmp/verify.hpp"
#include "wmp/wmp_rational.hpp"

using namespace wmp;

namespace {

RatFun s() { return RatFun::s(); }

// Closed forms valid for full column rank and full row rank respectively.
RfMatrix full_column_rank_oracle(const RfMatrix& a, const RfMatrix& m) {
    RfMatrix at_m = transpose_star(a) * m;
    return ff_inverse(at_m * a) * at_m;
}

RfMatrix full_row_rank_oracle(const RfMatrix& a, const RfMatrix& n) {
    RfMatrix ninv_at = ff_inverse(n) * transpose_star(a);
    return ninv_at * ff_inverse(a * ninv_at);
}

} // namespace

TEST_CASE("weighted inverse of a 3x3 polynomial matrix") {
    RfMatrix a = test::load_fixture("poly3_a.txt");
    RfMatrix x = wmp_inverse(WeightedProblem(a, test::load_fixture("poly3_m.txt"), test::load_fixture("poly3_n.txt")));
    CHECK(x == test::load_fixture("poly3_expected.txt"));
    CHECK(to_string(x(0, 0)) == "(4*s^2+2*s^3)/(12+32*s+33*s^2+14*s^3)");
}

TEST_CASE("weighted inverse of a 3x3 rational matrix") {
    RfMatrix x = wmp_inverse(WeightedProblem(test::load_fixture("rational3_a.txt"), test::load_fixture("rational3_m.txt"),
                                             test::load_fixture("rational3_n.txt")));
    CHECK(x == test::load_fixture("rational3_expected.txt"));
    CHECK(x(0, 0) == -(s() * s() * s()));
}

TEST_CASE("full-rank problems match the closed forms") {
    std::mt19937 rng(41);
    int column_cases = 0, row_cases = 0;
    for (int t = 0; t < 30; ++t) {
        const std::size_t rows = 2 + rng() % 3, cols = 1 + rng() % 3;
        RfMatrix a = test::random_poly_rf(rng, rows, cols, 2, -3, 3);
        RfMatrix m = test::random_spd(rng, rows), n = test::random_spd(rng, cols);
        const std::size_t r = generic_rank(a);
        RfMatrix x = wmp_inverse(WeightedProblem(a, m, n));
        if (r == cols) {
            CHECK(x == full_column_rank_oracle(a, m));
            ++column_cases;
        }
        RfMatrix at = transpose_star(a);
        RfMatrix y = wmp_inverse(WeightedProblem(at, n, m));
        if (r == cols) {
            CHECK(y == full_row_rank_oracle(at, m));
            ++row_cases;
        }
    }
    CHECK(column_cases > 10);
    CHECK(row_cases > 10);
}

TEST_CASE("each stage is the inverse of the leading columns") {
    std::mt19937 rng(43);
    for (int t = 0; t < 8; ++t) {
        test::RandomProblem p = test::random_problem(rng);
        WeightedProblem problem(p.a, p.m, p.n);
        std::vector<StageRecord> trace;
        RfMatrix x = wmp_inverse(problem, &trace);
        REQUIRE(trace.size() == p.a.cols());
        CHECK(trace.back().x == x);
        for (const StageRecord& st : trace) {
            RfMatrix ai = leading_columns(p.a, st.i);
            RfMatrix ni = block(p.n, 0, 0, st.i, st.i);
            CHECK(penrose_check(ai, p.m, ni, st.x).passed());
        }
    }
}

TEST_CASE("duplicated and zero columns take the c = 0 branch") {
    RfMatrix a{{1 + s(), 1 + s(), 0}, {s(), s(), 0}, {1, 1, 0}};
    RfMatrix m{{2, 1, 0}, {1, 2, 0}, {0, 0, 1}};
    RfMatrix n{{1 + s() * s(), s(), 0}, {s(), 2, 1}, {0, 1, 3}};
    std::vector<StageRecord> trace;
    RfMatrix x = wmp_inverse(WeightedProblem(a, m, n), &trace);
    CHECK(trace[1].c_zero);
    CHECK(trace[2].c_zero);
    CHECK(penrose_check(a, m, n, x).passed());

    RfMatrix zero_first{{0, s()}, {0, 1}};
    std::vector<StageRecord> t2;
    RfMatrix y = wmp_inverse(WeightedProblem::unweighted(zero_first), &t2);
    CHECK(t2[0].x.is_zero());
    CHECK(penrose_check(zero_first, RfMatrix::identity(2), RfMatrix::identity(2), y).passed());

    CHECK(wmp_inverse(WeightedProblem::unweighted(RfMatrix(2, 3))) == RfMatrix(3, 2));
}

TEST_CASE("identity and scalar cases") {
    CHECK(wmp_inverse(WeightedProblem::unweighted(RfMatrix::identity(3))) == RfMatrix::identity(3));
    RfMatrix col{{s()}};
    CHECK(wmp_inverse(WeightedProblem::unweighted(col)) == RfMatrix{{s().inv()}});
}

TEST_CASE("block inverse recursion matches fraction-free elimination") {
    std::mt19937 rng(47);
    for (int t = 0; t < 15; ++t) {
        RfMatrix n = test::random_spd(rng, 1 + rng() % 4);
        CHECK(pd_inverse(n) == ff_inverse(n));
    }
}

TEST_CASE("errors carry the failing index") {
    try {
        pd_inverse(RfMatrix{{1, 1}, {1, 1}});
        FAIL("expected singularity");
    } catch (const SingularityError& e) {
        CHECK(e.stage() == 2);
    }
    try {
        pd_inverse(RfMatrix{{0, 1}, {1, 0}});
        FAIL("expected singularity");
    } catch (const SingularityError& e) {
        CHECK(e.stage() == 1);
    }
    // a1* M a1 = 1 - 1 = 0 under an indefinite weight
    try {
        wmp_inverse(WeightedProblem(RfMatrix{{1}, {1}}, RfMatrix{{1, 0}, {0, -1}}, RfMatrix{{1}}));
        FAIL("expected degenerate weight");
    } catch (const DegenerateWeightError& e) {
        CHECK(e.stage() == 1);
    }
    CHECK_THROWS_AS(WeightedProblem(RfMatrix(2, 2), RfMatrix::identity(3), RfMatrix::identity(2)), DimensionError);
    CHECK_THROWS_AS(WeightedProblem(RfMatrix(2, 2), RfMatrix{{1, s()}, {0, 1}}, RfMatrix::identity(2)), InvalidInput);
}
