#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmp/errors.hpp"
#include "wmp/rf_matrix.hpp"

using namespace wmp;

namespace {

RatFun s() { return RatFun::s(); }

} // namespace

TEST_CASE("basic shapes") {
    RfMatrix a{{1, s()}, {s() * s(), 0}};
    CHECK(transpose_star(transpose_star(a)) == a);
    CHECK(transpose_star(a)(0, 1) == s() * s());
    CHECK(column(a, 2) == RfMatrix{{s()}, {0}});
    CHECK(leading_columns(a, 1) == RfMatrix{{1}, {s() * s()}});
    CHECK(hstack(column(a, 1), column(a, 2)) == a);
    CHECK(vstack(block(a, 0, 0, 1, 2), block(a, 1, 0, 1, 2)) == a);
    CHECK_THROWS_AS(column(a, 3), IndexError);
    CHECK_THROWS_AS(a * RfMatrix(3, 1), DimensionError);
    CHECK(RfMatrix::identity(2).is_symmetric());
    CHECK_FALSE(a.is_symmetric());
}

TEST_CASE("principal partition reassembles the leading block") {
    std::mt19937 rng(3);
    RfMatrix n = test::random_spd(rng, 4);
    for (std::size_t i = 2; i <= 4; ++i) {
        PrincipalPartition p = principal_partition(n, i);
        RfMatrix top = hstack(p.n_prev, p.l);
        RfMatrix bottom = hstack(transpose_star(p.l), RfMatrix{{p.n_ii}});
        CHECK(vstack(top, bottom) == block(n, 0, 0, i, i));
    }
    CHECK_THROWS(principal_partition(n, 1));
    CHECK_THROWS(principal_partition(n, 5));
}

TEST_CASE("parallel product matches the serial reference") {
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        RfMatrix a = test::random_rational(rng, 4, 5, 2, -4, 4);
        RfMatrix b = test::random_rational(rng, 5, 3, 2, -4, 4);
        CHECK(mat_mul(a, b) == mat_mul_serial(a, b));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(23);
    RfMatrix a = test::random_poly_rf(rng, 3, 3, 3, -5, 5);
    RfMatrix b = test::random_poly_rf(rng, 3, 3, 3, -5, 5);
    for (long p = -2; p <= 2; ++p) {
        const BigRational s0(p);
        CHECK(mat_eval(a * b, s0) == mat_eval(a, s0) * mat_eval(b, s0));
        CHECK(mat_eval(a - b, s0) == mat_eval(a, s0) - mat_eval(b, s0));
    }
    RfMatrix pole{{1, RatFun::make(UniPoly{1}, UniPoly{-1, 1})}};
    try {
        mat_eval(pole, BigRational(1));
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.row() == 1u);
        CHECK(e.col() == 2u);
    }
}

TEST_CASE("fraction-free inverse") {
    std::mt19937 rng(29);
    for (int t = 0; t < 10; ++t) {
        RfMatrix a = test::random_rational(rng, 3, 3, 2, -3, 3);
        if (generic_rank(a) < 3) continue;
        RfMatrix inv = ff_inverse(a);
        CHECK(a * inv == RfMatrix::identity(3));
        CHECK(inv * a == RfMatrix::identity(3));
    }
    // zero leading entry forces a row swap
    RfMatrix swap{{0, 1}, {s(), 1}};
    RfMatrix inv = ff_inverse(swap);
    CHECK(swap * inv == RfMatrix::identity(2));
    CHECK_THROWS_AS(ff_inverse(RfMatrix{{s(), 1}, {s() * s(), s()}}), SingularityError);
}

TEST_CASE("ranks") {
    RfMatrix hess = test::load_fixture("hessenberg5_a.txt");
    // last row is s times the fourth
    CHECK(generic_rank(hess) == 4);
    CHECK(generic_rank(RfMatrix(2, 3)) == 0);
    CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(QMatrix::identity(3)) == 3);
    // rank drops at s = 1 only
    RfMatrix a{{1, s()}, {1, 1}};
    CHECK(generic_rank(a) == 2);
    CHECK(rank(mat_eval(a, BigRational(1))) == 1);
}
