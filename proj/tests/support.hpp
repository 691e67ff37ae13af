#pragma once

// Fixture loading and random problem generation shared by the test binaries.

#include "wmp/cli.hpp"
#include "wmp/rf_matrix.hpp"
#include "wmp/wmp_polynomial.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace wmp::test {

inline std::string fixture_path(const std::string& name) { return std::string(WMP_FIXTURES) + "/" + name; }

inline RfMatrix load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix_file(ss.str());
}

inline UniPoly random_poly(std::mt19937& rng, int max_degree, long lo, long hi) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coef(lo, hi);
    std::vector<BigRational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    return UniPoly(std::move(c));
}

inline RfMatrix random_poly_rf(std::mt19937& rng, std::size_t rows, std::size_t cols, int max_degree, long lo, long hi) {
    RfMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a(r, c) = RatFun(random_poly(rng, max_degree, lo, hi));
    return a;
}

inline RfMatrix random_rational(std::mt19937& rng, std::size_t rows, std::size_t cols, int max_degree, long lo,
                                long hi) {
    RfMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            UniPoly den = random_poly(rng, max_degree, lo, hi);
            if (den.is_zero()) den = UniPoly{1};
            a(r, c) = RatFun::make(random_poly(rng, max_degree, lo, hi), den);
        }
    return a;
}

/// B^T B + I for a random polynomial n x n matrix B.
inline RfMatrix random_spd(std::mt19937& rng, std::size_t n, int max_degree = 1, long range = 2) {
    RfMatrix b = random_poly_rf(rng, n, n, max_degree, -range, range);
    return transpose_star(b) * b + RfMatrix::identity(n);
}

struct RandomProblem {
    RfMatrix a, m, n;
};

/// A up to 4 x 4, entries of degree <= 2 with coefficients in [-3, 3]. Some
/// problems get a zero column or a duplicated column so that both branches of
/// the column update occur.
inline RandomProblem random_problem(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t rows = dim(rng), cols = dim(rng);
    RfMatrix a = random_poly_rf(rng, rows, cols, 2, -3, 3);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> pick(0, cols - 1);
    const int k = kind(rng);
    if (k == 1) {
        const std::size_t c = pick(rng);
        for (std::size_t r = 0; r < rows; ++r) a(r, c) = RatFun();
    } else if (k == 2 && cols > 1) {
        const std::size_t src = pick(rng), dst = pick(rng);
        for (std::size_t r = 0; r < rows; ++r) a(r, dst) = a(r, src);
    }
    return {a, random_spd(rng, rows), random_spd(rng, cols)};
}

} // namespace wmp::test
