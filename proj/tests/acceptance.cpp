// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "support.hpp"
#include "wmp/cli.hpp"
#include "wmp/errors.hpp"
#include "wmp/verify.hpp"
#include "wmp/wmp_polynomial.hpp"
#include "wmp/wmp_rational.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace wmp;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && secs > limit_seconds) {
        o.pass = false;
        o.detail += " (time limit " + std::to_string(limit_seconds) + " s exceeded)";
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s [%.2f s]%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
}

std::string first_mismatch(const RfMatrix& got, const RfMatrix& want) {
    for (std::size_t r = 0; r < want.rows(); ++r)
        for (std::size_t c = 0; c < want.cols(); ++c)
            if (!(got(r, c) == want(r, c)))
                return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") computed " +
                       to_string(got(r, c)) + ", printed " + to_string(want(r, c));
    return "";
}

Outcome golden(const RfMatrix& got, const RfMatrix& want, const std::string& entry_text, std::size_t r, std::size_t c) {
    if (got == want && got(r, c) == parse_entry(entry_text)) return {true, ""};
    return {false, first_mismatch(got, want)};
}

PolyMatrix pm(const RfMatrix& a) { return from_rf_matrix(a); }

std::vector<test::RandomProblem> suite() {
    std::mt19937 rng(2024);
    std::vector<test::RandomProblem> out;
    for (int t = 0; t < 200; ++t) out.push_back(test::random_problem(rng));
    return out;
}

RfMatrix random_canonical(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    return test::random_rational(rng, dim(rng), dim(rng), 4, -9, 9);
}

} // namespace

int main() {
    const RfMatrix i5 = RfMatrix::identity(5);

    criterion(1, "3x3 polynomial matrix, rational path matches the published inverse", 10, [] {
        RfMatrix x = wmp_inverse(WeightedProblem(test::load_fixture("poly3_a.txt"), test::load_fixture("poly3_m.txt"),
                                                 test::load_fixture("poly3_n.txt")));
        return golden(x, test::load_fixture("poly3_expected.txt"), "2*s^2*(2+s)/(12+32*s+33*s^2+14*s^3)", 0, 0);
    });

    criterion(2, "3x3 rational matrix, rational path matches the published inverse", 30, [] {
        RfMatrix x = wmp_inverse(WeightedProblem(test::load_fixture("rational3_a.txt"), test::load_fixture("rational3_m.txt"),
                                                 test::load_fixture("rational3_n.txt")));
        Outcome o = golden(x, test::load_fixture("rational3_expected.txt"), "-s^3", 0, 0);
        if (o.pass && !(x(1, 1) == parse_entry("(1+s)/(-2-s+s^2+s^3)"))) o = {false, "entry (2,2)"};
        return o;
    });

    criterion(3, "3x3 polynomial matrix, polynomial path matches the published inverse", 30, [] {
        RfMatrix x = poly_wmp_inverse(pm(test::load_fixture("polypath3_a.txt")), pm(test::load_fixture("polypath3_m.txt")),
                                      pm(test::load_fixture("polypath3_n.txt")))
                         .to_rf();
        return golden(x, test::load_fixture("polypath3_expected.txt"), "1/(1-s-s^2+s^5)", 0, 0);
    });

    criterion(4, "5x5 Hessenberg matrix, both paths match the published inverse", 120, [&] {
        const RfMatrix a = test::load_fixture("hessenberg5_a.txt");
        const RfMatrix printed = test::load_fixture("hessenberg5_expected.txt");
        const auto t0 = std::chrono::steady_clock::now();
        RfMatrix xr = wmp_inverse(WeightedProblem::unweighted(a));
        const auto t1 = std::chrono::steady_clock::now();
        RfMatrix xp = poly_wmp_inverse(PolyProblem::unweighted(pm(a))).to_rf();
        const auto t2 = std::chrono::steady_clock::now();
        if (std::chrono::duration<double>(t1 - t0).count() > 60 || std::chrono::duration<double>(t2 - t1).count() > 60)
            return Outcome{false, "a path exceeded 60 s"};
        if (xr == printed && xp == printed) return Outcome{true, ""};
        std::ostringstream d;
        d << "rational path: " << first_mismatch(xr, printed) << "; paths agree: " << (xr == xp ? "yes" : "no")
          << "; computed result satisfies Penrose: " << (penrose_check(a, i5, i5, xr).passed() ? "yes" : "no")
          << "; printed matrix satisfies Penrose: " << (penrose_check(a, i5, i5, printed).passed() ? "yes" : "no");
        return Outcome{false, d.str()};
    });

    const std::vector<test::RandomProblem> problems = suite();

    criterion(5, "Penrose equations hold exactly on 200 random problems", 300, [&] {
        std::size_t solved = 0, zero_branch = 0;
        for (std::size_t k = 0; k < problems.size(); ++k) {
            const auto& p = problems[k];
            std::vector<StageRecord> trace;
            RfMatrix x;
            try {
                x = wmp_inverse(WeightedProblem(p.a, p.m, p.n), &trace);
            } catch (const SingularityError&) {
                continue;
            } catch (const DegenerateWeightError&) {
                continue;
            }
            ++solved;
            for (const auto& st : trace) zero_branch += st.c_zero;
            PenroseReport rep = penrose_check(p.a, p.m, p.n, x);
            if (!rep.passed())
                return Outcome{false, "problem " + std::to_string(k) + " fails equation (" +
                                          rep.first_failure->equation + ")"};
        }
        return Outcome{solved == problems.size() && zero_branch > 0,
                       std::to_string(solved) + " solved, " + std::to_string(zero_branch) + " c = 0 stages"};
    });

    criterion(6, "both paths agree on 100 random polynomial problems", 300, [&] {
        for (std::size_t k = 0; k < 100; ++k) {
            const auto& p = problems[k];
            if (!cross_path_check(pm(p.a), pm(p.m), pm(p.n)))
                return Outcome{false, "problem " + std::to_string(k) + " differs"};
        }
        return Outcome{true, ""};
    });

    criterion(7, "block and fraction-free inverses agree on 100 random symmetric matrices", 300, [] {
        std::mt19937 rng(77);
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        for (int k = 0; k < 100; ++k) {
            RfMatrix n = test::random_spd(rng, dim(rng));
            RfMatrix ff = ff_inverse(n);
            if (!(pd_inverse(n) == ff)) return Outcome{false, "rational recursion differs on matrix " + std::to_string(k)};
            if (!(poly_pd_inverse(pm(n)).to_rf() == ff))
                return Outcome{false, "polynomial recursion differs on matrix " + std::to_string(k)};
        }
        return Outcome{true, ""};
    });

    criterion(8, "evaluation consistency on the golden fixtures at 5 points", 120, [&] {
        const std::vector<BigRational> points = {BigRational(0), BigRational(-1, 3), BigRational(1, 2),
                                                 BigRational(2), BigRational(7, 3)};
        std::ostringstream d;
        bool ok = true;
        for (const std::string ex : {"poly3", "rational3", "polypath3", "hessenberg5"}) {
            RfMatrix a = test::load_fixture(ex + "_a.txt");
            RfMatrix m = ex == "hessenberg5" ? RfMatrix::identity(a.rows()) : test::load_fixture(ex + "_m.txt");
            RfMatrix n = ex == "hessenberg5" ? RfMatrix::identity(a.cols()) : test::load_fixture(ex + "_n.txt");
            RfMatrix x = wmp_inverse(WeightedProblem(a, m, n));
            EvalReport rep = eval_consistency_check(a, m, n, x, points);
            ok = ok && rep.passed() && rep.count(PointStatus::pass) > 0;
            d << ex << " " << rep.count(PointStatus::pass) << " pass/" << rep.count(PointStatus::skip) << " skip/"
              << rep.count(PointStatus::fail) << " fail; ";
        }
        return Outcome{ok, d.str()};
    });

    criterion(9, "parser round trip on 200 random matrices and positioned grammar errors", 120, [] {
        std::mt19937 rng(99);
        for (int k = 0; k < 200; ++k) {
            RfMatrix m = random_canonical(rng);
            if (!(parse_matrix_file(format_matrix(m)) == m))
                return Outcome{false, "round trip fails on matrix " + std::to_string(k)};
        }
        const std::vector<std::pair<std::string, std::string>> cases = {
            {"matrix 1 1\ns+\n", "offset 2"},
            {"matrix 1 1\ns^s\n", "offset 2"},
            {"matrix 2 3\n1; 2\n3; 4; 5\n", "row 1"},
        };
        const std::string path = (std::filesystem::temp_directory_path() / "wmpinv_acceptance_input.txt").string();
        for (const auto& [text, where] : cases) {
            {
                std::FILE* f = std::fopen(path.c_str(), "w");
                std::fputs(text.c_str(), f);
                std::fclose(f);
            }
            std::ostringstream out, err;
            const int code = run_command({"wmpinv", "compute", "--a", path}, out, err);
            if (code != 2 || err.str().find(where) == std::string::npos)
                return Outcome{false, "case '" + text + "' gave exit " + std::to_string(code) + ": " + err.str()};
        }
        std::remove(path.c_str());
        return Outcome{true, ""};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
