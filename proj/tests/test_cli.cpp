#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wmp/cli.hpp"
#include "wmp/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wmp;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "wmpinv");
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t error_offset(const std::string& text) {
    try {
        parse_entry(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    FAIL("no parse error for " << text);
    return 0;
}

fs::path scratch(const std::string& name, const std::string& contents = "") {
    fs::path dir = fs::temp_directory_path() / "wmpinv_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p;
}

std::string fx(const std::string& name) { return test::fixture_path(name); }

} // namespace

TEST_CASE("entry grammar") {
    RatFun f = parse_entry("(s+1)/(s^2)");
    CHECK(f.numerator() == UniPoly{1, 1});
    CHECK(f.denominator() == UniPoly{0, 0, 1});
    CHECK(parse_entry("-2+s^4").numerator() == UniPoly{-2, 0, 0, 0, 1});
    CHECK(parse_entry(" s + 1 ") == parse_entry("1+s"));
    CHECK(parse_entry("-s^2") == -(RatFun::s() * RatFun::s()));
    CHECK(parse_entry("2*-s") == parse_entry("-2*s"));
    CHECK(parse_entry("s\xE2\x88\x92" "1") == parse_entry("s-1"));
    CHECK(parse_entry("(s+1)^0") == RatFun(1));
    CHECK(parse_entry("6/4") == RatFun(BigRational(3, 2)));
    CHECK(parse_entry("1/s/s") == parse_entry("1/s^2"));
}

TEST_CASE("entry syntax errors are positioned") {
    CHECK(error_offset("s+") == 2);
    CHECK(error_offset("s^s") == 2);
    CHECK(error_offset("2s") == 1);
    CHECK(error_offset("(s+1") == 4);
    CHECK(error_offset("") == 0);
    CHECK(error_offset("s $") == 2);
    CHECK(error_offset("1/(s-s)") == 1);
}

TEST_CASE("matrix files") {
    RfMatrix x = parse_matrix_file("# comment\nmatrix 1 1\n0\n");
    CHECK(x == RfMatrix(1, 1));
    RfMatrix a = test::load_fixture("poly3_a.txt");
    RatFun s = RatFun::s();
    CHECK(a == RfMatrix{{s + 1, s + 2, s}, {s, s, s + 1}, {s + 1, s + 2, s}});
    try {
        parse_matrix_file("matrix 2 3\n1; 2\n3; 4; 5\n");
        FAIL("expected arity error");
    } catch (const ParseError& e) {
        CHECK(e.row() == 1u);
    }
    try {
        parse_matrix_file("matrix 1 2\n1; s+\n");
        FAIL("expected entry error");
    } catch (const ParseError& e) {
        CHECK(e.row() == 1u);
        CHECK(e.col() == 2u);
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_matrix_file("matrix 2 1\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("matrix 1 1\n1\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("1; 2\n"), ParseError);
}

TEST_CASE("formatting") {
    CHECK(format_matrix(RfMatrix::identity(2)) == "matrix 2 2\n1; 0\n0; 1\n");
    CHECK(format_matrix(RfMatrix{{RatFun::s().inv()}}) == "matrix 1 1\n1/s\n");
    std::mt19937 rng(83);
    for (int t = 0; t < 20; ++t) {
        RfMatrix m = test::random_rational(rng, 1 + rng() % 3, 1 + rng() % 3, 3, -7, 7);
        CHECK(parse_matrix_file(format_matrix(m)) == m);
    }
}

TEST_CASE("compute writes the weighted inverse") {
    fs::path out = scratch("poly3_out.txt");
    Run r = run({"compute", "--a", fx("poly3_a.txt"), "--m", fx("poly3_m.txt"), "--n", fx("poly3_n.txt"), "--verify",
                 "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(test::load_fixture("poly3_expected.txt") == parse_matrix_file([&] {
              std::ifstream in(out);
              std::ostringstream ss;
              ss << in.rdbuf();
              return ss.str();
          }()));
}

TEST_CASE("compute paths") {
    Run both = run({"compute", "--a", fx("polypath3_a.txt"), "--m", fx("polypath3_m.txt"), "--n", fx("polypath3_n.txt"), "--path",
                    "both"});
    CHECK(both.code == 0);
    CHECK(parse_matrix_file(both.out) == test::load_fixture("polypath3_expected.txt"));
    // the default weights give the unweighted inverse
    Run plain = run({"compute", "--a", fx("hessenberg5_a.txt"), "--path", "poly"});
    CHECK(plain.code == 0);
    Run rational = run({"compute", "--a", fx("hessenberg5_a.txt")});
    CHECK(plain.out == rational.out);
    // rational entries cannot take the polynomial path
    CHECK(run({"compute", "--a", fx("rational3_a.txt"), "--path", "poly"}).code == 2);
}

TEST_CASE("verify reports the failing equation") {
    RfMatrix x = test::load_fixture("poly3_expected.txt");
    x(0, 0) += 1;
    fs::path bad = scratch("poly3_bad.txt", format_matrix(x));
    Run r = run({"verify", "--a", fx("poly3_a.txt"), "--m", fx("poly3_m.txt"), "--n", fx("poly3_n.txt"), "--x",
                 bad.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("equation (1)") != std::string::npos);
    Run ok = run({"verify", "--a", fx("poly3_a.txt"), "--m", fx("poly3_m.txt"), "--n", fx("poly3_n.txt"), "--x",
                  fx("poly3_expected.txt")});
    CHECK(ok.code == 0);
}

TEST_CASE("input errors exit with 2") {
    Run missing = run({"compute", "--a", fx("no_such_file.txt")});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("no_such_file") != std::string::npos);
    fs::path syntax = scratch("syntax.txt", "matrix 1 2\n1; s^s\n");
    Run bad = run({"compute", "--a", syntax.string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("row 1, col 2, offset 2") != std::string::npos);
    CHECK(run({"compute"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compute", "--a", fx("poly3_a.txt"), "--path", "sideways"}).code == 2);
    CHECK(run({"compute", "--a", fx("poly3_a.txt"), "--m", fx("hessenberg5_a.txt")}).code == 2);
}

TEST_CASE("singular weights exit with 3") {
    fs::path n = scratch("singular.txt", "matrix 2 2\n1; s\ns; s^2\n");
    Run r = run({"invert", "--n", n.string()});
    CHECK(r.code == 3);
    CHECK(r.err.find("N_2") != std::string::npos);
    CHECK(run({"invert", "--n", n.string(), "--path", "poly"}).code == 3);
    Run inv = run({"invert", "--n", fx("poly3_n.txt"), "--path", "poly"});
    CHECK(inv.code == 0);
    CHECK(parse_matrix_file(inv.out) == parse_matrix_file(run({"invert", "--n", fx("poly3_n.txt")}).out));
}

TEST_CASE("eval") {
    Run r = run({"eval", "--in", fx("rational3_a.txt"), "--at", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "matrix 3 3\n4; 1/2; 12\n1/2; -3/4; 1/2\n3/2; 2; 3/2\n");
    Run pole = run({"eval", "--in", fx("rational3_a.txt"), "--at", "0"});
    CHECK(pole.code == 2);
    CHECK(run({"eval", "--in", fx("rational3_a.txt"), "--at", "x"}).code == 2);
    CHECK(run({"eval", "--in", fx("rational3_a.txt"), "--at", "1/0"}).code == 2);
}
