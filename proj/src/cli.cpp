#include "wmp/cli.hpp"

#include "wmp/errors.hpp"
#include "wmp/verify.hpp"
#include "wmp/wmp_polynomial.hpp"
#include "wmp/wmp_rational.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace wmp {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class EntryParser {
public:
    explicit EntryParser(std::string_view text) : text_(text) {}

    RatFun parse() {
        RatFun r = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character '" + current_char() + "'");
        return r;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string current_char() const {
        if (is_unicode_minus()) return std::string(text_.substr(pos_, 3));
        return std::string(1, text_[pos_]);
    }

    bool is_unicode_minus() const { return text_.substr(pos_, 3) == "\xE2\x88\x92"; }

    // Consumes `c` (or the Unicode minus for '-') after whitespace.
    bool accept(char c) {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        if (text_[pos_] == c) {
            ++pos_;
            return true;
        }
        if (c == '-' && is_unicode_minus()) {
            pos_ += 3;
            return true;
        }
        return false;
    }

    RatFun expr() {
        RatFun acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RatFun term() {
        RatFun acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else {
                skip_ws();
                const std::size_t at = pos_;
                if (!accept('/')) return acc;
                RatFun rhs = factor();
                if (rhs.is_zero()) throw ParseError("division by zero", at);
                acc = acc / rhs;
            }
        }
    }

    RatFun factor() {
        RatFun base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(pos_ >= text_.size() ? "missing exponent" : "exponent must be an unsigned integer");
        BigInt e = integer();
        if (e > kMaxExponent) throw ParseError("exponent too large", at);
        RatFun r(1);
        for (unsigned long k = e.get_ui(); k > 0; --k) r *= base;
        return r;
    }

    BigInt integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    RatFun atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == 's') {
            ++pos_;
            return RatFun::s();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(BigRational(integer()));
        if (accept('(')) {
            RatFun r = expr();
            if (!accept(')')) fail(pos_ >= text_.size() ? "missing ')'" : "expected ')'");
            return r;
        }
        if (accept('-')) return -factor();
        fail("unexpected character '" + current_char() + "'");
    }
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t p = s.find(sep, start);
        if (p == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, p - start));
        start = p + 1;
    }
}

} // namespace

RatFun parse_entry(std::string_view text) { return EntryParser(text).parse(); }

RfMatrix parse_matrix_file(std::string_view text) {
    std::optional<std::pair<std::size_t, std::size_t>> shape;
    std::vector<RatFun> entries;
    std::size_t row = 0;
    for (std::string_view raw : split(text, '\n')) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!shape) {
            std::istringstream hs{std::string(line)};
            std::string word;
            long r = -1, c = -1;
            std::string extra;
            if (!(hs >> word >> r >> c) || word != "matrix" || r <= 0 || c <= 0 || (hs >> extra))
                throw ParseError("expected header 'matrix <rows> <cols>'", 0);
            shape.emplace(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            continue;
        }
        ++row;
        if (row > shape->first)
            throw ParseError("more than " + std::to_string(shape->first) + " rows", 0, row);
        std::vector<std::string_view> cells = split(line, ';');
        if (cells.size() != shape->second)
            throw ParseError("row " + std::to_string(row) + " has " + std::to_string(cells.size()) + " entries, expected " +
                                 std::to_string(shape->second),
                             0, row);
        for (std::size_t col = 0; col < cells.size(); ++col) {
            try {
                entries.push_back(parse_entry(trim(cells[col])));
            } catch (const ParseError& e) {
                throw ParseError(e.what(), e.offset(), row, col + 1);
            }
        }
    }
    if (!shape) throw ParseError("missing header 'matrix <rows> <cols>'", 0);
    if (row != shape->first)
        throw ParseError("expected " + std::to_string(shape->first) + " rows, found " + std::to_string(row), 0, row);
    return RfMatrix(shape->first, shape->second, std::move(entries));
}

std::string format_matrix(const RfMatrix& a) {
    std::ostringstream os;
    os << "matrix " << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) os << (c ? "; " : "") << a(r, c);
        os << '\n';
    }
    return os.str();
}

namespace {

// Raised for failures that map to exit code 1.
struct CheckFailed {
    std::string message;
};

std::string describe(const ParseError& e) {
    std::string where;
    if (e.row()) where += "row " + std::to_string(*e.row()) + ", ";
    if (e.col()) where += "col " + std::to_string(*e.col()) + ", ";
    return where + "offset " + std::to_string(e.offset()) + ": " + e.what();
}

RfMatrix read_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_matrix_file(ss.str());
    } catch (const ParseError& e) {
        throw InvalidInput(path + ": " + describe(e));
    }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot write " + path);
    f << text;
}

BigRational parse_point(const std::string& text) {
    BigRational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw InvalidInput("evaluation point must be an integer or p/q: " + text);
    q.canonicalize();
    return q;
}

std::string penrose_message(const PenroseReport& rep) {
    const PenroseFailure& f = *rep.first_failure;
    return "equation (" + f.equation + ") fails at (" + std::to_string(f.row) + "," + std::to_string(f.col) +
           "), residual " + to_string(f.residual);
}

void check_penrose(const RfMatrix& a, const RfMatrix& m, const RfMatrix& n, const RfMatrix& x) {
    PenroseReport rep = penrose_check(a, m, n, x);
    if (!rep.passed()) throw CheckFailed{penrose_message(rep)};
}

RfMatrix weight_or_identity(const std::string& path, std::size_t size) {
    return path.empty() ? RfMatrix::identity(size) : read_matrix(path);
}

std::string first_difference(const RfMatrix& x, const RfMatrix& y) {
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
            if (!(x(r, c) == y(r, c)))
                return "paths disagree at (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " +
                       to_string(x(r, c)) + " vs " + to_string(y(r, c));
    return "paths disagree";
}

std::string format_constant(const QMatrix& q) {
    std::ostringstream os;
    os << "matrix " << q.rows() << ' ' << q.cols() << '\n';
    for (std::size_t r = 0; r < q.rows(); ++r) {
        for (std::size_t c = 0; c < q.cols(); ++c) os << (c ? "; " : "") << to_string(q(r, c));
        os << '\n';
    }
    return os.str();
}

} // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted Moore-Penrose inverse of rational and polynomial matrices", "wmpinv"};
    app.require_subcommand(1);

    std::string a_path, m_path, n_path, x_path, out_path, in_path, at, path = "rational";
    bool verify_flag = false;

    auto* compute = app.add_subcommand("compute", "compute the weighted Moore-Penrose inverse of A");
    compute->add_option("--a", a_path, "matrix A")->required();
    compute->add_option("--m", m_path, "row weight M (default identity)");
    compute->add_option("--n", n_path, "column weight N (default identity)");
    compute->add_option("--path", path, "rational, poly or both")
        ->check(CLI::IsMember({"rational", "poly", "both"}));
    compute->add_option("--out", out_path, "output file (default stdout)");
    compute->add_flag("--verify", verify_flag, "check the four Penrose equations");

    auto* invert = app.add_subcommand("invert", "invert a symmetric matrix by the leading-block recursion");
    invert->add_option("--n", n_path, "matrix")->required();
    invert->add_option("--path", path, "rational or poly")->check(CLI::IsMember({"rational", "poly"}));
    invert->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check the weighted Penrose equations for X");
    verify->add_option("--a", a_path, "matrix A")->required();
    verify->add_option("--m", m_path, "row weight M (default identity)");
    verify->add_option("--n", n_path, "column weight N (default identity)");
    verify->add_option("--x", x_path, "candidate inverse")->required();

    auto* eval = app.add_subcommand("eval", "evaluate a matrix at a rational point");
    eval->add_option("--in", in_path, "matrix file")->required();
    eval->add_option("--at", at, "point p/q")->required();
    eval->add_option("--out", out_path, "output file (default stdout)");

    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& s : argv) cargv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*compute) {
            const RfMatrix a = read_matrix(a_path);
            const RfMatrix m = weight_or_identity(m_path, a.rows());
            const RfMatrix n = weight_or_identity(n_path, a.cols());
            const WeightedProblem problem(a, m, n);
            RfMatrix x;
            if (path == "rational") {
                x = wmp_inverse(problem);
            } else {
                PolyProblem pp(from_rf_matrix(a), from_rf_matrix(m), from_rf_matrix(n));
                x = poly_wmp_inverse(pp).to_rf();
                if (path == "both") {
                    const RfMatrix xr = wmp_inverse(problem);
                    if (!(xr == x)) throw CheckFailed{first_difference(xr, x)};
                }
            }
            if (verify_flag) check_penrose(a, m, n, x);
            write_output(format_matrix(x), out_path, out);
        } else if (*invert) {
            const RfMatrix n = read_matrix(n_path);
            if (!n.is_square()) throw DimensionError("matrix must be square");
            if (!n.is_symmetric()) throw InvalidInput("matrix must be symmetric");
            const RfMatrix inv = path == "poly" ? poly_pd_inverse(from_rf_matrix(n)).to_rf() : pd_inverse(n);
            write_output(format_matrix(inv), out_path, out);
        } else if (*verify) {
            const RfMatrix a = read_matrix(a_path);
            const RfMatrix m = weight_or_identity(m_path, a.rows());
            const RfMatrix n = weight_or_identity(n_path, a.cols());
            check_penrose(a, m, n, read_matrix(x_path));
            out << "penrose equations hold\n";
        } else if (*eval) {
            const RfMatrix a = read_matrix(in_path);
            write_output(format_constant(mat_eval(a, parse_point(at))), out_path, out);
        }
    } catch (const CheckFailed& e) {
        err << "wmpinv: " << e.message << '\n';
        return 1;
    } catch (const SingularityError& e) {
        err << "wmpinv: " << e.what() << '\n';
        return 3;
    } catch (const DegenerateWeightError& e) {
        err << "wmpinv: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "wmpinv: " << describe(e) << '\n';
        return 2;
    } catch (const Error& e) {
        err << "wmpinv: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace wmp
