#include "wmp/exact_arith.hpp"

#include "wmp/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace wmp {

namespace {

void trim_rational(std::vector<BigRational>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

} // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim_rational(coeffs_);
}

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim_rational(coeffs_);
}

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly(std::vector<BigRational>{c}); }

UniPoly UniPoly::monomial(const BigRational& c, std::size_t power) {
    std::vector<BigRational> v(power + 1);
    v[power] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_int(const IntPoly& p) {
    UniPoly r;
    r.coeffs_.reserve(p.size());
    for (const auto& c : p) r.coeffs_.emplace_back(c);
    trim_rational(r.coeffs_);
    return r;
}

BigRational UniPoly::coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : BigRational(0);
}

BigRational UniPoly::eval(const BigRational& s0) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s0 + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim_rational(coeffs_);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    trim_rational(coeffs_);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const BigRational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly poly_normalize(std::vector<BigRational> coeffs) { return UniPoly(std::move(coeffs)); }

UniPoly poly_arith(PolyOp op, const UniPoly& p, const UniPoly& q) {
    switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
    }
    return {};
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& p, const UniPoly& q) {
    if (q.is_zero()) throw ZeroDivision("polynomial division by zero");
    std::vector<BigRational> rem = p.coeffs();
    const std::size_t dq = q.size() - 1;
    if (rem.size() < q.size()) return {UniPoly{}, p};
    std::vector<BigRational> quot(rem.size() - dq);
    const BigRational& lq = q.leading();
    for (std::size_t k = rem.size(); k-- > dq;) {
        if (sgn(rem[k]) == 0) continue;
        BigRational t = rem[k] / lq;
        quot[k - dq] = t;
        for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= t * q.coeffs()[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

BigRational poly_content(const UniPoly& p) {
    if (p.is_zero()) return 1;
    BigRational scale;
    ipoly::from_rational(p, scale);
    return abs(scale);
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw InvalidInput("gcd(0, 0) is undefined");
    BigRational unused;
    if (q.is_zero()) return UniPoly::from_int(ipoly::from_rational(p, unused));
    if (p.is_zero()) return UniPoly::from_int(ipoly::from_rational(q, unused));
    return UniPoly::from_int(
        ipoly::gcd(ipoly::from_rational(p, unused), ipoly::from_rational(q, unused)));
}

// ---------------------------------------------------------------------------
// Integer polynomial kernels

namespace ipoly {

void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

long degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p) {
        if (sgn(c) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive(IntPoly p) {
    trim(p);
    if (p.empty()) return p;
    BigInt g = content(p);
    if (sgn(p.back()) < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

IntPoly from_rational(const UniPoly& p, BigRational& scale) {
    if (p.is_zero()) {
        scale = 0;
        return {};
    }
    BigInt l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        BigInt v = c.get_num() * (l / c.get_den());
        out.push_back(std::move(v));
    }
    BigInt g = content(out);
    if (sgn(out.back()) < 0) g = -g;
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    scale = BigRational(g, l);
    scale.canonicalize();
    return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(out);
    return out;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a.size() >= b.size() ? a : b;
    const IntPoly& small = a.size() >= b.size() ? b : a;
    for (std::size_t j = 0; j < small.size(); ++j) out[j] += small[j];
    trim(out);
    return out;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly out = a;
    if (out.size() < b.size()) out.resize(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) out[j] -= b[j];
    trim(out);
    return out;
}

IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) throw ZeroDivision("polynomial division by zero");
    if (a.empty()) return {};
    if (b.size() == 1) {
        IntPoly out = a;
        for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b[0].get_mpz_t());
        return out;
    }
    IntPoly rem = a;
    const std::size_t db = b.size() - 1;
    if (rem.size() < b.size()) throw Error("inexact polynomial division");
    IntPoly quot(rem.size() - db);
    BigInt t;
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) continue;
        mpz_divexact(t.get_mpz_t(), rem[k].get_mpz_t(), b.back().get_mpz_t());
        quot[k - db] = t;
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(rem[k - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    trim(quot);
    return quot;
}

namespace {

// Pseudo-remainder of a by b, reduced to its primitive part.
IntPoly prem_primitive(IntPoly a, const IntPoly& b) {
    const long db = degree(b);
    const BigInt& lb = b.back();
    BigInt g, fa, fb;
    while (!a.empty() && degree(a) >= db) {
        const long shift = degree(a) - db;
        mpz_gcd(g.get_mpz_t(), a.back().get_mpz_t(), lb.get_mpz_t());
        mpz_divexact(fa.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(fb.get_mpz_t(), a.back().get_mpz_t(), g.get_mpz_t());
        if (fa != 1)
            for (auto& c : a) c *= fa;
        for (long j = 0; j <= db; ++j)
            mpz_submul(a[j + shift].get_mpz_t(), fb.get_mpz_t(), b[j].get_mpz_t());
        trim(a);
    }
    return primitive(std::move(a));
}

} // namespace

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
    if (a0.size() == 1 || b0.size() == 1) return IntPoly{BigInt(1)};
    IntPoly a = primitive(a0);
    IntPoly b = primitive(b0);
    if (a == b) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) return IntPoly{BigInt(1)};
        IntPoly r = prem_primitive(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return primitive(std::move(a));
}

bool is_one(const IntPoly& p) { return p.size() == 1 && p[0] == 1; }

} // namespace ipoly

// ---------------------------------------------------------------------------
// RatFun

namespace {

// Divides out the joint integer content and fixes the denominator sign.
void normalize_content(IntPoly& num, IntPoly& den) {
    if (num.empty()) {
        den = IntPoly{BigInt(1)};
        return;
    }
    BigInt g = ipoly::content(den);
    if (g != 1) {
        BigInt cn = ipoly::content(num);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cn.get_mpz_t());
    }
    if (sgn(den.back()) < 0) g = -g;
    if (g != 1) {
        for (auto& c : num) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (auto& c : den) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

} // namespace

RatFun RatFun::from_coprime(IntPoly num, IntPoly den) {
    normalize_content(num, den);
    return RatFun(std::move(num), std::move(den), 0);
}

RatFun::RatFun(long c) : den_{BigInt(1)} {
    if (c != 0) num_.emplace_back(c);
}

RatFun::RatFun(const BigRational& c) : den_{BigInt(1)} {
    if (sgn(c) != 0) {
        num_.push_back(c.get_num());
        den_[0] = c.get_den();
    }
}

RatFun::RatFun(const UniPoly& p) : den_{BigInt(1)} {
    if (p.is_zero()) return;
    BigRational scale;
    IntPoly prim = ipoly::from_rational(p, scale);
    for (auto& c : prim) c *= scale.get_num();
    num_ = std::move(prim);
    den_[0] = scale.get_den();
}

RatFun RatFun::make(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw ZeroDivision("rational function with zero denominator");
    if (num.is_zero()) return RatFun();
    BigRational cn, cd;
    IntPoly pn = ipoly::from_rational(num, cn);
    IntPoly pd = ipoly::from_rational(den, cd);
    IntPoly g = ipoly::gcd(pn, pd);
    if (!ipoly::is_one(g)) {
        pn = ipoly::div_exact(pn, g);
        pd = ipoly::div_exact(pd, g);
    }
    BigRational r = cn / cd;
    for (auto& c : pn) c *= r.get_num();
    for (auto& c : pd) c *= r.get_den();
    return from_coprime(std::move(pn), std::move(pd));
}

RatFun RatFun::s() { return RatFun(IntPoly{BigInt(0), BigInt(1)}, IntPoly{BigInt(1)}, 0); }

UniPoly RatFun::as_polynomial() const {
    if (!is_polynomial()) throw InvalidInput("rational function is not a polynomial: " + to_string(*this));
    UniPoly p = UniPoly::from_int(num_);
    if (den_[0] != 1) p *= BigRational(BigInt(1), den_[0]);
    return p;
}

BigRational RatFun::eval(const BigRational& s0) const {
    BigRational d = denominator().eval(s0);
    if (sgn(d) == 0)
        throw PoleError("denominator of " + to_string(*this) + " vanishes at s = " + to_string(s0));
    return numerator().eval(s0) / d;
}

RatFun RatFun::operator-() const {
    IntPoly n = num_;
    for (auto& c : n) c = -c;
    return RatFun(std::move(n), den_, 0);
}

RatFun RatFun::inv() const {
    if (is_zero()) throw ZeroDivision("inverse of the zero rational function");
    return from_coprime(den_, num_);
}

RatFun operator*(const RatFun& f, const RatFun& g) {
    if (f.is_zero() || g.is_zero()) return RatFun();
    // a/b * c/d with gcd(a,b) = gcd(c,d) = 1: only cross cancellations remain.
    IntPoly a = f.num_, b = f.den_, c = g.num_, d = g.den_;
    IntPoly g1 = ipoly::gcd(a, d);
    if (!ipoly::is_one(g1)) {
        a = ipoly::div_exact(a, g1);
        d = ipoly::div_exact(d, g1);
    }
    IntPoly g2 = ipoly::gcd(c, b);
    if (!ipoly::is_one(g2)) {
        c = ipoly::div_exact(c, g2);
        b = ipoly::div_exact(b, g2);
    }
    return RatFun::from_coprime(ipoly::mul(a, c), ipoly::mul(b, d));
}

RatFun operator/(const RatFun& f, const RatFun& g) { return f * g.inv(); }

RatFun operator+(const RatFun& f, const RatFun& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.den_ == g.den_) {
        IntPoly num = ipoly::add(f.num_, g.num_);
        if (num.empty()) return RatFun();
        IntPoly den = f.den_;
        IntPoly h = ipoly::gcd(num, den);
        if (!ipoly::is_one(h)) {
            num = ipoly::div_exact(num, h);
            den = ipoly::div_exact(den, h);
        }
        return RatFun::from_coprime(std::move(num), std::move(den));
    }
    // With g = gcd(b, d), any common factor of the sum and b*d/g divides g.
    IntPoly gd = ipoly::gcd(f.den_, g.den_);
    IntPoly bq = ipoly::div_exact(f.den_, gd);
    IntPoly dq = ipoly::div_exact(g.den_, gd);
    IntPoly num = ipoly::add(ipoly::mul(f.num_, dq), ipoly::mul(g.num_, bq));
    if (num.empty()) return RatFun();
    IntPoly den = ipoly::mul(f.den_, dq);
    if (gd.size() > 1) {
        IntPoly h = ipoly::gcd(num, gd);
        if (!ipoly::is_one(h)) {
            num = ipoly::div_exact(num, h);
            den = ipoly::div_exact(den, h);
        }
    }
    return RatFun::from_coprime(std::move(num), std::move(den));
}

RatFun operator-(const RatFun& f, const RatFun& g) { return f + (-g); }

bool RatFun::is_canonical() const {
    if (den_.empty() || sgn(den_.back()) <= 0) return false;
    if (!num_.empty() && sgn(num_.back()) == 0) return false;
    if (num_.empty()) return ipoly::is_one(den_);
    BigInt g = ipoly::content(num_);
    BigInt h = ipoly::content(den_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    if (g != 1) return false;
    return ipoly::is_one(ipoly::gcd(num_, den_));
}

RatFun ratfun_make(const UniPoly& num, const UniPoly& den) { return RatFun::make(num, den); }

RatFun ratfun_arith(RatOp op, const RatFun& f, const RatFun& g) {
    switch (op) {
    case RatOp::add: return f + g;
    case RatOp::sub: return f - g;
    case RatOp::mul: return f * g;
    case RatOp::div: return f / g;
    case RatOp::neg: return -f;
    case RatOp::inv: return f.inv();
    }
    return {};
}

BigRational ratfun_eval(const RatFun& f, const BigRational& s0) { return f.eval(s0); }

// ---------------------------------------------------------------------------
// Text

std::string to_string(const BigRational& q) { return q.get_str(); }

namespace {

std::size_t term_count(const UniPoly& p) {
    return static_cast<std::size_t>(
        std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const BigRational& c) { return sgn(c) != 0; }));
}

// Single monomial with coefficient 1 ("s", "s^3") or a nonnegative integer constant.
bool is_plain_atom(const UniPoly& p) {
    if (term_count(p) != 1) return false;
    const BigRational& c = p.leading();
    if (p.degree() == 0) return sgn(c) > 0 && c.get_den() == 1;
    return c == 1;
}

} // namespace

std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const BigRational& c = p.coeffs()[j];
        if (sgn(c) == 0) continue;
        BigRational mag = abs(c);
        if (sgn(c) < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (j == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 's';
        if (j > 1) os << '^' << j;
    }
    return os.str();
}

std::string to_string(const RatFun& f) {
    UniPoly num = f.numerator();
    UniPoly den = f.denominator();
    if (den == UniPoly{1}) return to_string(num);
    std::string n = to_string(num);
    if (term_count(num) > 1) n = "(" + n + ")";
    std::string d = to_string(den);
    if (!is_plain_atom(den)) d = "(" + d + ")";
    return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << to_string(f); }

} // namespace wmp
