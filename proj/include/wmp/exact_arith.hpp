#pragma once

// Exact scalar arithmetic: big rationals, univariate polynomials over Q and
// canonical rational functions in one indeterminate s.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace wmp {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Integer-coefficient polynomial, index j holds the coefficient of s^j, no trailing zeros.
using IntPoly = std::vector<BigInt>;

/// Polynomial in s with rational coefficients. Index j holds the coefficient of s^j.
/// Never stores trailing zeros; the zero polynomial has no coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const BigRational& c);
    static UniPoly monomial(const BigRational& c, std::size_t power);
    static UniPoly from_int(const IntPoly& p);

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of s^j; zero beyond the degree.
    BigRational coeff(std::size_t j) const;
    const BigRational& leading() const { return coeffs_.back(); }

    BigRational eval(const BigRational& s0) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const BigRational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const BigRational& c) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<BigRational> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Drops trailing zero coefficients.
UniPoly poly_normalize(std::vector<BigRational> coeffs);
UniPoly poly_arith(PolyOp op, const UniPoly& p, const UniPoly& q);

/// Quotient and remainder of division by a nonzero polynomial.
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& p, const UniPoly& q);

/// GCD with primitive integer coefficients and positive leading coefficient.
/// gcd(p, 0) is the normalized p. Throws InvalidInput when both are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

/// Positive rational c such that p / c has coprime integer coefficients (1 for zero).
BigRational poly_content(const UniPoly& p);

namespace ipoly {

// Integer polynomial kernels shared by the rational-function and
// matrix-fraction code. All results are trimmed.

void trim(IntPoly& p);
long degree(const IntPoly& p);
BigInt content(const IntPoly& p);
/// Divides out the content and makes the leading coefficient positive.
IntPoly primitive(IntPoly p);
/// Writes p = scale * result with result integer-primitive with positive leading
/// coefficient; scale carries the sign. Zero p gives an empty result and scale 0.
IntPoly from_rational(const UniPoly& p, BigRational& scale);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
/// Exact division; the divisor must divide the dividend over Z[s].
IntPoly div_exact(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient; both arguments nonzero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
bool is_one(const IntPoly& p);

} // namespace ipoly

/// Element of Q(s) kept in canonical form: coprime numerator and denominator with
/// integer coefficients whose joint content is 1, denominator leading coefficient
/// positive, zero as 0/1.
class RatFun {
public:
    RatFun() : num_{}, den_{BigInt(1)} {}
    RatFun(long c);
    RatFun(const BigRational& c);
    RatFun(const UniPoly& p);

    /// Canonical fraction num/den. Throws ZeroDivision if den is zero.
    static RatFun make(const UniPoly& num, const UniPoly& den);
    static RatFun s();

    UniPoly numerator() const { return UniPoly::from_int(num_); }
    UniPoly denominator() const { return UniPoly::from_int(den_); }
    const IntPoly& int_num() const { return num_; }
    const IntPoly& int_den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return ipoly::is_one(num_) && ipoly::is_one(den_); }
    /// True when the denominator is a constant.
    bool is_polynomial() const { return den_.size() == 1; }
    /// Value as a polynomial; requires is_polynomial().
    UniPoly as_polynomial() const;

    /// Throws PoleError when the denominator vanishes at s0.
    BigRational eval(const BigRational& s0) const;

    RatFun operator-() const;
    RatFun inv() const;

    friend RatFun operator+(const RatFun& f, const RatFun& g);
    friend RatFun operator-(const RatFun& f, const RatFun& g);
    friend RatFun operator*(const RatFun& f, const RatFun& g);
    friend RatFun operator/(const RatFun& f, const RatFun& g);
    RatFun& operator+=(const RatFun& g) { return *this = *this + g; }
    RatFun& operator-=(const RatFun& g) { return *this = *this - g; }
    RatFun& operator*=(const RatFun& g) { return *this = *this * g; }

    friend bool operator==(const RatFun& f, const RatFun& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

    /// Re-checks every canonical-form invariant.
    bool is_canonical() const;

private:
    RatFun(IntPoly num, IntPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    static RatFun from_coprime(IntPoly num, IntPoly den);

    IntPoly num_;
    IntPoly den_;
};

enum class RatOp { add, sub, mul, div, neg, inv };

RatFun ratfun_make(const UniPoly& num, const UniPoly& den);
/// For neg and inv the second operand is ignored.
RatFun ratfun_arith(RatOp op, const RatFun& f, const RatFun& g = RatFun());
BigRational ratfun_eval(const RatFun& f, const BigRational& s0);

/// Expression text accepted back by the entry parser, e.g. "-2+s^4", "(1+s)/(2+s^2)".
std::string to_string(const UniPoly& p);
std::string to_string(const RatFun& f);
std::string to_string(const BigRational& q);

std::ostream& operator<<(std::ostream& os, const UniPoly& p);
std::ostream& operator<<(std::ostream& os, const RatFun& f);

} // namespace wmp
