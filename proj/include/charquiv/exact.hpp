#pragma once

// Exact arithmetic layer: arbitrary-precision rationals (GMP), two-variable
// Laurent polynomials and reduced fractions thereof.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace cq {

using Int = mpz_class;
using Rat = mpq_class;

struct ZeroDenominator : std::runtime_error {
    ZeroDenominator() : std::runtime_error("ZeroDenominator") {}
};
struct NotPolynomial : std::runtime_error {
    NotPolynomial() : std::runtime_error("NotPolynomial") {}
};
struct OddParity : std::runtime_error {
    OddParity() : std::runtime_error("OddParity") {}
};

// Laurent polynomial in two variables with rational coefficients.
// Invariant: no zero coefficients are stored.
class LaurentPoly2 {
  public:
    using Exponents = std::pair<int, int>;  // (a, b) in x^a y^b
    using TermMap = std::map<Exponents, Rat>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit LaurentPoly2(long c) : LaurentPoly2(Rat(c)) {}
    static LaurentPoly2 monomial(const Rat& c, int a, int b) {
        LaurentPoly2 p;
        if (c != 0) p.terms_[{a, b}] = c;
        return p;
    }
    // Variable x resp. y.
    static LaurentPoly2 x(int e = 1) { return monomial(1, e, 0); }
    static LaurentPoly2 y(int e = 1) { return monomial(1, 0, e); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // True if a single term c * x^a y^b.
    bool is_monomial() const { return terms_.size() == 1; }
    // The constant term as a rational (zero if absent).
    Rat constant_term() const;

    void set_coeff(int a, int b, const Rat& c);
    Rat coeff(int a, int b) const;

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }

    int min_exp_x() const;
    int min_exp_y() const;
    int max_exp_x() const;
    int max_exp_y() const;

    // Multiply by x^a y^b.
    LaurentPoly2 shifted(int a, int b) const;
    // x -> x^d, y -> y^d on exponents (d may be negative, e.g. -1 inverts).
    LaurentPoly2 exponents_scaled(int d) const;
    // Independent scaling: x -> x^dx, y -> y^dy.
    LaurentPoly2 exponents_scaled_xy(int dx, int dy) const;
    // Partial evaluation x = v; the result lives in y alone.  Negative x
    // exponents require v != 0.
    LaurentPoly2 eval_x(const Rat& v) const;
    LaurentPoly2 eval_y(const Rat& v) const;
    // Swap the two variables.
    LaurentPoly2 swapped() const;
    // (x, y) -> (-x, -y).
    LaurentPoly2 negated_vars() const;

    Rat eval(const Rat& xv, const Rat& yv) const;

    // Exact polynomial division (throws NotPolynomial if not divisible).
    // Both operands must be genuine polynomials (no negative exponents).
    static LaurentPoly2 div_exact(const LaurentPoly2& a, const LaurentPoly2& b);
    // Gcd of genuine polynomials, normalized primitive over Z with positive
    // leading (lex-max) coefficient.
    static LaurentPoly2 gcd(const LaurentPoly2& a, const LaurentPoly2& b);

    // Textual form, sorted by descending lex exponents; stable across versions.
    std::string str(const std::string& xname, const std::string& yname) const;

  private:
    TermMap terms_;
};

// A reduced fraction of Laurent polynomials, canonically normalized:
// the denominator is a genuine polynomial with integer coprime coefficients,
// positive leading (lex-max) coefficient, not divisible by x or y, and
// coprime to the polynomial part of the numerator.  Equality of values is
// equality of representations.
class RatFun {
  public:
    RatFun() : num_(), den_(Rat(1)) {}
    RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}
    RatFun(const LaurentPoly2& p) : num_(p), den_(Rat(1)) {}
    RatFun(LaurentPoly2 num, LaurentPoly2 den);

    const LaurentPoly2& num() const { return num_; }
    const LaurentPoly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    RatFun inverse() const;
    RatFun pow(int e) const;

    // Numerator when the denominator is a unit; throws NotPolynomial.
    LaurentPoly2 as_polynomial() const;
    bool is_polynomial() const;

    // Exponent scaling in both variables and substitution into monomials.
    RatFun exponents_scaled(int d) const;
    RatFun exponents_scaled_xy(int dx, int dy) const;
    RatFun swapped() const;
    RatFun negated_vars() const;

    // Substitute x -> u^ex, y -> u^ey (any nonzero integers) and return the
    // resulting single-variable rational function, living in the first
    // variable of the output.
    RatFun to_univariate(int ex, int ey) const;

    Rat eval(const Rat& xv, const Rat& yv) const;

    // Substitute x -> u^ex, y -> u^ey (ex, ey in {1,-1}) with u^2 = q; the
    // result is a Laurent polynomial in q (first variable of the output).
    // Throws OddParity when an odd power of u survives, NotPolynomial when
    // the substituted denominator does not divide the numerator.
    LaurentPoly2 substitute_halfpowers(int ex, int ey) const;

    std::string str(const std::string& xname, const std::string& yname) const;

  private:
    void normalize();
    // Clears monomial and scalar factors from the denominator without a gcd
    // step; used where the fraction is already known to be reduced.
    void normalize_units();
    LaurentPoly2 num_, den_;
};

}  // namespace cq
