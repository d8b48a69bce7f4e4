#ifndef QTRACE_RING_HPP
#define QTRACE_RING_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "qtrace/errors.hpp"

namespace qtrace {

// Exact rational scalar. All coefficient arithmetic is exact; no floating
// point appears anywhere in the kernel.
using Rational = mpq_class;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

/*
  HalfLaurent is a Laurent polynomial in v = q^{1/2} over the rationals.
  Exponents count powers of v, so q^k lives at exponent 2k and q^{-l(w)/2}
  at exponent -l(w). The zero polynomial is the empty map; no stored
  coefficient is ever zero.
*/
class HalfLaurent {
public:
    HalfLaurent() = default;
    explicit HalfLaurent(const Rational& c);
    explicit HalfLaurent(long c);

    static HalfLaurent zero() { return HalfLaurent(); }
    static HalfLaurent one() { return HalfLaurent(1); }
    static HalfLaurent v() { return v_power(1); }
    static HalfLaurent q() { return v_power(2); }
    static HalfLaurent v_power(long e);
    static HalfLaurent q_power(long e) { return v_power(2 * e); }
    static HalfLaurent term(const Rational& c, long v_exp);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // Valuation and degree in v; both require a nonzero polynomial.
    long min_exp() const;
    long max_exp() const;
    Rational coeff(long v_exp) const;
    const std::map<long, Rational>& terms() const { return coeffs_; }
    void add_term(long v_exp, const Rational& c);

    HalfLaurent operator-() const;
    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    HalfLaurent& operator*=(const HalfLaurent& o);
    friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
    friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
    friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
    friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HalfLaurent& a, const HalfLaurent& b) { return !(a == b); }

    HalfLaurent times(const Rational& c) const;
    // Multiply by v^e.
    HalfLaurent shifted(long v_exp) const;
    // Substitute v -> v^k (k >= 1); on integer powers of q this is q -> q^k.
    HalfLaurent scaled_exponents(long k) const;
    // Value at v = 1 (sum of coefficients).
    Rational eval_one() const;
    // True when no negative exponent occurs: an ordinary polynomial in v.
    bool is_ordinary() const { return is_zero() || min_exp() >= 0; }

    // Text form uses q with integer or half-integer exponents, e.g.
    // "q^{2} - 2*q + 1" or "q^{-1/2}". parse accepts the same grammar.
    std::string to_string() const;
    static HalfLaurent parse(const std::string& text);

private:
    std::map<long, Rational> coeffs_;
};

// Ordinary-polynomial helpers (operands must satisfy is_ordinary()).
// Quotient and remainder of long division by a nonzero divisor.
HalfLaurent poly_divmod(const HalfLaurent& a, const HalfLaurent& b, HalfLaurent& rem);
// Monic gcd by the Euclidean algorithm over the rationals.
HalfLaurent poly_gcd(HalfLaurent a, HalfLaurent b);
HalfLaurent poly_exact_div(const HalfLaurent& a, const HalfLaurent& b);
HalfLaurent poly_lcm(const HalfLaurent& a, const HalfLaurent& b);

/*
  RatFunc is a quotient of HalfLaurent values kept in canonical reduced
  form: the denominator is an ordinary polynomial in v, monic, with nonzero
  constant term (every unit v^k is pushed into the numerator), and shares
  no nonunit factor with the numerator. Equality is structural.
*/
class RatFunc {
public:
    RatFunc() : num_(), den_(HalfLaurent::one()) {}
    RatFunc(const HalfLaurent& num) : num_(num), den_(HalfLaurent::one()) {}
    RatFunc(const HalfLaurent& num, const HalfLaurent& den);
    explicit RatFunc(const Rational& c) : RatFunc(HalfLaurent(c)) {}
    explicit RatFunc(long c) : RatFunc(HalfLaurent(c)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc q() { return RatFunc(HalfLaurent::q()); }
    static RatFunc v() { return RatFunc(HalfLaurent::v()); }
    static RatFunc q_power(long e) { return RatFunc(HalfLaurent::q_power(e)); }
    static RatFunc v_power(long e) { return RatFunc(HalfLaurent::v_power(e)); }

    const HalfLaurent& num() const { return num_; }
    const HalfLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    RatFunc times(const Rational& c) const;
    // Integer power; negative k inverts (throws division_by_zero on zero).
    RatFunc pow(long k) const;
    RatFunc inverse() const;

    std::string to_string() const;
    static RatFunc parse(const std::string& text);

private:
    HalfLaurent num_;
    HalfLaurent den_;
    void canonicalize();
};

// Substitute q -> q^k throughout (k >= 1).
RatFunc compose_power(const RatFunc& f, long k);
// Value at q^{1/2} = 1; throws pole_error when the denominator vanishes.
Rational specialize_q1(const RatFunc& f);

} // namespace qtrace

#endif
