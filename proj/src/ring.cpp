#include "qtrace/ring.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace qtrace {

std::string rational_to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_str();
}

Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s, 10);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw input_error("bad rational literal: \"" + s + "\"");
    }
}

HalfLaurent::HalfLaurent(const Rational& c) {
    add_term(0, c);
}

HalfLaurent::HalfLaurent(long c) : HalfLaurent(Rational(c)) {}

HalfLaurent HalfLaurent::v_power(long e) {
    HalfLaurent f;
    f.add_term(e, Rational(1));
    return f;
}

HalfLaurent HalfLaurent::term(const Rational& c, long v_exp) {
    HalfLaurent f;
    f.add_term(v_exp, c);
    return f;
}

bool HalfLaurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second == 1;
}

bool HalfLaurent::is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

long HalfLaurent::min_exp() const {
    if (coeffs_.empty()) throw invariant_violation("min_exp of zero polynomial");
    return coeffs_.begin()->first;
}

long HalfLaurent::max_exp() const {
    if (coeffs_.empty()) throw invariant_violation("max_exp of zero polynomial");
    return coeffs_.rbegin()->first;
}

Rational HalfLaurent::coeff(long v_exp) const {
    auto it = coeffs_.find(v_exp);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void HalfLaurent::add_term(long v_exp, const Rational& c) {
    if (c == 0) return;
    auto it = coeffs_.find(v_exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(v_exp, c);
        return;
    }
    Rational s = it->second + c;
    if (s == 0) {
        coeffs_.erase(it);
    } else {
        it->second = s;
    }
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r;
    for (const auto& [e, c] : coeffs_) {
        Rational n = -c;
        r.coeffs_.emplace(e, n);
    }
    return r;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Rational n = -c;
        add_term(e, n);
    }
    return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r;
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            Rational p = ca * cb;
            r.add_term(ea + eb, p);
        }
    }
    return r;
}

HalfLaurent& HalfLaurent::operator*=(const HalfLaurent& o) {
    *this = *this * o;
    return *this;
}

HalfLaurent HalfLaurent::times(const Rational& c) const {
    HalfLaurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : coeffs_) {
        Rational p = k * c;
        r.coeffs_.emplace(e, p);
    }
    return r;
}

HalfLaurent HalfLaurent::shifted(long v_exp) const {
    HalfLaurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + v_exp, c);
    return r;
}

HalfLaurent HalfLaurent::scaled_exponents(long k) const {
    if (k == 0) throw input_error("scaled_exponents requires a nonzero scale");
    HalfLaurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e * k, c);
    return r;
}

Rational HalfLaurent::eval_one() const {
    Rational s(0);
    for (const auto& [e, c] : coeffs_) s += c;
    s.canonicalize();
    return s;
}

namespace {

// Renders one monomial c*q^{e/2} (v-exponent e) without a leading sign.
std::string term_to_string(long v_exp, const Rational& mag) {
    std::string q_part;
    if (v_exp != 0) {
        if (v_exp == 2) {
            q_part = "q";
        } else if (v_exp % 2 == 0) {
            q_part = "q^{" + std::to_string(v_exp / 2) + "}";
        } else {
            q_part = "q^{" + std::to_string(v_exp) + "/2}";
        }
    }
    if (v_exp == 0) return rational_to_string(mag);
    if (mag == 1) return q_part;
    return rational_to_string(mag) + "*" + q_part;
}

} // namespace

std::string HalfLaurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        bool neg = it->second < 0;
        Rational mag = neg ? Rational(-it->second) : it->second;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_to_string(it->first, mag);
        first = false;
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
    [[noreturn]] void fail(const std::string& why) {
        throw input_error("parse error at offset " + std::to_string(pos) + ": " + why +
                          " in \"" + s + "\"");
    }
    long read_long() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected integer");
        long x = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            x = x * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -x : x;
    }
};

// Exponent inside q^{...}: an integer or a half-integer written a/2.
// Returns the exponent in v units (doubled).
long read_q_exponent(Cursor& c) {
    long a = c.read_long();
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        long b = c.read_long();
        if (b != 2 || a % 2 == 0) c.fail("exponent denominator must be 2 with odd numerator");
        return a;
    }
    return 2 * a;
}

} // namespace

HalfLaurent HalfLaurent::parse(const std::string& text) {
    Cursor c{text};
    HalfLaurent out;
    bool first = true;
    if (c.done()) c.fail("empty polynomial");
    while (!c.done()) {
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            sign = c.peek() == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        c.skip_ws();
        Rational coef(1);
        bool have_coef = false;
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
            long numer = c.read_long();
            long denom = 1;
            c.skip_ws();
            if (c.pos < c.s.size() && c.peek() == '/') {
                // Lookahead: "1/2*q" is a coefficient, but a lone "q^{1/2}"
                // never reaches here, so '/' after digits is always rational.
                ++c.pos;
                denom = c.read_long();
                if (denom == 0) c.fail("zero denominator");
            }
            coef = Rational(numer, denom);
            coef.canonicalize();
            have_coef = true;
            c.skip_ws();
            if (c.pos < c.s.size() && c.peek() == '*') {
                ++c.pos;
                c.skip_ws();
            }
        }
        long v_exp = 0;
        if (c.pos < c.s.size() && c.peek() == 'q') {
            ++c.pos;
            v_exp = 2;
            if (c.pos < c.s.size() && c.s[c.pos] == '^') {
                ++c.pos;
                if (c.pos >= c.s.size() || c.s[c.pos] != '{') c.fail("expected '{' after '^'");
                ++c.pos;
                v_exp = read_q_exponent(c);
                c.skip_ws();
                if (c.pos >= c.s.size() || c.s[c.pos] != '}') c.fail("expected '}'");
                ++c.pos;
            }
        } else if (!have_coef) {
            c.fail("expected coefficient or q");
        }
        Rational signed_coef = sign < 0 ? Rational(-coef) : coef;
        out.add_term(v_exp, signed_coef);
        first = false;
    }
    return out;
}

HalfLaurent poly_divmod(const HalfLaurent& a, const HalfLaurent& b, HalfLaurent& rem) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    if (!a.is_ordinary() || !b.is_ordinary())
        throw invariant_violation("poly_divmod requires ordinary polynomials");
    HalfLaurent quot;
    rem = a;
    const long db = b.max_exp();
    const Rational lead_b = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        long e = rem.max_exp() - db;
        Rational c = rem.coeff(rem.max_exp()) / lead_b;
        c.canonicalize();
        HalfLaurent t = HalfLaurent::term(c, e);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

HalfLaurent poly_gcd(HalfLaurent a, HalfLaurent b) {
    while (!b.is_zero()) {
        HalfLaurent rem;
        poly_divmod(a, b, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    if (a.is_zero()) return a;
    Rational inv_lead = 1 / a.coeff(a.max_exp());
    inv_lead.canonicalize();
    return a.times(inv_lead);
}

HalfLaurent poly_exact_div(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent rem;
    HalfLaurent q = poly_divmod(a, b, rem);
    if (!rem.is_zero()) throw invariant_violation("poly_exact_div: division is not exact");
    return q;
}

HalfLaurent poly_lcm(const HalfLaurent& a, const HalfLaurent& b) {
    if (a.is_zero() || b.is_zero()) return HalfLaurent::zero();
    HalfLaurent g = poly_gcd(a, b);
    HalfLaurent l = poly_exact_div(a * b, g);
    Rational inv_lead = 1 / l.coeff(l.max_exp());
    inv_lead.canonicalize();
    return l.times(inv_lead);
}

RatFunc::RatFunc(const HalfLaurent& num, const HalfLaurent& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw division_by_zero("rational function with zero denominator");
    canonicalize();
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = HalfLaurent::one();
        return;
    }
    // Shift the v-unit out of the denominator so it has a nonzero constant
    // term; the shift lands in the numerator (possibly as negative powers).
    long m = den_.min_exp();
    if (m != 0) {
        den_ = den_.shifted(-m);
        num_ = num_.shifted(-m);
    }
    long j = num_.min_exp();
    HalfLaurent num_ord = j == 0 ? num_ : num_.shifted(-j);
    HalfLaurent g = poly_gcd(num_ord, den_);
    if (!g.is_one()) {
        num_ord = poly_exact_div(num_ord, g);
        den_ = poly_exact_div(den_, g);
    }
    Rational lead = den_.coeff(den_.max_exp());
    if (lead != 1) {
        Rational inv = 1 / lead;
        inv.canonicalize();
        den_ = den_.times(inv);
        num_ord = num_ord.times(inv);
    }
    num_ = j == 0 ? num_ord : num_ord.shifted(j);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw division_by_zero("division of rational functions by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::times(const Rational& c) const {
    if (c == 0) return RatFunc();
    RatFunc r;
    r.num_ = num_.times(c);
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RatFunc acc = RatFunc::one();
    RatFunc base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(const std::string& text) {
    size_t split = text.find(")/(");
    if (text.size() >= 2 && text.front() == '(' && split != std::string::npos &&
        text.back() == ')') {
        std::string num_s = text.substr(1, split - 1);
        std::string den_s = text.substr(split + 3, text.size() - split - 4);
        return RatFunc(HalfLaurent::parse(num_s), HalfLaurent::parse(den_s));
    }
    return RatFunc(HalfLaurent::parse(text));
}

RatFunc compose_power(const RatFunc& f, long k) {
    if (k < 1) throw input_error("compose_power requires k >= 1");
    return RatFunc(f.num().scaled_exponents(k), f.den().scaled_exponents(k));
}

Rational specialize_q1(const RatFunc& f) {
    Rational d = f.den().eval_one();
    if (d == 0) throw pole_error("pole at q = 1");
    Rational n = f.num().eval_one();
    Rational r = n / d;
    r.canonicalize();
    return r;
}

} // namespace qtrace
