#include <doctest.h>

#include <random>

#include "qtrace/ring.hpp"

using namespace qtrace;

namespace {

HalfLaurent random_poly(std::mt19937_64& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> exp(-6, 6);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    HalfLaurent f;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        f.add_term(exp(rng), c);
    }
    return f;
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
    HalfLaurent d;
    do {
        d = random_poly(rng, 3);
    } while (d.is_zero());
    return RatFunc(random_poly(rng), d);
}

const HalfLaurent V = HalfLaurent::v();
const HalfLaurent Q = HalfLaurent::q();

} // namespace

TEST_CASE("half-integer Laurent arithmetic") {
    HalfLaurent vinv = HalfLaurent::v_power(-1);
    CHECK((V - vinv) * (V + vinv) == HalfLaurent::v_power(2) - HalfLaurent::v_power(-2));
    CHECK(V * vinv == HalfLaurent::one());
    CHECK(Q == V * V);

    HalfLaurent f = Q * Q - HalfLaurent::one();
    CHECK(f.coeff(4) == 1);
    CHECK(f.coeff(0) == -1);
    CHECK(f.coeff(2) == 0);
    CHECK(f.min_exp() == 0);
    CHECK(f.max_exp() == 4);
    CHECK((f - f).is_zero());
    CHECK_THROWS_AS((f - f).min_exp(), invariant_violation);
}

TEST_CASE("rational function canonical form") {
    RatFunc q = RatFunc::q();
    RatFunc one = RatFunc::one();

    RatFunc lhs = (q * q - one) / (q - one);
    CHECK(lhs == q + one);
    CHECK(lhs.is_polynomial());
    CHECK(lhs.to_string() == "q + 1");

    RatFunc inv = one / (q - one);
    CHECK(inv.den().to_string() == "q - 1");
    CHECK(inv.num().is_one());

    // v-units are never left in the denominator.
    RatFunc u = one / RatFunc::v_power(3);
    CHECK(u.is_polynomial());
    CHECK(u.num() == HalfLaurent::v_power(-3));

    // Denominator is monic with nonzero constant term.
    RatFunc w = one / (RatFunc(HalfLaurent(2)) * q * (q - one));
    CHECK(w.den().coeff(w.den().max_exp()) == 1);
    CHECK(w.den().coeff(0) != 0);
    CHECK(specialize_q1(w * (q - one)) == Rational(1, 2));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 60; ++i) {
        RatFunc a = random_ratfunc(rng);
        RatFunc b = random_ratfunc(rng);
        RatFunc c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == RatFunc::zero());
        if (!a.is_zero()) {
            CHECK(a / a == RatFunc::one());
            CHECK(a * a.inverse() == RatFunc::one());
        }
        // Canonicalization is idempotent: rebuilding from num/den is identity.
        CHECK(RatFunc(a.num(), a.den()) == a);
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(RatFunc::one() / RatFunc::zero(), division_by_zero);
    CHECK_THROWS_AS(RatFunc::zero().inverse(), division_by_zero);
    CHECK_THROWS_AS(RatFunc(HalfLaurent::one(), HalfLaurent::zero()), division_by_zero);
}

TEST_CASE("compose_power substitutes q -> q^k") {
    RatFunc q = RatFunc::q();
    RatFunc one = RatFunc::one();
    CHECK(compose_power(one / (q - one), 2) == one / (q * q - one));
    CHECK_THROWS_AS(compose_power(q, 0), input_error);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 25; ++i) {
        RatFunc f = random_ratfunc(rng);
        for (long a = 1; a <= 4; ++a)
            for (long b = 1; b <= 4; ++b)
                CHECK(compose_power(compose_power(f, a), b) == compose_power(f, a * b));
    }
}

TEST_CASE("specialization at q = 1") {
    RatFunc q = RatFunc::q();
    CHECK(specialize_q1(q * q + q) == 2);
    CHECK(specialize_q1((q * q - RatFunc::one()) / (q - RatFunc::one())) == 2);
    CHECK_THROWS_AS(specialize_q1(RatFunc::one() / (q - RatFunc::one())), pole_error);
}

TEST_CASE("pow") {
    RatFunc q = RatFunc::q();
    CHECK(q.pow(3) == RatFunc::q_power(3));
    CHECK(q.pow(0) == RatFunc::one());
    CHECK(q.pow(-2) == RatFunc::q_power(-2));
    RatFunc f = (q + RatFunc::one()) / (q - RatFunc::one());
    CHECK(f.pow(2) * f.pow(-2) == RatFunc::one());
}

TEST_CASE("text round trip") {
    CHECK(HalfLaurent::parse("q^{2} - 2*q + 1") == (Q - HalfLaurent::one()) * (Q - HalfLaurent::one()));
    CHECK(HalfLaurent::parse("q^{-1/2}") == HalfLaurent::v_power(-1));
    CHECK(HalfLaurent::parse("3/2*q^{3/2}") == HalfLaurent::term(Rational(3, 2), 3));
    CHECK(HalfLaurent::parse("0").is_zero());
    CHECK(HalfLaurent::parse("-q + 5") == HalfLaurent(5) - Q);
    CHECK_THROWS_AS(HalfLaurent::parse("q^{1/3}"), input_error);
    CHECK_THROWS_AS(HalfLaurent::parse("banana"), input_error);
    CHECK_THROWS_AS(HalfLaurent::parse(""), input_error);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        HalfLaurent f = random_poly(rng, 6);
        CHECK(HalfLaurent::parse(f.to_string()) == f);
        RatFunc g = random_ratfunc(rng);
        CHECK(RatFunc::parse(g.to_string()) == g);
    }
}

TEST_CASE("rendering conventions") {
    CHECK(HalfLaurent::zero().to_string() == "0");
    CHECK(Q.to_string() == "q");
    CHECK((Q * Q).to_string() == "q^{2}");
    CHECK(HalfLaurent::v_power(-1).to_string() == "q^{-1/2}");
    CHECK((Q - HalfLaurent::one()).to_string() == "q - 1");
    CHECK(HalfLaurent::v_power(2).times(Rational(-1)).to_string() == "-q");
    CHECK((HalfLaurent::one() + HalfLaurent::one()).to_string() == "2");
    RatFunc r(HalfLaurent::one(), Q - HalfLaurent::one());
    CHECK(r.to_string() == "(1)/(q - 1)");
}

TEST_CASE("ordinary polynomial helpers") {
    HalfLaurent a = (Q - HalfLaurent::one()) * (Q + HalfLaurent::one()) * Q;
    HalfLaurent b = (Q - HalfLaurent::one()) * Q;
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_exact_div(a, b) == Q + HalfLaurent::one());
    CHECK(poly_lcm(a, b) == a);
    HalfLaurent rem;
    HalfLaurent quot = poly_divmod(a + HalfLaurent(7), b, rem);
    CHECK(quot * b + rem == a + HalfLaurent(7));
    CHECK(rem == HalfLaurent(7));
    CHECK_THROWS_AS(poly_divmod(a, HalfLaurent::zero(), rem), division_by_zero);
}
