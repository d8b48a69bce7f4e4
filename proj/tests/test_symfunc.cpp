#include <doctest.h>

#include <random>

#include "qtrace/symfunc.hpp"

using namespace qtrace;

namespace {

SymFunc elem(Basis b, std::vector<int> parts) {
    return SymFunc::basis_element(b, Partition(std::move(parts)));
}

SymFunc in_m(const SymFunc& F) { return change_basis(F, Basis::m); }

// Standard Young tableaux count by corner-removal recursion (independent
// of the hook formula it cross-checks).
long count_syt(const Partition& lambda) {
    if (lambda.n() <= 1) return 1;
    long total = 0;
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        bool corner = (i + 1 == parts.size()) || parts[i] > parts[i + 1];
        if (!corner) continue;
        std::vector<int> smaller = parts;
        if (--smaller[i] == 0) smaller.erase(smaller.begin() + static_cast<long>(i));
        total += count_syt(Partition(std::move(smaller)));
    }
    return total;
}

SymFunc random_symfunc(Basis b, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(-3, 3);
    SymFunc F(b, n);
    for (const Partition& l : all_partitions(n)) {
        int c = pick(rng);
        int e = pick(rng);
        if (c == 0) continue;
        F.add_term(l, RatFunc(HalfLaurent::term(Rational(c), 2 * e) + HalfLaurent::one()));
    }
    return F;
}

} // namespace

TEST_CASE("basic transitions into the monomial basis") {
    SymFunc h2 = in_m(elem(Basis::h, {2}));
    CHECK(h2 == in_m(elem(Basis::m, {2})) + in_m(elem(Basis::m, {1, 1})));

    SymFunc p11 = in_m(elem(Basis::p, {1, 1}));
    SymFunc expect = elem(Basis::m, {2});
    expect.add_term(Partition({1, 1}), RatFunc(2));
    CHECK(p11 == expect);

    CHECK(in_m(elem(Basis::e, {2})) == elem(Basis::m, {1, 1}));
    CHECK(in_m(elem(Basis::p, {3}))== elem(Basis::m, {3}));
    CHECK(in_m(elem(Basis::e, {1, 1, 1})) == in_m(elem(Basis::h, {1, 1, 1})));

    // h_n = sum of all m_lambda
    for (int n = 1; n <= 5; ++n) {
        SymFunc hn = in_m(elem(Basis::h, {n}));
        for (const Partition& l : all_partitions(n)) CHECK(hn.coeff(l) == RatFunc::one());
    }
}

TEST_CASE("Schur functions") {
    CHECK(in_m(elem(Basis::s, {2, 1})) ==
          in_m(elem(Basis::m, {2, 1})) + elem(Basis::m, {1, 1, 1}).times(RatFunc(2)));
    for (int n = 1; n <= 5; ++n) {
        CHECK(in_m(SymFunc::basis_element(Basis::s, Partition({n}))) ==
              in_m(SymFunc::basis_element(Basis::h, Partition({n}))));
        std::vector<int> ones(static_cast<size_t>(n), 1);
        CHECK(in_m(SymFunc::basis_element(Basis::s, Partition(ones))) ==
              in_m(SymFunc::basis_element(Basis::e, Partition(ones).conjugate())));
    }
    // Kostka positivity and unitriangularity at n = 4
    for (const Partition& l : all_partitions(4)) {
        SymFunc sl = in_m(SymFunc::basis_element(Basis::s, l));
        CHECK(sl.coeff(l) == RatFunc::one());
        for (const auto& [mu, c] : sl.terms()) {
            CHECK(specialize_q1(c) > 0);
            CHECK(mu <= l); // dominance implies lex here at n=4
        }
    }
}

TEST_CASE("omega") {
    CHECK(omega(elem(Basis::p, {2})) == -elem(Basis::p, {2}));
    CHECK(omega(elem(Basis::p, {2, 1})) == -elem(Basis::p, {2, 1}));
    CHECK(omega(elem(Basis::p, {1, 1})) == elem(Basis::p, {1, 1}));
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> row{n};
        CHECK(in_m(omega(elem(Basis::e, row))) == in_m(elem(Basis::h, row)));
        CHECK(in_m(omega(elem(Basis::h, row))) == in_m(elem(Basis::e, row)));
    }
    // omega(s_lambda) = s_{lambda'}
    for (const Partition& l : all_partitions(5))
        CHECK(in_m(omega(SymFunc::basis_element(Basis::s, l))) ==
              in_m(SymFunc::basis_element(Basis::s, l.conjugate())));
    // f_lambda = omega(m_lambda) by construction
    for (const Partition& l : all_partitions(4))
        CHECK(in_m(SymFunc::basis_element(Basis::f, l)) ==
              in_m(omega(SymFunc::basis_element(Basis::m, l))));
    // forgotten basis at n=2
    SymFunc f2 = in_m(elem(Basis::f, {2}));
    CHECK(f2 == -elem(Basis::m, {2}));
    CHECK(in_m(elem(Basis::f, {1, 1})) == in_m(elem(Basis::m, {2})) + elem(Basis::m, {1, 1}));

    std::mt19937_64 rng(313);
    for (int n = 1; n <= 5; ++n) {
        SymFunc F = random_symfunc(Basis::s, n, rng);
        CHECK(omega(omega(F)) == F);
    }
}

TEST_CASE("plethystic alphabet scaling") {
    RatFunc q = RatFunc::q();
    RatFunc one = RatFunc::one();
    SymFunc p2 = elem(Basis::p, {2});
    CHECK(plethysm_scale(p2, one / (q - one)) == p2.times(one / (q * q - one)));
    SymFunc p11 = elem(Basis::p, {1, 1});
    CHECK(plethysm_scale(p11, q - one) == p11.times((q - one) * (q - one)));

    std::mt19937_64 rng(99);
    for (int n = 1; n <= 5; ++n) {
        SymFunc F = random_symfunc(Basis::m, n, rng);
        CHECK(plethysm_scale(F, one) == F);
    }

    // p_lambda scales by prod_i compose_power(s, lambda_i)
    RatFunc s = (q + one) / (q * q - q + one);
    for (const Partition& l : all_partitions(5)) {
        RatFunc factor = one;
        for (int part : l.parts()) factor *= compose_power(s, part);
        CHECK(plethysm_scale(SymFunc::basis_element(Basis::p, l), s) ==
              SymFunc::basis_element(Basis::p, l).times(factor));
    }

    // inverse alphabets cancel
    SymFunc F = random_symfunc(Basis::h, 4, rng);
    SymFunc G = plethysm_scale(F, q - one);
    CHECK(plethysm_scale(G, one / (q - one)) == F);
}

TEST_CASE("round trips between all bases") {
    std::mt19937_64 rng(2718);
    const Basis all[] = {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s, Basis::f};
    for (int n = 1; n <= 6; ++n) {
        SymFunc F = random_symfunc(Basis::m, n, rng);
        for (Basis b1 : all)
            for (Basis b2 : all) {
                SymFunc G = change_basis(F, b1);
                CHECK(change_basis(change_basis(G, b2), b1) == G);
            }
    }
}

TEST_CASE("linearity of change_basis") {
    std::mt19937_64 rng(555);
    RatFunc a(HalfLaurent::q() + HalfLaurent::one());
    SymFunc F = random_symfunc(Basis::p, 4, rng);
    SymFunc G = random_symfunc(Basis::p, 4, rng);
    CHECK(change_basis(F + G, Basis::s) ==
          change_basis(F, Basis::s) + change_basis(G, Basis::s));
    CHECK(change_basis(F.times(a), Basis::e) == change_basis(F, Basis::e).times(a));
}

TEST_CASE("hook lengths against SYT enumeration") {
    const long fact[] = {1, 1, 2, 6, 24, 120, 720};
    for (int n = 1; n <= 6; ++n)
        for (const Partition& l : all_partitions(n)) {
            long prod = 1;
            for (int h : l.hooks()) prod *= h;
            CHECK(fact[n] % prod == 0);
            CHECK(fact[n] / prod == count_syt(l));
        }
}

TEST_CASE("partition statistics") {
    PartitionStats s21 = partition_stats(Partition({2, 1}));
    CHECK(s21.z == 2);
    CHECK(s21.sign == -1);
    CHECK(s21.b == 1);
    std::vector<int> hooks = s21.hooks;
    std::sort(hooks.begin(), hooks.end(), std::greater<int>());
    CHECK(hooks == std::vector<int>{3, 1, 1});
    CHECK(s21.conjugate == Partition({2, 1}));

    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<size_t>(n), 1);
        PartitionStats st = partition_stats(Partition(ones));
        CHECK(st.b == static_cast<long>(n) * (n - 1) / 2);
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        CHECK(st.z == fact);
    }

    PartitionStats s22 = partition_stats(Partition({2, 2}));
    CHECK(s22.b == 2);
    std::vector<int> h22 = s22.hooks;
    std::sort(h22.begin(), h22.end(), std::greater<int>());
    CHECK(h22 == std::vector<int>{3, 2, 2, 1});
}

TEST_CASE("JSON and text rendering") {
    SymFunc F(Basis::m, 3);
    F.add_term(Partition({2, 1}), RatFunc(HalfLaurent::q() + HalfLaurent::one()));
    F.add_term(Partition({3}), RatFunc::one());
    auto j = F.to_json();
    CHECK(j["basis"] == "m");
    CHECK(j["n"] == 3);
    CHECK(j["terms"]["[2,1]"] == "q + 1");
    CHECK(SymFunc::from_json(j) == F);
    CHECK(F.to_string() == "m[3] + (q + 1)*m[2,1]");
    CHECK(SymFunc(Basis::p, 2).to_string() == "0");

    std::mt19937_64 rng(31337);
    for (int n = 1; n <= 5; ++n) {
        SymFunc G = random_symfunc(Basis::s, n, rng);
        CHECK(SymFunc::from_json(G.to_json()) == G);
    }
    CHECK_THROWS_AS(parse_basis("x"), input_error);
    CHECK_THROWS_AS(SymFunc(Basis::m, 3).add_term(Partition({2}), RatFunc::one()),
                    size_mismatch);
}
