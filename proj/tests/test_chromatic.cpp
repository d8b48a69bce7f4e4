#include <doctest.h>

#include "qtrace/chromatic.hpp"
#include "qtrace/traces.hpp"

using namespace qtrace;

namespace {

SymFunc m_term(int n, const std::vector<int>& la, const RatFunc& c) {
    SymFunc f(Basis::m, n);
    f.add_term(Partition(la), c);
    return f;
}

const RatFunc kQ = RatFunc::q();
const RatFunc kOne = RatFunc::one();

} // namespace

TEST_CASE("indifference graph constructor") {
    IndifferenceGraph path(3, {{1, 2}, {2, 3}});
    CHECK(path.n() == 3);
    CHECK(path.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(path.bound() == std::vector<int>{2, 3, 3});

    // normalization: order within a pair does not matter
    IndifferenceGraph swapped(3, {{3, 2}, {2, 1}});
    CHECK(swapped.edges() == path.edges());

    IndifferenceGraph empty(4, {});
    CHECK(empty.edges().empty());
    CHECK(empty.bound() == std::vector<int>{1, 2, 3, 4});

    IndifferenceGraph complete(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(complete.bound() == std::vector<int>{3, 3, 3});

    // {1,3} without {1,2}: the right neighborhood of 1 is not an interval
    CHECK_THROWS_AS(IndifferenceGraph(3, {{1, 3}, {2, 3}}), invariant_violation);
    // {1,2} without {2,3} but with {1,3}: bound would decrease
    CHECK_THROWS_AS(IndifferenceGraph(3, {{1, 2}, {1, 3}}), invariant_violation);
    // the star at 4 (inversion graph of 2341) is not an indifference graph
    CHECK_THROWS_AS(IndifferenceGraph(4, {{1, 4}, {2, 4}, {3, 4}}), invariant_violation);

    CHECK_THROWS_AS(IndifferenceGraph(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(IndifferenceGraph(3, {{0, 2}}), input_error);
    CHECK_THROWS_AS(IndifferenceGraph(3, {{1, 4}}), input_error);
    CHECK_THROWS_AS(IndifferenceGraph(3, {{1, 2}, {2, 1}}), input_error);
    CHECK_THROWS_AS(IndifferenceGraph(0, {}), input_error);
}

TEST_CASE("graph from permutation") {
    // no inversions -> empty graph
    CHECK(graph_from_permutation(Permutation::parse("123")).edges().empty());
    // single descent at the top
    CHECK(graph_from_permutation(Permutation::parse("21")).edges() ==
          std::vector<std::pair<int, int>>{{1, 2}});
    // prefix maxima of 231 are 2,3,3 -> path 1-2-3
    CHECK(graph_from_permutation(Permutation::parse("231")).bound() ==
          std::vector<int>{2, 3, 3});
    // longest element -> complete graph
    CHECK(graph_from_permutation(Permutation::parse("4321")).edges().size() == 6);
    // 2341 -> path, not the star
    CHECK(graph_from_permutation(Permutation::parse("2341")).edges() ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

    CHECK_THROWS_AS(graph_from_permutation(Permutation::parse("312")), input_error);
    CHECK_THROWS_AS(graph_from_permutation(Permutation::parse("3142")), input_error);
    CHECK_THROWS_AS(graph_from_permutation(Permutation::parse("45312")), input_error);

    // every 312-avoiding w yields a valid graph with length(w) edges
    for (int n = 2; n <= 6; ++n) {
        const Permutation pat = Permutation::parse("312");
        for (const auto& w : all_permutations(n)) {
            if (contains_pattern(w, pat)) continue;
            CHECK(graph_from_permutation(w).edges().size() ==
                  static_cast<size_t>(w.length()));
        }
    }
}

TEST_CASE("coloring sums on small graphs") {
    const IndifferenceGraph edge2(2, {{1, 2}});
    const IndifferenceGraph empty1(1, {});
    const IndifferenceGraph empty2(2, {});

    CHECK(chromatic_qsym(edge2, 2) == m_term(2, {1, 1}, kOne + kQ));
    CHECK(llt_poly(edge2, 2) ==
          m_term(2, {2}, kOne) + m_term(2, {1, 1}, kOne + kQ));

    CHECK(chromatic_qsym(empty1, 1) == m_term(1, {1}, kOne));
    CHECK(llt_poly(empty1, 1) == m_term(1, {1}, kOne));

    // empty graph: every coloring is proper and q never appears
    CHECK(chromatic_qsym(empty2, 2) ==
          m_term(2, {2}, kOne) + m_term(2, {1, 1}, RatFunc(HalfLaurent(2))));
    CHECK(llt_poly(empty2, 2) == chromatic_qsym(empty2, 2));
    CHECK(llt_poly(empty2, 5) == chromatic_qsym(empty2, 5));

    // triangle: no proper coloring can repeat a color; each unordered triple
    // of colors is properly ordered in 3! ways with ascent counts 0..3
    const IndifferenceGraph tri(3, {{1, 2}, {1, 3}, {2, 3}});
    SymFunc x3 = chromatic_qsym(tri, 3);
    CHECK(x3 == m_term(3, {1, 1, 1},
                       kOne + kQ + kQ + kQ * kQ + kQ * kQ + kQ * kQ * kQ));

    CHECK_THROWS_AS(chromatic_qsym(tri, 2), input_error);
    CHECK_THROWS_AS(llt_poly(tri, 2), input_error);
}

TEST_CASE("coloring sums match the trace expansions") {
    // X_{G(w),q} = sum over lambda of eps_q^lambda(C~_w) m_lambda, and the
    // LLT analog with the eps_LLT family, for every 312-avoiding w
    const Permutation pat = Permutation::parse("312");
    for (int n = 2; n <= 4; ++n) {
        TraceContext ctx(n);
        for (const auto& w : all_permutations(n)) {
            if (contains_pattern(w, pat)) continue;
            const HeckeElement cw = ctx.kl().c_tilde(w);
            const IndifferenceGraph g = graph_from_permutation(w);

            CHECK(chromatic_qsym(g, n) == ctx.y_q(cw));

            SymFunc llt_expected(Basis::m, n);
            for (const auto& la : ctx.partitions())
                llt_expected.add_term(la, ctx.eps_llt(la).eval(cw));
            CHECK(llt_poly(g, n) == llt_expected);
        }
    }
}

TEST_CASE("output independent of variable count") {
    const Permutation pat = Permutation::parse("312");
    for (int n = 2; n <= 4; ++n) {
        for (const auto& w : all_permutations(n)) {
            if (contains_pattern(w, pat)) continue;
            const IndifferenceGraph g = graph_from_permutation(w);
            CHECK(chromatic_qsym(g, n) == chromatic_qsym(g, n + 1));
            CHECK(llt_poly(g, n) == llt_poly(g, n + 1));
        }
    }
}

TEST_CASE("plethystic relation") {
    CHECK(verify_plethystic_relation(Permutation::parse("1"), 1));
    CHECK(verify_plethystic_relation(Permutation::parse("21"), 2));

    // spot check the n=2 computation in the p-basis: LLT = m_2 + (1+q)m_11
    // rewrites as ((1+q)/2)p_11 + ((1-q)/2)p_2; scaling p_k by (q^k - 1) and
    // dividing by (q-1)^2 leaves ((1+q)/2)(p_11 - p_2) = (1+q)m_11 = X
    const IndifferenceGraph edge2(2, {{1, 2}});
    const RatFunc qm1 = kQ - kOne;
    SymFunc lhs = change_basis(chromatic_qsym(edge2, 2), Basis::p);
    SymFunc rhs = plethysm_scale(change_basis(llt_poly(edge2, 2), Basis::p), qm1)
                      .times(qm1.pow(2).inverse());
    CHECK(lhs == rhs);

    const Permutation pat = Permutation::parse("312");
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_permutations(n)) {
            if (contains_pattern(w, pat)) continue;
            CHECK(verify_plethystic_relation(w, n));
        }
}

TEST_CASE("guard on coloring enumeration") {
    std::vector<std::pair<int, int>> none;
    CHECK_THROWS_AS(chromatic_qsym(IndifferenceGraph(8, none), 8), guard_error);
    CHECK_THROWS_AS(llt_poly(IndifferenceGraph(9, none), 9), guard_error);
}
