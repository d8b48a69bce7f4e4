#include "qtrace/chromatic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "qtrace/errors.hpp"
#include "qtrace/guards.hpp"
#include "qtrace/partition.hpp"
#include "qtrace/ring.hpp"

namespace qtrace {

IndifferenceGraph::IndifferenceGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
    if (n < 1) throw input_error("IndifferenceGraph: vertex count must be positive");
    std::set<std::pair<int, int>> norm;
    for (auto [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > n || a == b)
            throw input_error("IndifferenceGraph: bad edge {" + std::to_string(a) +
                              "," + std::to_string(b) + "}");
        if (!norm.emplace(a, b).second)
            throw input_error("IndifferenceGraph: duplicate edge {" + std::to_string(a) +
                              "," + std::to_string(b) + "}");
    }
    // A generating bound function is unique: m(i) must be the largest right
    // neighbor of i (or i itself when there is none). Recover it, then check
    // that it actually generates the given edges.
    bound_.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) bound_[static_cast<size_t>(i - 1)] = i;
    for (const auto& [a, b] : norm)
        bound_[static_cast<size_t>(a - 1)] = std::max(bound_[static_cast<size_t>(a - 1)], b);
    for (int i = 1; i < n; ++i)
        if (bound_[static_cast<size_t>(i)] < bound_[static_cast<size_t>(i - 1)])
            throw invariant_violation(
                "IndifferenceGraph: not of indifference type (bound function decreases at vertex " +
                std::to_string(i + 1) + ")");
    size_t generated = 0;
    for (int i = 1; i <= n; ++i)
        generated += static_cast<size_t>(bound_[static_cast<size_t>(i - 1)] - i);
    if (generated != norm.size())
        throw invariant_violation(
            "IndifferenceGraph: not of indifference type (a right neighborhood is not an interval)");
    edges_.assign(norm.begin(), norm.end());
}

IndifferenceGraph graph_from_permutation(const Permutation& w) {
    if (contains_pattern(w, Permutation::parse("312")))
        throw input_error("graph_from_permutation: " + w.to_string() +
                          " contains the pattern 312");
    const int n = w.n();
    std::vector<std::pair<int, int>> edges;
    int mx = 0;
    for (int i = 1; i <= n; ++i) {
        mx = std::max(mx, w(i));
        for (int j = i + 1; j <= mx; ++j) edges.emplace_back(i, j);
    }
    return IndifferenceGraph(n, std::move(edges));
}

namespace {

// Number of distinct length-N exponent vectors with the given positive parts:
// the multinomial N! / (prod mult_v! * (N - len)!), assembled from binomials.
long rearrangement_count(const Partition& la, int N) {
    auto binom = [](long a, long b) {
        long r = 1;
        for (long k = 1; k <= b; ++k) r = r * (a - k + 1) / k;
        return r;
    };
    long count = 1;
    long remaining = N;
    const auto& parts = la.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        count *= binom(remaining, static_cast<long>(j - i));
        remaining -= static_cast<long>(j - i);
        i = j;
    }
    return count;  // the N - len zeros occupy the remaining slots in one way
}

SymFunc coloring_sum(const IndifferenceGraph& g, int N, bool proper_only) {
    const int n = g.n();
    check_guard(n, 7, "coloring enumeration");
    if (N < n)
        throw input_error("coloring enumeration: need at least " + std::to_string(n) +
                          " variables, got " + std::to_string(N));
    const auto& edges = g.edges();
    std::map<std::vector<int>, HalfLaurent> poly;
    std::vector<int> kappa(static_cast<size_t>(n), 1);
    while (true) {
        bool keep = true;
        if (proper_only)
            for (const auto& [i, j] : edges)
                if (kappa[static_cast<size_t>(i - 1)] == kappa[static_cast<size_t>(j - 1)]) {
                    keep = false;
                    break;
                }
        if (keep) {
            long asc = 0;
            for (const auto& [i, j] : edges)
                if (kappa[static_cast<size_t>(i - 1)] < kappa[static_cast<size_t>(j - 1)]) ++asc;
            std::vector<int> expo(static_cast<size_t>(N), 0);
            for (int c : kappa) ++expo[static_cast<size_t>(c - 1)];
            auto it = poly.find(expo);
            if (it == poly.end())
                poly.emplace(std::move(expo), HalfLaurent::q_power(asc));
            else
                it->second += HalfLaurent::q_power(asc);
        }
        int p = n - 1;
        while (p >= 0 && kappa[static_cast<size_t>(p)] == N) {
            kappa[static_cast<size_t>(p)] = 1;
            --p;
        }
        if (p < 0) break;
        ++kappa[static_cast<size_t>(p)];
    }
    // Collect into the m-basis. Every rearrangement of a content vector must
    // carry the same coefficient — and all of them must be present — or the
    // sum is merely quasisymmetric and the result would be meaningless.
    std::map<Partition, std::pair<HalfLaurent, long>> collected;
    for (const auto& [expo, c] : poly) {
        std::vector<int> parts;
        for (int e : expo)
            if (e > 0) parts.push_back(e);
        std::sort(parts.rbegin(), parts.rend());
        Partition la(parts);
        auto it = collected.find(la);
        if (it == collected.end())
            collected.emplace(std::move(la), std::pair<HalfLaurent, long>{c, 1});
        else if (it->second.first == c)
            ++it->second.second;
        else
            throw invariant_violation("coloring sum is not symmetric at content " +
                                      la.to_string());
    }
    SymFunc out(Basis::m, n);
    for (const auto& [la, seen] : collected) {
        if (seen.second != rearrangement_count(la, N))
            throw invariant_violation("coloring sum is not symmetric at content " +
                                      la.to_string() + " (missing monomials)");
        out.add_term(la, RatFunc(seen.first));
    }
    return out;
}

} // namespace

SymFunc chromatic_qsym(const IndifferenceGraph& g, int N) {
    return coloring_sum(g, N, true);
}

SymFunc llt_poly(const IndifferenceGraph& g, int N) {
    return coloring_sum(g, N, false);
}

bool verify_plethystic_relation(const Permutation& w, int N) {
    const IndifferenceGraph g = graph_from_permutation(w);
    const SymFunc x = chromatic_qsym(g, N);
    const SymFunc llt = llt_poly(g, N);
    const RatFunc qm1 = RatFunc::q() - RatFunc::one();
    const SymFunc rhs = plethysm_scale(llt, qm1).times(qm1.pow(g.n()).inverse());
    return x == rhs;
}

} // namespace qtrace
