#ifndef QTRACE_CHROMATIC_HPP
#define QTRACE_CHROMATIC_HPP

#include <utility>
#include <vector>

#include "qtrace/perm.hpp"
#include "qtrace/symfunc.hpp"

namespace qtrace {

/*
  Incomparability graph of a unit interval order on vertices 1..n. Such edge
  sets are exactly the ones generated by a nondecreasing bound function
  m: [n] -> [n] with m(i) >= i via: {i,j} with i<j is an edge iff j <= m(i).
  The bound function is recovered (it is unique) and any edge set no such
  function generates is rejected.
*/
class IndifferenceGraph {
public:
    IndifferenceGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    // normalized: first < second, sorted lexicographically, no duplicates
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // the generating bound function, bound()[i-1] = m(i)
    const std::vector<int>& bound() const { return bound_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> bound_;
};

// The incomparability graph attached to a 312-avoiding permutation, generated
// by the prefix-maximum bound function m(i) = max(w(1), ..., w(i)). Inputs
// containing the pattern 312 are rejected.
IndifferenceGraph graph_from_permutation(const Permutation& w);

// X_{G,q}: the sum over proper colorings kappa: [n] -> [N] of
// q^{asc(kappa)} x_{kappa(1)} ... x_{kappa(n)}, where asc(kappa) counts the
// edges {i,j} with i < j and kappa(i) < kappa(j). The coloring polynomial is
// collected into the m-basis; a collection that is not symmetric is fatal.
// Requires N >= n.
SymFunc chromatic_qsym(const IndifferenceGraph& g, int N);

// The same weighted sum over all (not necessarily proper) colorings.
SymFunc llt_poly(const IndifferenceGraph& g, int N);

// Checks X_{G,q} == (q-1)^{-n} LLT_{G,q}[(q-1)X] exactly, for the graph of a
// 312-avoiding permutation w; the alphabet scaling acts on the LLT side.
bool verify_plethystic_relation(const Permutation& w, int N);

} // namespace qtrace

#endif
