#ifndef QTRACE_QMATRIX_HPP
#define QTRACE_QMATRIX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/perm.hpp"

namespace qtrace {

// One generator t_{row,col} of A_n(q); a monomial is a word of letters.
using QLetter = std::pair<int, int>;
using QMonomial = std::vector<QLetter>;

// Normal form: letters sorted lexicographically (row, then column),
// repeats allowed.
bool is_normal(const QMonomial& word);

std::string qmonomial_to_string(const QMonomial& word);
// "2,2;1,1" -> t_{2,2} t_{1,1}; letters validated against [n]x[n].
QMonomial parse_qword(const std::string& text, int n);

// t^{u,v} = t_{u_1,v_1} ... t_{u_n,v_n}.
QMonomial t_uv_monomial(const Permutation& u, const Permutation& v);

/*
  Element of A_n(q) expanded over the normal monomial basis with
  HalfLaurent coefficients. The straightening kernel stays denominator
  free; rational-function scalars live one level up (Immanant).
*/
class QElement {
public:
    QElement() = default;
    explicit QElement(int n) : n_(n) {}
    static QElement monomial(int n, const QMonomial& word,
                             const HalfLaurent& c = HalfLaurent::one());
    static QElement one(int n) { return monomial(n, {}); }

    int n() const { return n_; }
    const std::map<QMonomial, HalfLaurent>& terms() const { return coeffs_; }
    HalfLaurent coeff(const QMonomial& word) const;
    void add_term(const QMonomial& word, const HalfLaurent& c);
    bool is_zero() const { return coeffs_.empty(); }

    QElement operator-() const;
    QElement& operator+=(const QElement& o);
    QElement& operator-=(const QElement& o);
    friend QElement operator+(QElement a, const QElement& b) { return a += b; }
    friend QElement operator-(QElement a, const QElement& b) { return a -= b; }
    QElement times(const HalfLaurent& c) const;
    friend bool operator==(const QElement& a, const QElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QElement& a, const QElement& b) { return !(a == b); }

    std::string to_string() const;

private:
    int n_ = 0;
    std::map<QMonomial, HalfLaurent> coeffs_;
};

// Straightening to the normal basis. Deterministic strategy: in each
// pending word, rewrite the leftmost adjacent out-of-order pair.
QElement normalize(int n, const QMonomial& word);
// Same relations, randomized rewrite positions; must agree (confluence).
QElement normalize_random(int n, const QMonomial& word, unsigned long seed);

// Product: concatenate monomials pairwise and straighten.
QElement qmul(const QElement& a, const QElement& b);

// Relabel an element of A_k(q) onto the ordered index set J inside [n].
QElement embed_block(const QElement& e, const std::vector<int>& J, int n);

// Product of per-block elements in block order; blocks must be disjoint.
QElement block_product(int n,
                       const std::vector<std::pair<std::vector<int>, QElement>>& blocks);

/*
  theta-immanant sum_w v^{-l(w)} theta(T_w) t^{e,w}. Values may be
  rational functions; the monic common denominator is carried separately
  so the QElement part stays polynomial.
*/
struct Immanant {
    QElement elem;
    HalfLaurent den = HalfLaurent::one();
};

Immanant immanant(const std::map<Permutation, RatFunc>& values, int n);

// Inverse read-off: theta(T_w) = v^{l(w)} [t^{e,w}] E. Support outside
// {t^{e,w}} means E is not a trace immanant (input_error). Only
// permutations in the support appear in the result.
std::map<Permutation, RatFunc> trace_values_from_immanant(const Immanant& imm);

} // namespace qtrace

#endif
