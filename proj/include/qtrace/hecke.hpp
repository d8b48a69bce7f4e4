#ifndef QTRACE_HECKE_HPP
#define QTRACE_HECKE_HPP

#include <json.hpp>

#include <map>
#include <mutex>
#include <utility>

#include "qtrace/perm.hpp"

namespace qtrace {

/*
  Element of the Hecke algebra H_n(q) in the natural basis {T_w}. The
  generators satisfy T_s^2 = (q-1)T_s + q; at v = 1 the structure constants
  degenerate to the group algebra of S_n.
*/
class HeckeElement {
public:
    HeckeElement() = default;
    explicit HeckeElement(int n) : n_(n) {}
    static HeckeElement basis(int n, const Permutation& w);
    static HeckeElement unit(int n) { return basis(n, Permutation::identity(n)); }

    int n() const { return n_; }
    const std::map<Permutation, HalfLaurent>& terms() const { return coeffs_; }
    HalfLaurent coeff(const Permutation& w) const;
    void add_term(const Permutation& w, const HalfLaurent& c);
    bool is_zero() const { return coeffs_.empty(); }

    HeckeElement operator-() const;
    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement times(const HalfLaurent& c) const;
    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    // Group-algebra shadow at v = 1.
    std::map<Permutation, Rational> specialize_one() const;

    std::string to_string() const;

private:
    int n_ = 0;
    std::map<Permutation, HalfLaurent> coeffs_;
};

// Right multiplication by the generator T_{s_i}:
// T_w T_s = T_{ws} when lengths add, (q-1)T_w + q T_{ws} otherwise.
HeckeElement mul_gen_right(const HeckeElement& a, int i);

// Product in H_n(q); b is factored along reduced words.
HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b);

/*
  Lazy memoized tables of Kazhdan-Lusztig R- and P-polynomials for S_n,
  both stored as polynomials in q (even v-exponents). Convention pinned by
  (T_{w^{-1}})^{-1} = q^{-l(w)} sum_u (-1)^{l(w)-l(u)} R_{u,w}(q) T_u.
  Methods are safe to call concurrently (single shared memo, serialized).
*/
class KLTable {
public:
    explicit KLTable(int n) : n_(n) {}
    int n() const { return n_; }

    // R_{u,w}(q); zero unless u <= w; R_{w,w} = 1; degree l(w)-l(u).
    HalfLaurent r_poly(const Permutation& u, const Permutation& w) const;
    // P_{u,w}(q); zero unless u <= w; constant term 1; degree bound
    // deg_q <= (l(w)-l(u)-1)/2 for u < w.
    HalfLaurent kl_poly(const Permutation& u, const Permutation& w) const;
    // The modified KL basis element: sum_{u <= w} P_{u,w}(q) T_u.
    HeckeElement c_tilde(const Permutation& w) const;

    // Full tables over all pairs u <= w, for golden-file pinning.
    nlohmann::json to_json() const;

private:
    int n_;
    mutable std::recursive_mutex mu_;
    mutable std::map<std::pair<Permutation, Permutation>, HalfLaurent> r_memo_;
    mutable std::map<std::pair<Permutation, Permutation>, HalfLaurent> p_memo_;
    HalfLaurent r_poly_locked(const Permutation& u, const Permutation& w) const;
    HalfLaurent kl_poly_locked(const Permutation& u, const Permutation& w) const;
};

} // namespace qtrace

#endif
