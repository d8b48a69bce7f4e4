#include "qtrace/hecke.hpp"

namespace qtrace {

HeckeElement HeckeElement::basis(int n, const Permutation& w) {
    if (w.n() != n) throw size_mismatch("basis permutation size does not match algebra");
    HeckeElement a(n);
    a.add_term(w, HalfLaurent::one());
    return a;
}

HalfLaurent HeckeElement::coeff(const Permutation& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? HalfLaurent::zero() : it->second;
}

void HeckeElement::add_term(const Permutation& w, const HalfLaurent& c) {
    if (w.n() != n_) throw size_mismatch("term permutation size does not match algebra");
    if (c.is_zero()) return;
    auto it = coeffs_.find(w);
    if (it == coeffs_.end()) {
        coeffs_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(n_);
    for (const auto& [w, c] : coeffs_) r.coeffs_.emplace(w, -c);
    return r;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (n_ != o.n_) throw size_mismatch("adding elements of different Hecke algebras");
    for (const auto& [w, c] : o.coeffs_) add_term(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (n_ != o.n_) throw size_mismatch("subtracting elements of different Hecke algebras");
    for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
    return *this;
}

HeckeElement HeckeElement::times(const HalfLaurent& c) const {
    HeckeElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : coeffs_) r.coeffs_.emplace(w, k * c);
    return r;
}

std::map<Permutation, Rational> HeckeElement::specialize_one() const {
    std::map<Permutation, Rational> r;
    for (const auto& [w, c] : coeffs_) {
        Rational v = c.eval_one();
        if (v != 0) r.emplace(w, v);
    }
    return r;
}

std::string HeckeElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        if (!first) out += " + ";
        const std::string cs = c.to_string();
        if (cs == "1") {
            out += "T[" + w.to_string() + "]";
        } else {
            bool atomic = cs.find_first_of("+- ") == std::string::npos;
            out += (atomic ? cs : "(" + cs + ")") + "*T[" + w.to_string() + "]";
        }
        first = false;
    }
    return out;
}

HeckeElement mul_gen_right(const HeckeElement& a, int i) {
    HeckeElement r(a.n());
    const HalfLaurent qm1 = HalfLaurent::q() - HalfLaurent::one();
    for (const auto& [w, c] : a.terms()) {
        Permutation ws = w.times_s(i);
        if (ws.length() > w.length()) {
            r.add_term(ws, c);
        } else {
            r.add_term(w, c * qm1);
            r.add_term(ws, c.shifted(2));
        }
    }
    return r;
}

HeckeElement hecke_mul(const HeckeElement& a, const HeckeElement& b) {
    if (a.n() != b.n()) throw size_mismatch("multiplying elements of different Hecke algebras");
    HeckeElement result(a.n());
    for (const auto& [w, c] : b.terms()) {
        HeckeElement acc = a.times(c);
        for (int i : w.reduced_word()) acc = mul_gen_right(acc, i);
        result += acc;
    }
    return result;
}

HalfLaurent KLTable::r_poly(const Permutation& u, const Permutation& w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return r_poly_locked(u, w);
}

HalfLaurent KLTable::r_poly_locked(const Permutation& u, const Permutation& w) const {
    if (u.n() != n_ || w.n() != n_) throw size_mismatch("R-polynomial arguments of wrong size");
    if (u == w) return HalfLaurent::one();
    if (!bruhat_leq(u, w)) return HalfLaurent::zero();
    auto key = std::make_pair(u, w);
    auto it = r_memo_.find(key);
    if (it != r_memo_.end()) return it->second;

    int s = 0;
    for (int i = 1; i < n_; ++i)
        if (w.is_right_descent(i)) s = i;
    Permutation ws = w.times_s(s);
    Permutation us = u.times_s(s);
    HalfLaurent result;
    if (us.length() < u.length()) {
        result = r_poly_locked(us, ws);
    } else {
        result = (HalfLaurent::q() - HalfLaurent::one()) * r_poly_locked(u, ws) +
                 r_poly_locked(us, ws).shifted(2);
    }
    r_memo_.emplace(std::move(key), result);
    return result;
}

HalfLaurent KLTable::kl_poly(const Permutation& u, const Permutation& w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    return kl_poly_locked(u, w);
}

/*
  Inversion of the R-expansion of the bar involution: with d = l(w)-l(y),

    P_{y,w}(q) - q^d P_{y,w}(1/q)
        = sum_{y < x <= w} (-1)^{l(x)-l(y)} q^{l(w)-l(x)} R_{y,x}(q) P_{x,w}(1/q),

  and deg_q P < d/2 splits the right side at v-exponent d: the low part is
  P itself, the high part must be -q^d P(1/q), and nothing sits at d.
*/
HalfLaurent KLTable::kl_poly_locked(const Permutation& y, const Permutation& w) const {
    if (y.n() != n_ || w.n() != n_) throw size_mismatch("KL polynomial arguments of wrong size");
    if (y == w) return HalfLaurent::one();
    if (!bruhat_leq(y, w)) return HalfLaurent::zero();
    auto key = std::make_pair(y, w);
    auto it = p_memo_.find(key);
    if (it != p_memo_.end()) return it->second;

    const long d = w.length() - y.length();
    HalfLaurent rhs;
    for (const Permutation& x : all_permutations(n_)) {
        if (x == y || !bruhat_leq(y, x) || !bruhat_leq(x, w)) continue;
        HalfLaurent term = r_poly_locked(y, x) * kl_poly_locked(x, w).scaled_exponents(-1);
        term = term.shifted(2 * (w.length() - x.length()));
        if ((x.length() - y.length()) % 2 != 0) term = -term;
        rhs += term;
    }

    HalfLaurent low, high;
    for (const auto& [e, c] : rhs.terms()) {
        if (e == d) throw invariant_violation("KL inversion: mass at the split exponent");
        if (e < d)
            low.add_term(e, c);
        else
            high.add_term(e, c);
    }
    if (high != -low.scaled_exponents(-1).shifted(2 * d))
        throw invariant_violation("KL inversion: halves are not bar-images");
    if (low.coeff(0) != 1) throw invariant_violation("KL polynomial has constant term != 1");
    if (!low.is_zero() && low.max_exp() > d - 1)
        throw invariant_violation("KL degree bound violated");
    p_memo_.emplace(std::move(key), low);
    return low;
}

HeckeElement KLTable::c_tilde(const Permutation& w) const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    HeckeElement r(n_);
    for (const Permutation& u : all_permutations(n_)) {
        if (!bruhat_leq(u, w)) continue;
        r.add_term(u, kl_poly_locked(u, w));
    }
    return r;
}

nlohmann::json KLTable::to_json() const {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    nlohmann::json R = nlohmann::json::object();
    nlohmann::json P = nlohmann::json::object();
    for (const Permutation& u : all_permutations(n_))
        for (const Permutation& w : all_permutations(n_)) {
            if (!bruhat_leq(u, w)) continue;
            std::string key = u.to_string() + ":" + w.to_string();
            R[key] = r_poly_locked(u, w).to_string();
            P[key] = kl_poly_locked(u, w).to_string();
        }
    return nlohmann::json{{"n", n_}, {"R", R}, {"P", P}};
}

} // namespace qtrace
