#include "qtrace/qmatrix.hpp"

#include <algorithm>
#include <random>

namespace qtrace {

bool is_normal(const QMonomial& word) {
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i] < word[i - 1]) return false;
    return true;
}

std::string qmonomial_to_string(const QMonomial& word) {
    if (word.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += "·";
        s += "t[" + std::to_string(word[i].first) + "," + std::to_string(word[i].second) + "]";
    }
    return s;
}

QMonomial parse_qword(const std::string& text, int n) {
    QMonomial word;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ';' || text[pos] == ' ')) ++pos;
        if (pos >= text.size()) break;
        size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string pair = text.substr(pos, end - pos);
        size_t comma = pair.find(',');
        if (comma == std::string::npos)
            throw input_error("letter must be \"row,col\": \"" + pair + "\"");
        int r, c;
        try {
            r = std::stoi(pair.substr(0, comma));
            c = std::stoi(pair.substr(comma + 1));
        } catch (const std::exception&) {
            throw input_error("bad letter: \"" + pair + "\"");
        }
        if (r < 1 || r > n || c < 1 || c > n)
            throw input_error("letter index out of range for n=" + std::to_string(n));
        word.emplace_back(r, c);
        pos = end;
    }
    return word;
}

QMonomial t_uv_monomial(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw size_mismatch("t^{u,v} requires equal sizes");
    QMonomial word;
    for (int i = 1; i <= u.n(); ++i) word.emplace_back(u(i), v(i));
    return word;
}

QElement QElement::monomial(int n, const QMonomial& word, const HalfLaurent& c) {
    QElement e(n);
    e.add_term(word, c);
    return e;
}

HalfLaurent QElement::coeff(const QMonomial& word) const {
    auto it = coeffs_.find(word);
    return it == coeffs_.end() ? HalfLaurent::zero() : it->second;
}

void QElement::add_term(const QMonomial& word, const HalfLaurent& c) {
    for (const auto& [r, col] : word)
        if (r < 1 || r > n_ || col < 1 || col > n_)
            throw input_error("letter index out of range");
    if (!is_normal(word)) throw invariant_violation("QElement key is not in normal form");
    if (c.is_zero()) return;
    auto it = coeffs_.find(word);
    if (it == coeffs_.end()) {
        coeffs_.emplace(word, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

QElement QElement::operator-() const {
    QElement r(n_);
    for (const auto& [w, c] : coeffs_) r.coeffs_.emplace(w, -c);
    return r;
}

QElement& QElement::operator+=(const QElement& o) {
    if (n_ != o.n_) throw size_mismatch("adding elements of different quantum algebras");
    for (const auto& [w, c] : o.coeffs_) add_term(w, c);
    return *this;
}

QElement& QElement::operator-=(const QElement& o) {
    if (n_ != o.n_) throw size_mismatch("subtracting elements of different quantum algebras");
    for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
    return *this;
}

QElement QElement::times(const HalfLaurent& c) const {
    QElement r(n_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : coeffs_) r.coeffs_.emplace(w, k * c);
    return r;
}

std::string QElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        if (!first) out += " + ";
        const std::string cs = c.to_string();
        if (cs == "1" && !w.empty()) {
            out += qmonomial_to_string(w);
        } else {
            bool atomic = cs.find_first_of("+- ") == std::string::npos;
            out += (atomic ? cs : "(" + cs + ")");
            if (!w.empty()) out += "*" + qmonomial_to_string(w);
        }
        first = false;
    }
    return out;
}

namespace {

/*
  One rewrite of the out-of-order adjacent pair at position i. Pushes the
  resulting words into `sink`. Cases, for left letter (a,b), right (c,d),
  (a,b) > (c,d):
    same row (a=c, b>d):        swap, factor v
    same column (b=d, a>c):     swap, factor v
    a>c, b<d:                   swap, factor 1
    a>c, b>d:                   swap factor 1, plus (c,b)(a,d) with v-v^{-1}
  Every case keeps row and column multisets; the row-sorting cases strictly
  drop row inversions, the same-row case drops column inversions.
*/
void rewrite_at(const QMonomial& word, size_t i, const HalfLaurent& coeff,
                std::map<QMonomial, HalfLaurent>& sink) {
    const auto [a, b] = word[i];
    const auto [c, d] = word[i + 1];
    QMonomial swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    auto push = [&sink](QMonomial&& w, const HalfLaurent& k) {
        auto it = sink.find(w);
        if (it == sink.end()) {
            sink.emplace(std::move(w), k);
        } else {
            it->second += k;
            if (it->second.is_zero()) sink.erase(it);
        }
    };
    if (a == c || b == d) {
        push(std::move(swapped), coeff.shifted(1));
    } else if (b < d) {
        push(std::move(swapped), coeff);
    } else {
        push(std::move(swapped), coeff);
        QMonomial cross = word;
        cross[i] = {c, b};
        cross[i + 1] = {a, d};
        push(std::move(cross), coeff * (HalfLaurent::v() - HalfLaurent::v_power(-1)));
    }
}

template <typename PickPos>
QElement straighten(int n, const QMonomial& word, PickPos&& pick) {
    QElement result(n);
    std::map<QMonomial, HalfLaurent> pending;
    pending.emplace(word, HalfLaurent::one());
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const QMonomial& w = node.key();
        std::vector<size_t> bad;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1] < w[i]) bad.push_back(i);
        if (bad.empty()) {
            result.add_term(w, node.mapped());
            continue;
        }
        rewrite_at(w, pick(bad), node.mapped(), pending);
    }
    return result;
}

} // namespace

QElement normalize(int n, const QMonomial& word) {
    return straighten(n, word, [](const std::vector<size_t>& bad) { return bad.front(); });
}

QElement normalize_random(int n, const QMonomial& word, unsigned long seed) {
    std::mt19937_64 rng(seed);
    return straighten(n, word, [&rng](const std::vector<size_t>& bad) {
        return bad[std::uniform_int_distribution<size_t>(0, bad.size() - 1)(rng)];
    });
}

QElement qmul(const QElement& a, const QElement& b) {
    if (a.n() != b.n()) throw size_mismatch("multiplying elements of different quantum algebras");
    QElement r(a.n());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            QMonomial w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r += normalize(a.n(), w).times(ca * cb);
        }
    return r;
}

QElement embed_block(const QElement& e, const std::vector<int>& J, int n) {
    for (size_t i = 1; i < J.size(); ++i)
        if (J[i] <= J[i - 1]) throw input_error("block positions must be strictly increasing");
    QElement r(n);
    const int k = e.n();
    for (const auto& [w, c] : e.terms()) {
        QMonomial mapped;
        for (const auto& [row, col] : w) {
            if (row > k || col > k) throw input_error("letter outside block range");
            mapped.emplace_back(J[static_cast<size_t>(row - 1)],
                                J[static_cast<size_t>(col - 1)]);
        }
        r.add_term(mapped, c);
    }
    return r;
}

QElement block_product(int n,
                       const std::vector<std::pair<std::vector<int>, QElement>>& blocks) {
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    for (const auto& [J, e] : blocks) {
        if (static_cast<int>(J.size()) != e.n())
            throw size_mismatch("block size does not match element size");
        for (int p : J) {
            if (p < 1 || p > n || used[static_cast<size_t>(p)])
                throw input_error("blocks overlap or leave range");
            used[static_cast<size_t>(p)] = 1;
        }
    }
    QElement r = QElement::one(n);
    for (const auto& [J, e] : blocks) r = qmul(r, embed_block(e, J, n));
    return r;
}

Immanant immanant(const std::map<Permutation, RatFunc>& values, int n) {
    long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    if (static_cast<long>(values.size()) != fact)
        throw input_error("immanant needs a value for every element of S_n");
    HalfLaurent den = HalfLaurent::one();
    for (const auto& [w, v] : values) {
        if (w.n() != n) throw size_mismatch("immanant value permutation of wrong size");
        den = poly_lcm(den, v.den());
    }
    Immanant imm{QElement(n), den};
    const Permutation e = Permutation::identity(n);
    for (const auto& [w, v] : values) {
        if (v.is_zero()) continue;
        HalfLaurent c = v.num() * poly_exact_div(den, v.den());
        imm.elem.add_term(t_uv_monomial(e, w), c.shifted(-w.length()));
    }
    return imm;
}

std::map<Permutation, RatFunc> trace_values_from_immanant(const Immanant& imm) {
    const int n = imm.elem.n();
    std::map<Permutation, RatFunc> values;
    for (const auto& [word, c] : imm.elem.terms()) {
        if (static_cast<int>(word.size()) != n)
            throw input_error("immanant support has a word of wrong length");
        std::vector<int> cols;
        for (int i = 0; i < n; ++i) {
            if (word[static_cast<size_t>(i)].first != i + 1)
                throw input_error("immanant support is not of the form t^{e,w}");
            cols.push_back(word[static_cast<size_t>(i)].second);
        }
        Permutation w(std::move(cols));
        RatFunc theta(c.shifted(w.length()), imm.den);
        values.emplace(std::move(w), std::move(theta));
    }
    return values;
}

} // namespace qtrace
