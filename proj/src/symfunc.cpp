#include "qtrace/symfunc.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>

namespace qtrace {

const char* basis_name(Basis b) {
    switch (b) {
        case Basis::m: return "m";
        case Basis::e: return "e";
        case Basis::h: return "h";
        case Basis::p: return "p";
        case Basis::s: return "s";
        case Basis::f: return "f";
    }
    throw invariant_violation("unknown basis tag");
}

Basis parse_basis(const std::string& tag) {
    if (tag == "m") return Basis::m;
    if (tag == "e") return Basis::e;
    if (tag == "h") return Basis::h;
    if (tag == "p") return Basis::p;
    if (tag == "s") return Basis::s;
    if (tag == "f") return Basis::f;
    throw input_error("unknown basis tag: \"" + tag + "\"");
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda) {
    SymFunc F(basis, lambda.n());
    F.add_term(lambda, RatFunc::one());
    return F;
}

RatFunc SymFunc::coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? RatFunc::zero() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RatFunc& c) {
    if (lambda.n() != n_) throw size_mismatch("partition size does not match degree");
    if (c.is_zero()) return;
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
        coeffs_.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

SymFunc SymFunc::operator-() const {
    SymFunc r(basis_, n_);
    for (const auto& [l, c] : coeffs_) r.coeffs_.emplace(l, -c);
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_ || n_ != o.n_)
        throw size_mismatch("adding symmetric functions of different basis or degree");
    for (const auto& [l, c] : o.coeffs_) add_term(l, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_ || n_ != o.n_)
        throw size_mismatch("subtracting symmetric functions of different basis or degree");
    for (const auto& [l, c] : o.coeffs_) add_term(l, -c);
    return *this;
}

SymFunc SymFunc::times(const RatFunc& c) const {
    SymFunc r(basis_, n_);
    if (c.is_zero()) return r;
    for (const auto& [l, k] : coeffs_) r.coeffs_.emplace(l, k * c);
    return r;
}

std::string SymFunc::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!first) out += " + ";
        const std::string cs = it->second.to_string();
        std::string term = std::string(basis_name(basis_)) + it->first.to_string();
        if (cs != "1") {
            bool atomic = cs.find_first_of("+- ") == std::string::npos;
            out += atomic ? cs + "*" + term : "(" + cs + ")*" + term;
        } else {
            out += term;
        }
        first = false;
    }
    return out;
}

nlohmann::json SymFunc::to_json() const {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [l, c] : coeffs_) terms[l.to_string()] = c.to_string();
    return nlohmann::json{{"basis", basis_name(basis_)}, {"n", n_}, {"terms", terms}};
}

SymFunc SymFunc::from_json(const nlohmann::json& j) {
    SymFunc F(parse_basis(j.at("basis").get<std::string>()), j.at("n").get<int>());
    for (const auto& [k, v] : j.at("terms").items())
        F.add_term(Partition::parse(k), RatFunc::parse(v.get<std::string>()));
    return F;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;
// Sparse polynomial in n variables keyed by exponent vector.
using ExpPoly = std::map<std::vector<int>, Rational>;

ExpPoly poly_product(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            Rational c = ca * cb;
            auto it = r.find(e);
            if (it == r.end())
                r.emplace(std::move(e), c);
            else
                it->second += c;
        }
    return r;
}

ExpPoly expand_m(const Partition& lambda, int nv) {
    std::vector<int> e(static_cast<size_t>(nv), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<size_t>(i)] = lambda.part(i);
    std::sort(e.begin(), e.end());
    ExpPoly r;
    do {
        r.emplace(e, Rational(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return r;
}

void subsets_rec(int nv, int k, int from, std::vector<int>& e, ExpPoly& out) {
    if (k == 0) {
        auto it = out.find(e);
        if (it == out.end()) out.emplace(e, Rational(1));
        return;
    }
    for (int i = from; i <= nv - k; ++i) {
        e[static_cast<size_t>(i)] = 1;
        subsets_rec(nv, k - 1, i + 1, e, out);
        e[static_cast<size_t>(i)] = 0;
    }
}

ExpPoly expand_e_row(int k, int nv) {
    ExpPoly r;
    std::vector<int> e(static_cast<size_t>(nv), 0);
    subsets_rec(nv, k, 0, e, r);
    return r;
}

void compositions_rec(int nv, int rest, int idx, std::vector<int>& e, ExpPoly& out) {
    if (idx == nv - 1) {
        e[static_cast<size_t>(idx)] = rest;
        out.emplace(e, Rational(1));
        return;
    }
    for (int a = 0; a <= rest; ++a) {
        e[static_cast<size_t>(idx)] = a;
        compositions_rec(nv, rest - a, idx + 1, e, out);
    }
    e[static_cast<size_t>(idx)] = 0;
}

ExpPoly expand_h_row(int k, int nv) {
    ExpPoly r;
    std::vector<int> e(static_cast<size_t>(nv), 0);
    compositions_rec(nv, k, 0, e, r);
    return r;
}

ExpPoly expand_p_row(int k, int nv) {
    ExpPoly r;
    for (int i = 0; i < nv; ++i) {
        std::vector<int> e(static_cast<size_t>(nv), 0);
        e[static_cast<size_t>(i)] = k;
        r.emplace(std::move(e), Rational(1));
    }
    return r;
}

ExpPoly expand_product_rows(const Partition& lambda, int nv, ExpPoly (*row)(int, int)) {
    ExpPoly r{{std::vector<int>(static_cast<size_t>(nv), 0), Rational(1)}};
    for (int part : lambda.parts()) r = poly_product(r, row(part, nv));
    return r;
}

// Semistandard Young tableaux of shape lambda with entries <= nv: rows
// weakly increase, columns strictly increase; contributes x^{content}.
void ssyt_rec(const Partition& lambda, int nv, std::vector<std::vector<int>>& t, int r, int c,
              ExpPoly& out) {
    if (r == lambda.length()) {
        std::vector<int> e(static_cast<size_t>(nv), 0);
        for (const auto& row : t)
            for (int v : row) ++e[static_cast<size_t>(v - 1)];
        auto it = out.find(e);
        if (it == out.end())
            out.emplace(std::move(e), Rational(1));
        else
            it->second += 1;
        return;
    }
    if (c == lambda.part(r)) {
        ssyt_rec(lambda, nv, t, r + 1, 0, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= nv; ++v) {
        t[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        ssyt_rec(lambda, nv, t, r, c + 1, out);
    }
}

ExpPoly expand_s(const Partition& lambda, int nv) {
    if (lambda.length() > nv) return {};
    std::vector<std::vector<int>> t;
    for (int i = 0; i < lambda.length(); ++i)
        t.emplace_back(static_cast<size_t>(lambda.part(i)), 0);
    ExpPoly r;
    ssyt_rec(lambda, nv, t, 0, 0, r);
    return r;
}

Matrix invert(Matrix a) {
    const size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw invariant_violation("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            a[col][j].canonicalize();
            inv[col][j] /= d;
            inv[col][j].canonicalize();
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct TransitionTables {
    std::vector<Partition> partitions;
    std::map<Partition, size_t> index;
    // to_m[b][i][j] = coefficient of m_{partitions[j]} in b_{partitions[i]}
    std::array<Matrix, 6> to_m;
    std::array<Matrix, 6> from_m;
};

Matrix matmul(const Matrix& a, const Matrix& b) {
    const size_t n = a.size();
    Matrix r(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::unique_ptr<TransitionTables> build_tables(int n) {
    auto t = std::make_unique<TransitionTables>();
    t->partitions = all_partitions(n);
    const size_t P = t->partitions.size();
    for (size_t i = 0; i < P; ++i) t->index[t->partitions[i]] = i;

    auto read_matrix = [&](auto expand) {
        Matrix mat(P, std::vector<Rational>(P, Rational(0)));
        for (size_t i = 0; i < P; ++i) {
            ExpPoly poly = expand(t->partitions[i]);
            for (size_t j = 0; j < P; ++j) {
                std::vector<int> key(static_cast<size_t>(n), 0);
                for (int k = 0; k < t->partitions[j].length(); ++k)
                    key[static_cast<size_t>(k)] = t->partitions[j].part(k);
                auto it = poly.find(key);
                if (it != poly.end()) mat[i][j] = it->second;
            }
        }
        return mat;
    };

    Matrix ident(P, std::vector<Rational>(P, Rational(0)));
    for (size_t i = 0; i < P; ++i) ident[i][i] = 1;
    t->to_m[static_cast<size_t>(Basis::m)] = ident;
    t->to_m[static_cast<size_t>(Basis::e)] =
        read_matrix([&](const Partition& l) { return expand_product_rows(l, n, expand_e_row); });
    t->to_m[static_cast<size_t>(Basis::h)] =
        read_matrix([&](const Partition& l) { return expand_product_rows(l, n, expand_h_row); });
    t->to_m[static_cast<size_t>(Basis::p)] =
        read_matrix([&](const Partition& l) { return expand_product_rows(l, n, expand_p_row); });
    t->to_m[static_cast<size_t>(Basis::s)] =
        read_matrix([&](const Partition& l) { return expand_s(l, n); });

    for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s})
        t->from_m[static_cast<size_t>(b)] = invert(t->to_m[static_cast<size_t>(b)]);

    // f_lambda = omega(m_lambda): route through p with the sign twist.
    Matrix signed_from_p = t->from_m[static_cast<size_t>(Basis::p)];
    for (size_t i = 0; i < P; ++i)
        for (size_t j = 0; j < P; ++j)
            if (t->partitions[j].sign() < 0) signed_from_p[i][j] = -signed_from_p[i][j];
    t->to_m[static_cast<size_t>(Basis::f)] =
        matmul(signed_from_p, t->to_m[static_cast<size_t>(Basis::p)]);
    t->from_m[static_cast<size_t>(Basis::f)] = invert(t->to_m[static_cast<size_t>(Basis::f)]);
    return t;
}

const TransitionTables& tables_for(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TransitionTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_tables(n)).first;
    return *it->second;
}

std::vector<RatFunc> to_m_coords(const SymFunc& F, const TransitionTables& t) {
    const size_t P = t.partitions.size();
    std::vector<RatFunc> mc(P);
    const Matrix& M = t.to_m[static_cast<size_t>(F.basis())];
    for (const auto& [l, c] : F.terms()) {
        size_t i = t.index.at(l);
        for (size_t j = 0; j < P; ++j)
            if (M[i][j] != 0) mc[j] += c.times(M[i][j]);
    }
    return mc;
}

SymFunc from_m_coords(const std::vector<RatFunc>& mc, Basis target, int n,
                      const TransitionTables& t) {
    const size_t P = t.partitions.size();
    SymFunc F(target, n);
    const Matrix& M = t.from_m[static_cast<size_t>(target)];
    for (size_t j = 0; j < P; ++j) {
        if (mc[j].is_zero()) continue;
        for (size_t k = 0; k < P; ++k)
            if (M[j][k] != 0) F.add_term(t.partitions[k], mc[j].times(M[j][k]));
    }
    return F;
}

} // namespace

SymFunc change_basis(const SymFunc& F, Basis target) {
    if (F.basis() == target) return F;
    const TransitionTables& t = tables_for(F.n());
    return from_m_coords(to_m_coords(F, t), target, F.n(), t);
}

namespace {

// Apply a per-partition p-coefficient map and restore the original tag.
template <typename Fn>
SymFunc on_p_basis(const SymFunc& F, Fn&& twist) {
    const Basis tag = F.basis();
    SymFunc P = change_basis(F, Basis::p);
    SymFunc G(Basis::p, F.n());
    for (const auto& [l, c] : P.terms()) G.add_term(l, twist(l, c));
    return change_basis(G, tag);
}

} // namespace

SymFunc omega(const SymFunc& F) {
    return on_p_basis(F, [](const Partition& l, const RatFunc& c) {
        return l.sign() < 0 ? -c : c;
    });
}

SymFunc plethysm_scale(const SymFunc& F, const RatFunc& s) {
    return on_p_basis(F, [&](const Partition& l, const RatFunc& c) {
        RatFunc factor = RatFunc::one();
        for (int part : l.parts()) factor *= compose_power(s, part);
        return c * factor;
    });
}

PartitionStats partition_stats(const Partition& lambda) {
    return PartitionStats{lambda.z(), lambda.sign(), lambda.b_stat(), lambda.hooks(),
                          lambda.conjugate()};
}

} // namespace qtrace
