#include "qtrace/traces.hpp"

#include <algorithm>
#include <functional>

#include "qtrace/guards.hpp"

namespace qtrace {

TraceTable::TraceTable(int n, std::string name, std::map<Permutation, RatFunc> values)
    : n_(n), name_(std::move(name)), values_(std::move(values)) {
    for (const auto& [w, c] : values_)
        if (w.n() != n_) throw size_mismatch("trace table key of wrong size");
    for (const auto& w : all_permutations(n_)) values_.try_emplace(w, RatFunc::zero());
}

const RatFunc& TraceTable::value(const Permutation& w) const {
    auto it = values_.find(w);
    if (it == values_.end()) throw input_error("permutation outside the table's group");
    return it->second;
}

RatFunc TraceTable::eval(const HeckeElement& d) const {
    if (d.n() != n_) throw size_mismatch("evaluating a trace on the wrong algebra");
    RatFunc total;
    for (const auto& [w, c] : d.terms()) total += RatFunc(c) * value(w);
    return total;
}

TraceTable TraceTable::scaled(const RatFunc& c) const {
    TraceTable r = *this;
    for (auto& [w, v] : r.values_) v *= c;
    return r;
}

TraceTable TraceTable::renamed(std::string name) const {
    TraceTable r = *this;
    r.name_ = std::move(name);
    return r;
}

TraceTable& TraceTable::add_scaled(const TraceTable& o, const RatFunc& c) {
    if (o.n_ != n_) throw size_mismatch("adding trace tables of different sizes");
    for (auto& [w, v] : values_) v += o.value(w) * c;
    return *this;
}

std::optional<Permutation> TraceTable::first_mismatch(const TraceTable& a,
                                                      const TraceTable& b) {
    if (a.n_ != b.n_) throw size_mismatch("comparing trace tables of different sizes");
    for (const auto& [w, v] : a.values_)
        if (v != b.value(w)) return w;
    return std::nullopt;
}

const char* atom_name(AtomKind kind) {
    switch (kind) {
        case AtomKind::sign: return "sign";
        case AtomKind::trivial: return "trivial";
        case AtomKind::eps_llt: return "eps_llt";
        case AtomKind::eta_llt: return "eta_llt";
    }
    return "?";
}

AtomKind parse_atom_kind(const std::string& tag) {
    if (tag == "sign") return AtomKind::sign;
    if (tag == "trivial") return AtomKind::trivial;
    if (tag == "eps_llt") return AtomKind::eps_llt;
    if (tag == "eta_llt") return AtomKind::eta_llt;
    throw input_error("unknown atomic trace: " + tag);
}

TraceTable atomic_trace(AtomKind kind, int n) {
    check_guard(n, 7, "atomic trace table");
    std::map<Permutation, RatFunc> vals;
    if (kind == AtomKind::eta_llt) {
        KLTable kl(n);
        const Permutation e = Permutation::identity(n);
        for (const auto& w : all_permutations(n)) vals.emplace(w, RatFunc(kl.r_poly(e, w)));
    } else {
        for (const auto& w : all_permutations(n)) {
            switch (kind) {
                case AtomKind::sign:
                    vals.emplace(w, RatFunc(w.length() % 2 == 0 ? 1 : -1));
                    break;
                case AtomKind::trivial:
                    vals.emplace(w, RatFunc::q_power(w.length()));
                    break;
                default:
                    vals.emplace(w, w.is_identity() ? RatFunc::one() : RatFunc::zero());
                    break;
            }
        }
    }
    return TraceTable(n, std::string(atom_name(kind)) + "_" + std::to_string(n),
                      std::move(vals));
}

Immanant trace_immanant(const TraceTable& theta) {
    return immanant(theta.values(), theta.n());
}

TraceTable induce_trace(const std::vector<TraceTable>& factors) {
    if (factors.empty()) throw input_error("induce_trace needs at least one factor");
    std::vector<int> sizes;
    int n = 0;
    std::string name = "induce(";
    for (size_t i = 0; i < factors.size(); ++i) {
        sizes.push_back(factors[i].n());
        n += factors[i].n();
        if (i) name += ",";
        name += factors[i].name();
    }
    name += ")";
    check_guard(n, 7, "induced trace table");

    std::vector<Immanant> imms;
    HalfLaurent den = HalfLaurent::one();
    for (const auto& f : factors) {
        imms.push_back(trace_immanant(f));
        den = den * imms.back().den;
    }
    QElement total(n);
    for (const auto& osp : ordered_set_partitions(n, sizes)) {
        std::vector<std::pair<std::vector<int>, QElement>> blocks;
        for (size_t k = 0; k < osp.size(); ++k) blocks.emplace_back(osp[k], imms[k].elem);
        total += block_product(n, blocks);
    }
    return TraceTable(n, std::move(name), trace_values_from_immanant({total, den}));
}

std::optional<std::pair<Permutation, Permutation>> trace_property_violation(
    const TraceTable& theta) {
    const int n = theta.n();
    const auto perms = all_permutations(n);
    for (const auto& u : perms) {
        const HeckeElement tu = HeckeElement::basis(n, u);
        for (const auto& w : perms) {
            const HeckeElement tw = HeckeElement::basis(n, w);
            if (theta.eval(hecke_mul(tu, tw)) != theta.eval(hecke_mul(tw, tu)))
                return std::make_pair(u, w);
        }
    }
    return std::nullopt;
}

namespace {

int guarded_trace_n(int n) {
    check_guard(n, 7, "trace context");
    return n;
}

// Dense Gaussian elimination over the rational-function field.
std::vector<RatFunc> solve_linear(std::vector<std::vector<RatFunc>> a,
                                  std::vector<RatFunc> rhs) {
    const size_t p = a.size();
    for (size_t col = 0; col < p; ++col) {
        size_t piv = col;
        while (piv < p && a[piv][col].is_zero()) ++piv;
        if (piv == p) throw invariant_violation("trace coordinate system is singular");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        const RatFunc inv = a[col][col].inverse();
        for (size_t j = col; j < p; ++j) a[col][j] *= inv;
        rhs[col] *= inv;
        for (size_t r = 0; r < p; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const RatFunc f = a[r][col];
            for (size_t j = col; j < p; ++j) a[r][j] -= f * a[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace

TraceContext::TraceContext(int n)
    : n_(guarded_trace_n(n)), kl_(n), partitions_(all_partitions(n)),
      reps_(min_length_class_reps(n)) {}

const TraceTable& TraceContext::family(const std::string& tag, const Partition& la) {
    auto& per = families_[tag];
    auto it = per.find(la);
    if (it != per.end()) return it->second;
    TraceTable built = build_family(tag, la);
    return per.emplace(la, std::move(built)).first->second;
}

TraceTable TraceContext::build_family(const std::string& tag, const Partition& la) {
    if (la.n() != n_) throw size_mismatch("family index must be a partition of n");
    const std::string label = tag + la.to_string();

    auto induced = [&](AtomKind kind) {
        std::vector<TraceTable> atoms;
        for (int part : la.parts()) atoms.push_back(atomic_trace(kind, part));
        return induce_trace(atoms).renamed(label);
    };
    if (tag == "eps") return induced(AtomKind::sign);
    if (tag == "eta") return induced(AtomKind::trivial);
    if (tag == "eps_llt") return induced(AtomKind::eps_llt);
    if (tag == "eta_llt") return induced(AtomKind::eta_llt);

    if (tag == "psi" || tag == "chi" || tag == "phi" || tag == "gamma") {
        const PartitionStats st = partition_stats(la);
        const Rational psi_scale = Rational(st.sign) * Rational(st.z);
        std::map<Permutation, RatFunc> vals;
        for (const auto& w : all_permutations(n_)) {
            RatFunc v;
            if (tag == "psi")
                v = y_of_basis_element(w, Basis::p).coeff(la).times(psi_scale);
            else if (tag == "chi")
                v = y_of_basis_element(w, Basis::s).coeff(st.conjugate);
            else if (tag == "phi")
                v = y_of_basis_element(w, Basis::e).coeff(la);
            else
                v = y_of_basis_element(w, Basis::h).coeff(la);
            vals.emplace(w, std::move(v));
        }
        return TraceTable(n_, label, std::move(vals));
    }

    if (tag == "psi_llt") {
        // (q-1)^n prod_i 1/(q^{la_i}-1) times psi^la
        const RatFunc q = RatFunc::q();
        RatFunc factor = (q - RatFunc::one()).pow(n_);
        for (int part : la.parts()) factor /= q.pow(part) - RatFunc::one();
        return psi(la).scaled(factor).renamed(label);
    }

    throw input_error("unknown trace family: " + tag);
}

const SymFunc& TraceContext::y_of_basis_element(const Permutation& w, Basis b) {
    if (w.n() != n_) throw size_mismatch("permutation outside the context's group");
    auto& per = y_cache_[b];
    auto it = per.find(w);
    if (it != per.end()) return it->second;
    if (b == Basis::m) {
        SymFunc y(Basis::m, n_);
        for (const auto& la : partitions_) y.add_term(la, eps(la).value(w));
        return per.emplace(w, std::move(y)).first->second;
    }
    SymFunc conv = change_basis(y_of_basis_element(w, Basis::m), b);
    return y_cache_[b].emplace(w, std::move(conv)).first->second;
}

SymFunc TraceContext::y_q(const HeckeElement& d) {
    if (d.n() != n_) throw size_mismatch("element outside the context's algebra");
    SymFunc y(Basis::m, n_);
    for (const auto& la : partitions_) y.add_term(la, eps(la).eval(d));
    return y;
}

std::map<Basis, SymFunc> TraceContext::all_expansions(const HeckeElement& d) {
    const SymFunc y = y_q(d);
    std::map<Basis, SymFunc> out;
    for (Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s, Basis::f})
        out.emplace(b, change_basis(y, b));
    return out;
}

std::map<Partition, RatFunc> TraceContext::eps_coordinates(const TraceTable& theta) {
    if (theta.n() != n_) throw size_mismatch("trace table outside the context's algebra");
    const size_t p = partitions_.size();
    std::vector<std::vector<RatFunc>> a(p, std::vector<RatFunc>(p));
    std::vector<RatFunc> rhs(p);
    for (size_t i = 0; i < p; ++i) {
        const Permutation& rep = reps_[i].second;
        for (size_t j = 0; j < p; ++j) a[i][j] = eps(partitions_[j]).value(rep);
        rhs[i] = theta.value(rep);
    }
    const std::vector<RatFunc> b = solve_linear(std::move(a), std::move(rhs));
    std::map<Partition, RatFunc> out;
    for (size_t j = 0; j < p; ++j) out.emplace(partitions_[j], b[j]);
    return out;
}

TraceTable TraceContext::z_transform(const TraceTable& theta, const RatFunc& r,
                                     const RatFunc& s) {
    const std::map<Partition, RatFunc> b = eps_coordinates(theta);
    std::map<Permutation, RatFunc> vals;
    for (const auto& w : all_permutations(n_)) {
        const SymFunc z = plethysm_scale(y_of_basis_element(w, Basis::m), s).times(r);
        RatFunc total;
        for (const auto& [la, c] : b) total += c * z.coeff(la);
        vals.emplace(w, std::move(total));
    }
    return TraceTable(n_, theta.name() + "_Z", std::move(vals));
}

std::vector<ChainResult> verify_specialization_chains(int n) {
    check_guard(n, 5, "verify_specialization_chains");
    TraceContext ctx(n);
    const RatFunc one = RatFunc::one();
    const RatFunc q = RatFunc::q();
    const RatFunc scale = (one - q).pow(n).inverse();
    const Partition full(std::vector<int>{n});
    const TraceTable eps_target = ctx.eps_llt(full).scaled(scale);
    const TraceTable eta_target = ctx.eta_llt(full).scaled(scale);

    // (1-q)(1-q^2)...(1-q^k)
    auto qbracket = [&](int k) {
        RatFunc p = one;
        for (int i = 1; i <= k; ++i) p *= one - q.pow(i);
        return p;
    };
    auto cycle_factor = [&](const Partition& la) {  // prod 1/(1-q^{la_i})
        RatFunc c = one;
        for (int part : la.parts()) c /= one - q.pow(part);
        return c;
    };
    auto hook_factor = [&](const Partition& la) {  // 1/prod_u (1-q^{h(u)})
        RatFunc c = one;
        for (int h : partition_stats(la).hooks) c /= one - q.pow(h);
        return c;
    };
    auto bracket_factor = [&](const Partition& la, bool with_binomial) {
        RatFunc c = one;
        for (int part : la.parts()) {
            RatFunc f = one / qbracket(part);
            if (with_binomial) f *= q.pow(static_cast<long>(part) * (part - 1) / 2);
            c *= f;
        }
        return c;
    };

    struct Chain {
        const char* identity;
        const TraceTable* target;
        const char* family;
        std::function<RatFunc(const Partition&)> coeff;
    };
    const std::vector<Chain> chains = {
        {"cor11.eps.psi", &eps_target, "psi",
         [&](const Partition& la) {
             const Rational inv_z = Rational(1) / Rational(partition_stats(la).z);
             return cycle_factor(la).times(inv_z);
         }},
        {"cor11.eps.chi", &eps_target, "chi",
         [&](const Partition& la) {
             return hook_factor(la) * q.pow(partition_stats(la).b);
         }},
        {"cor11.eps.phi", &eps_target, "phi",
         [&](const Partition& la) { return bracket_factor(la, false); }},
        {"cor11.eps.gamma", &eps_target, "gamma",
         [&](const Partition& la) { return bracket_factor(la, true); }},
        {"cor11.eta.psi", &eta_target, "psi",
         [&](const Partition& la) {
             const PartitionStats st = partition_stats(la);
             const Rational c = Rational(st.sign) / Rational(st.z);
             return cycle_factor(la).times(c);
         }},
        {"cor11.eta.chi", &eta_target, "chi",
         [&](const Partition& la) {
             // hooks are transpose invariant; only b moves to the conjugate
             const long b = partition_stats(partition_stats(la).conjugate).b;
             return hook_factor(la) * q.pow(b);
         }},
        {"cor11.eta.phi", &eta_target, "phi",
         [&](const Partition& la) { return bracket_factor(la, true); }},
        {"cor11.eta.gamma", &eta_target, "gamma",
         [&](const Partition& la) { return bracket_factor(la, false); }},
    };

    std::vector<ChainResult> results;
    for (const Chain& chain : chains) {
        TraceTable acc(n, chain.identity, {});
        for (const auto& la : ctx.partitions())
            acc.add_scaled(ctx.family(chain.family, la), chain.coeff(la));
        ChainResult res{chain.identity, n, true, ""};
        if (auto w = TraceTable::first_mismatch(*chain.target, acc)) {
            res.pass = false;
            res.counterexample = "w=" + w->to_string() +
                                 " lhs=" + chain.target->value(*w).to_string() +
                                 " rhs=" + acc.value(*w).to_string();
        }
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace qtrace
