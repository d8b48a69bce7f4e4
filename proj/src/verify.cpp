#include "qtrace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "qtrace/chromatic.hpp"
#include "qtrace/errors.hpp"
#include "qtrace/traces.hpp"

namespace qtrace {

std::string VerificationReport::to_line() const {
    std::ostringstream os;
    os << identity << "  n=" << n << "  " << (pass ? "pass" : "fail");
    if (!note.empty()) os << "  (" << note << ")";
    if (!counterexample.empty()) os << "  counterexample: " << counterexample;
    os << "  [" << std::fixed << std::setprecision(2) << seconds << "s]";
    return os.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["identity"] = identity;
    j["n"] = n;
    j["status"] = pass ? "pass" : "fail";
    if (pass)
        j["counterexample"] = nullptr;
    else
        j["counterexample"] = counterexample;
    if (!note.empty()) j["note"] = note;
    j["seconds"] = seconds;
    return j;
}

namespace {

struct Outcome {
    bool pass = true;
    std::string counterexample;
    std::string note;

    static Outcome fail(std::string why) { return {false, std::move(why), ""}; }
};

VerificationReport timed(const std::string& identity, int n,
                         const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = body();
    const auto t1 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.identity = identity;
    r.n = n;
    r.pass = o.pass;
    r.counterexample = std::move(o.counterexample);
    r.note = std::move(o.note);
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    return r;
}

bool avoids_smooth_patterns(const Permutation& w) {
    static const Permutation p1 = Permutation::parse("3412");
    static const Permutation p2 = Permutation::parse("4231");
    return !contains_pattern(w, p1) && !contains_pattern(w, p2);
}

std::string table_mismatch(const TraceTable& lhs, const TraceTable& rhs) {
    auto w = TraceTable::first_mismatch(lhs, rhs);
    if (!w) return "tables of different size";
    std::ostringstream os;
    os << "w=" << w->to_string() << " lhs=" << lhs.value(*w).to_string()
       << " rhs=" << rhs.value(*w).to_string();
    return os.str();
}

// ---- hecke ----------------------------------------------------------------

std::vector<VerificationReport> suite_hecke(int n) {
    std::vector<VerificationReport> out;
    const auto perms = all_permutations(n);

    out.push_back(timed("hecke.assoc", n, [&]() -> Outcome {
        auto check = [&](const HeckeElement& a, const HeckeElement& b,
                         const HeckeElement& c) {
            return hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c));
        };
        // exhaustive over the whole basis in small rank, over the generators
        // plus a seeded sample of basis triples beyond
        std::vector<HeckeElement> elems;
        if (n <= 3)
            for (const auto& w : perms) elems.push_back(HeckeElement::basis(n, w));
        else
            for (int i = 1; i < n; ++i)
                elems.push_back(HeckeElement::basis(n, Permutation::identity(n).times_s(i)));
        long triples = 0;
        for (const auto& a : elems)
            for (const auto& b : elems)
                for (const auto& c : elems) {
                    ++triples;
                    if (!check(a, b, c))
                        return Outcome::fail("a=" + a.to_string() + " b=" + b.to_string() +
                                             " c=" + c.to_string());
                }
        if (n > 3) {
            std::mt19937_64 rng(0x9e3779b9u + static_cast<unsigned long>(n));
            std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
            for (int k = 0; k < 200; ++k) {
                ++triples;
                const auto& a = perms[pick(rng)];
                const auto& b = perms[pick(rng)];
                const auto& c = perms[pick(rng)];
                if (!check(HeckeElement::basis(n, a), HeckeElement::basis(n, b),
                           HeckeElement::basis(n, c)))
                    return Outcome::fail("a=" + a.to_string() + " b=" + b.to_string() +
                                         " c=" + c.to_string());
            }
        }
        return {true, "", std::to_string(triples) + " triples"};
    }));

    out.push_back(timed("hecke.group_algebra", n, [&]() -> Outcome {
        for (const auto& u : perms)
            for (const auto& w : perms) {
                const auto shadow =
                    hecke_mul(HeckeElement::basis(n, u), HeckeElement::basis(n, w))
                        .specialize_one();
                const Permutation uw = compose(u, w);
                if (shadow.size() != 1 || shadow.count(uw) == 0 ||
                    shadow.at(uw) != Rational(1))
                    return Outcome::fail("u=" + u.to_string() + " w=" + w.to_string());
            }
        return {true, "", std::to_string(perms.size() * perms.size()) + " pairs"};
    }));
    return out;
}

// ---- rkl ------------------------------------------------------------------

std::vector<VerificationReport> suite_rkl(int n) {
    std::vector<VerificationReport> out;
    const auto perms = all_permutations(n);
    KLTable kl(n);

    // (T_{w^{-1}})^{-1} = q^{-l(w)} sum_u (-1)^{l(w)-l(u)} R_{u,w}(q) T_u,
    // with the left side expanded independently from generator inverses
    // T_s^{-1} = q^{-1} T_s + (q^{-1} - 1) T_e.
    out.push_back(timed("rkl.inverse", n, [&]() -> Outcome {
        for (const auto& w : perms) {
            HeckeElement lhs = HeckeElement::unit(n);
            for (int i : w.reduced_word()) {
                HeckeElement gen_inv(n);
                gen_inv.add_term(Permutation::identity(n).times_s(i),
                                 HalfLaurent::q_power(-1));
                gen_inv.add_term(Permutation::identity(n),
                                 HalfLaurent::q_power(-1) - HalfLaurent::one());
                lhs = hecke_mul(lhs, gen_inv);
            }
            HeckeElement rhs(n);
            for (const auto& u : perms) {
                if (!bruhat_leq(u, w)) continue;
                const Rational sign((w.length() - u.length()) % 2 == 0 ? 1 : -1);
                rhs.add_term(u, kl.r_poly(u, w).times(sign).shifted(-2 * w.length()));
            }
            if (lhs != rhs)
                return Outcome::fail("w=" + w.to_string());
        }
        return {};
    }));

    out.push_back(timed("rkl.degree", n, [&]() -> Outcome {
        for (const auto& w : perms)
            for (const auto& u : perms) {
                if (u == w || !bruhat_leq(u, w)) continue;
                const long gap = w.length() - u.length();
                const HalfLaurent r = kl.r_poly(u, w);
                if (r.is_zero() || r.max_exp() != 2 * gap || r.min_exp() < 0)
                    return Outcome::fail("R: u=" + u.to_string() + " w=" + w.to_string() +
                                         " R=" + r.to_string());
                const HalfLaurent p = kl.kl_poly(u, w);
                if (p.is_zero() || p.min_exp() < 0 || p.max_exp() > gap - 1)
                    return Outcome::fail("P: u=" + u.to_string() + " w=" + w.to_string() +
                                         " P=" + p.to_string());
            }
        return {};
    }));

    out.push_back(timed("rkl.smooth", n, [&]() -> Outcome {
        for (const auto& w : perms) {
            bool all_one = true;
            for (const auto& u : perms) {
                if (!bruhat_leq(u, w)) continue;
                if (!kl.kl_poly(u, w).is_one()) {
                    all_one = false;
                    break;
                }
            }
            if (all_one != avoids_smooth_patterns(w))
                return Outcome::fail("w=" + w.to_string() + (all_one
                                         ? " has all P=1 but contains a pattern"
                                         : " avoids the patterns but has P!=1"));
        }
        return {};
    }));
    return out;
}

// ---- minreps --------------------------------------------------------------

std::vector<VerificationReport> suite_minreps(int n) {
    std::vector<VerificationReport> out;
    const auto perms = all_permutations(n);

    // minimum length within a conjugacy class: each c-cycle costs c-1
    std::vector<bool> is_min(perms.size()), avoids(perms.size());
    for (size_t i = 0; i < perms.size(); ++i) {
        const auto& w = perms[i];
        is_min[i] = w.length() == n - w.cycle_type().length();
        avoids[i] = avoids_smooth_patterns(w);
    }

    out.push_back(timed("minreps.avoid", n, [&]() -> Outcome {
        long count = 0;
        for (size_t i = 0; i < perms.size(); ++i) {
            if (!is_min[i]) continue;
            ++count;
            if (!avoids[i]) return Outcome::fail("w=" + perms[i].to_string());
        }
        for (const auto& [la, rep] : min_length_class_reps(n)) {
            if (rep.cycle_type() != la || rep.length() != n - la.length())
                return Outcome::fail("rep " + rep.to_string() + " for " + la.to_string());
        }
        return {true, "", std::to_string(count) + " minimal elements"};
    }));

    out.push_back(timed("minreps.bruhat", n, [&]() -> Outcome {
        for (size_t i = 0; i < perms.size(); ++i) {
            if (!is_min[i]) continue;
            for (size_t j = 0; j < perms.size(); ++j) {
                if (perms[j].length() > perms[i].length()) continue;
                if (!bruhat_leq(perms[j], perms[i])) continue;
                if (!is_min[j] || !avoids[j])
                    return Outcome::fail("w=" + perms[i].to_string() +
                                         " v=" + perms[j].to_string());
            }
        }
        return {};
    }));
    return out;
}

// ---- straighten -----------------------------------------------------------

std::vector<VerificationReport> suite_straighten(int n) {
    std::vector<VerificationReport> out;

    out.push_back(timed("straighten.confluence", n, [&]() -> Outcome {
        std::vector<QLetter> letters;
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) letters.emplace_back(r, c);
        std::vector<QMonomial> words;
        if (n <= 3) {
            // every word of length <= 4
            std::function<void(QMonomial&)> grow = [&](QMonomial& word) {
                words.push_back(word);
                if (word.size() == 4) return;
                for (const auto& l : letters) {
                    word.push_back(l);
                    grow(word);
                    word.pop_back();
                }
            };
            QMonomial empty;
            grow(empty);
        } else {
            std::mt19937_64 rng(0xabcdefu + static_cast<unsigned long>(n));
            std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
            for (int k = 0; k < 300; ++k) {
                QMonomial word;
                for (int t = 0; t < 4; ++t) word.push_back(letters[pick(rng)]);
                words.push_back(word);
            }
        }
        for (const auto& word : words) {
            const QElement det = normalize(n, word);
            for (unsigned long seed : {1ul, 2ul, 3ul})
                if (normalize_random(n, word, seed) != det)
                    return Outcome::fail("word " + qmonomial_to_string(word) + " seed " +
                                         std::to_string(seed));
        }
        return {true, "", std::to_string(words.size()) + " words"};
    }));

    out.push_back(timed("straighten.w0", n, [&]() -> Outcome {
        const Permutation w0 = longest_element(n);
        const QElement lhs = normalize(n, t_uv_monomial(w0, w0));
        KLTable kl(n);
        QElement rhs(n);
        const Permutation e = Permutation::identity(n);
        for (const auto& w : all_permutations(n))
            rhs.add_term(t_uv_monomial(e, w), kl.r_poly(e, w).shifted(-w.length()));
        if (lhs != rhs) return Outcome::fail("normal form of the w0 monomial");
        return {};
    }));
    return out;
}

// ---- induction (ordered-set-partition immanant sums) ------------------------

QElement osp_diagonal_sum(int n, const Partition& la, bool reversed) {
    QElement acc(n);
    for (const auto& osp : ordered_set_partitions(n, la)) {
        QMonomial word;
        if (reversed) {
            for (auto block = osp.rbegin(); block != osp.rend(); ++block)
                for (auto i = block->rbegin(); i != block->rend(); ++i)
                    word.emplace_back(*i, *i);
        } else {
            for (const auto& block : osp)
                for (int i : block) word.emplace_back(i, i);
        }
        acc += normalize(n, word);
    }
    return acc;
}

std::vector<VerificationReport> suite_induction(int n) {
    std::vector<VerificationReport> out;
    TraceContext ctx(n);

    out.push_back(timed("induction.forward", n, [&]() -> Outcome {
        for (const auto& la : ctx.partitions()) {
            const Immanant imm = trace_immanant(ctx.eps_llt(la));
            if (!imm.den.is_one())
                return Outcome::fail("lambda=" + la.to_string() + " denominator " +
                                     imm.den.to_string());
            if (imm.elem != osp_diagonal_sum(n, la, false))
                return Outcome::fail("lambda=" + la.to_string());
        }
        return {};
    }));

    out.push_back(timed("induction.reversed", n, [&]() -> Outcome {
        for (const auto& la : ctx.partitions()) {
            const Immanant imm = trace_immanant(ctx.eta_llt(la));
            if (!imm.den.is_one())
                return Outcome::fail("lambda=" + la.to_string() + " denominator " +
                                     imm.den.to_string());
            if (imm.elem != osp_diagonal_sum(n, la, true))
                return Outcome::fail("lambda=" + la.to_string());
        }
        return {};
    }));
    return out;
}

// ---- routes (z-transform reproductions) -------------------------------------

RatFunc llt_scale_r(int n) {
    return (RatFunc::q() - RatFunc::one()).pow(n);
}

RatFunc llt_scale_s() {
    return (RatFunc::q() - RatFunc::one()).inverse();
}

std::vector<VerificationReport> suite_routes(int n) {
    std::vector<VerificationReport> out;
    TraceContext ctx(n);
    const Partition top({n});

    out.push_back(timed("routes.eps", n, [&]() -> Outcome {
        const TraceTable via_z = ctx.z_transform(ctx.eps(top), llt_scale_r(n), llt_scale_s());
        const TraceTable direct = atomic_trace(AtomKind::eps_llt, n);
        if (via_z != direct) return Outcome::fail(table_mismatch(via_z, direct));
        return {};
    }));

    out.push_back(timed("routes.eta", n, [&]() -> Outcome {
        const TraceTable via_z = ctx.z_transform(ctx.eta(top), llt_scale_r(n), llt_scale_s());
        const TraceTable direct = atomic_trace(AtomKind::eta_llt, n);
        if (via_z != direct) return Outcome::fail(table_mismatch(via_z, direct));
        return {};
    }));
    return out;
}

// ---- eq6 --------------------------------------------------------------------

std::vector<VerificationReport> suite_eq6(int n) {
    std::vector<VerificationReport> out;
    out.push_back(timed("eq6", n, [&]() -> Outcome {
        TraceContext ctx(n);
        const TraceTable& top = ctx.eps_llt(Partition({n}));
        long smooth = 0;
        for (const auto& w : all_permutations(n)) {
            if (!avoids_smooth_patterns(w)) continue;
            ++smooth;
            const RatFunc got = top.eval(ctx.kl().c_tilde(w));
            if (got != RatFunc::one())
                return Outcome::fail("w=" + w.to_string() + " value=" + got.to_string());
        }
        return {true, "", std::to_string(smooth) + " smooth permutations"};
    }));
    return out;
}

// ---- psillt -----------------------------------------------------------------

std::vector<VerificationReport> suite_psillt(int n) {
    std::vector<VerificationReport> out;
    out.push_back(timed("psillt", n, [&]() -> Outcome {
        TraceContext ctx(n);
        for (const auto& la : ctx.partitions()) {
            const TraceTable via_z =
                ctx.z_transform(ctx.psi(la), llt_scale_r(n), llt_scale_s());
            const TraceTable& scalar = ctx.psi_llt(la);
            if (via_z != scalar)
                return Outcome::fail("lambda=" + la.to_string() + " " +
                                     table_mismatch(via_z, scalar));
        }
        return {};
    }));
    return out;
}

// ---- cor11 ------------------------------------------------------------------

std::vector<VerificationReport> suite_cor11(int n) {
    std::vector<VerificationReport> out;
    // timing is per chain; run the whole bundle once and wrap
    const auto t0 = std::chrono::steady_clock::now();
    const auto chains = verify_specialization_chains(n);
    const auto t1 = std::chrono::steady_clock::now();
    const double each =
        std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(chains.size());
    for (const auto& c : chains) {
        VerificationReport r;
        r.identity = c.identity;
        r.n = c.n;
        r.pass = c.pass;
        r.counterexample = c.counterexample;
        r.seconds = each;
        out.push_back(std::move(r));
    }
    return out;
}

// ---- coloring ---------------------------------------------------------------

std::vector<VerificationReport> suite_coloring(int n) {
    std::vector<VerificationReport> out;
    TraceContext ctx(n);
    const Permutation pat312 = Permutation::parse("312");
    std::vector<Permutation> avoiders;
    for (const auto& w : all_permutations(n))
        if (!contains_pattern(w, pat312)) avoiders.push_back(w);

    out.push_back(timed("coloring.chromatic", n, [&]() -> Outcome {
        for (const auto& w : avoiders) {
            const SymFunc x = chromatic_qsym(graph_from_permutation(w), n);
            const SymFunc y = ctx.y_q(ctx.kl().c_tilde(w));
            if (x != y) return Outcome::fail("w=" + w.to_string());
        }
        return {true, "", std::to_string(avoiders.size()) + " permutations"};
    }));

    out.push_back(timed("coloring.llt", n, [&]() -> Outcome {
        for (const auto& w : avoiders) {
            const SymFunc l = llt_poly(graph_from_permutation(w), n);
            const HeckeElement cw = ctx.kl().c_tilde(w);
            SymFunc expected(Basis::m, n);
            for (const auto& la : ctx.partitions())
                expected.add_term(la, ctx.eps_llt(la).eval(cw));
            if (l != expected) return Outcome::fail("w=" + w.to_string());
        }
        return {};
    }));

    out.push_back(timed("coloring.plethysm", n, [&]() -> Outcome {
        for (const auto& w : avoiders)
            if (!verify_plethystic_relation(w, n))
                return Outcome::fail("w=" + w.to_string());
        return {};
    }));

    out.push_back(timed("coloring.stability", n, [&]() -> Outcome {
        for (const auto& w : avoiders) {
            const IndifferenceGraph g = graph_from_permutation(w);
            if (chromatic_qsym(g, n) != chromatic_qsym(g, n + 1))
                return Outcome::fail("chromatic, w=" + w.to_string());
            if (llt_poly(g, n) != llt_poly(g, n + 1))
                return Outcome::fail("llt, w=" + w.to_string());
        }
        return {};
    }));
    return out;
}

// ---- expansions ---------------------------------------------------------------

std::vector<VerificationReport> suite_expansions(int n) {
    std::vector<VerificationReport> out;
    TraceContext ctx(n);
    const auto perms = all_permutations(n);

    // deterministic sample of sparse elements with Laurent-monomial weights
    std::mt19937_64 rng(0x51a2f3u + static_cast<unsigned long>(n));
    std::uniform_int_distribution<size_t> pick_w(0, perms.size() - 1);
    std::uniform_int_distribution<int> pick_c(-3, 3);
    std::uniform_int_distribution<long> pick_e(-2, 2);
    std::uniform_int_distribution<int> pick_k(1, 4);
    std::vector<HeckeElement> sample;
    for (int t = 0; t < 50; ++t) {
        HeckeElement d(n);
        const int k = pick_k(rng);
        for (int j = 0; j < k; ++j) {
            int c = pick_c(rng);
            if (c == 0) c = 1;
            d.add_term(perms[pick_w(rng)], HalfLaurent::term(Rational(c), pick_e(rng)));
        }
        sample.push_back(std::move(d));
    }

    // coefficient of the basis element in each displayed expansion of Y_q
    struct Form {
        Basis basis;
        std::function<RatFunc(TraceContext&, const Partition&, const HeckeElement&)> coeff;
    };
    const std::vector<Form> primal = {
        {Basis::m, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.eps(la).eval(d);
         }},
        {Basis::f, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.eta(la).eval(d);
         }},
        {Basis::p, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             const auto st = partition_stats(la);
             return c.psi(la).eval(d).times(Rational(st.sign) / Rational(st.z));
         }},
        {Basis::s, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.chi(partition_stats(la).conjugate).eval(d);
         }},
        {Basis::e, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.phi(la).eval(d);
         }},
        {Basis::h, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.gamma(la).eval(d);
         }},
    };
    const std::vector<Form> dual = {
        {Basis::f, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.eps(la).eval(d);
         }},
        {Basis::m, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.eta(la).eval(d);
         }},
        {Basis::p, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.psi(la).eval(d).times(Rational(1) / Rational(partition_stats(la).z));
         }},
        {Basis::s, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.chi(la).eval(d);
         }},
        {Basis::h, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.phi(la).eval(d);
         }},
        {Basis::e, [](TraceContext& c, const Partition& la, const HeckeElement& d) {
             return c.gamma(la).eval(d);
         }},
    };

    auto assemble = [&](const Form& form, const HeckeElement& d) {
        SymFunc f(form.basis, n);
        for (const auto& la : ctx.partitions()) f.add_term(la, form.coeff(ctx, la, d));
        return change_basis(f, Basis::m);
    };

    out.push_back(timed("expansions.primal", n, [&]() -> Outcome {
        for (size_t t = 0; t < sample.size(); ++t) {
            const SymFunc reference = ctx.y_q(sample[t]);
            for (const auto& form : primal)
                if (assemble(form, sample[t]) != reference)
                    return Outcome::fail("element " + std::to_string(t) + " basis " +
                                         basis_name(form.basis));
        }
        return {true, "", std::to_string(sample.size()) + " elements"};
    }));

    out.push_back(timed("expansions.dual", n, [&]() -> Outcome {
        for (size_t t = 0; t < sample.size(); ++t) {
            const SymFunc reference = omega(ctx.y_q(sample[t]));
            for (const auto& form : dual)
                if (assemble(form, sample[t]) != reference)
                    return Outcome::fail("element " + std::to_string(t) + " basis " +
                                         basis_name(form.basis));
        }
        return {};
    }));
    return out;
}

using SuiteFn = std::vector<VerificationReport> (*)(int);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"hecke", suite_hecke},           {"rkl", suite_rkl},
        {"minreps", suite_minreps},       {"straighten", suite_straighten},
        {"induction", suite_induction},   {"routes", suite_routes},
        {"eq6", suite_eq6},               {"psillt", suite_psillt},
        {"cor11", suite_cor11},           {"coloring", suite_coloring},
        {"expansions", suite_expansions},
    };
    return table;
}

} // namespace

const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suite_table()) v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<VerificationReport> run_verification(const std::string& suite, int n) {
    if (suite == "all") {
        std::vector<VerificationReport> out;
        for (const auto& [name, fn] : suite_table()) {
            auto part = fn(n);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    for (const auto& [name, fn] : suite_table())
        if (name == suite) return fn(n);
    throw input_error("unknown verification suite '" + suite + "'");
}

} // namespace qtrace
