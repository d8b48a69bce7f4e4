#ifndef QTRACE_TRACES_HPP
#define QTRACE_TRACES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/hecke.hpp"
#include "qtrace/qmatrix.hpp"
#include "qtrace/symfunc.hpp"

namespace qtrace {

/*
  A trace functional on H_n(q), materialized as the full value table
  theta(T_w) over S_n and extended linearly by eval(). The name is a label
  only; equality compares n and values.
*/
class TraceTable {
public:
    TraceTable() = default;
    // Missing permutations are filled in as zero values.
    TraceTable(int n, std::string name, std::map<Permutation, RatFunc> values);

    int n() const { return n_; }
    const std::string& name() const { return name_; }
    const std::map<Permutation, RatFunc>& values() const { return values_; }
    const RatFunc& value(const Permutation& w) const;
    RatFunc eval(const HeckeElement& d) const;

    TraceTable scaled(const RatFunc& c) const;
    TraceTable renamed(std::string name) const;
    TraceTable& add_scaled(const TraceTable& o, const RatFunc& c);

    friend bool operator==(const TraceTable& a, const TraceTable& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }
    friend bool operator!=(const TraceTable& a, const TraceTable& b) { return !(a == b); }
    // First w (lex order) where the tables differ.
    static std::optional<Permutation> first_mismatch(const TraceTable& a,
                                                     const TraceTable& b);

private:
    int n_ = 0;
    std::string name_;
    std::map<Permutation, RatFunc> values_;
};

enum class AtomKind { sign, trivial, eps_llt, eta_llt };
const char* atom_name(AtomKind kind);
AtomKind parse_atom_kind(const std::string& tag);

// The one-block traces: sign T_w -> (-1)^{l(w)}, trivial T_w -> q^{l(w)},
// eps_llt T_w -> [w = e], eta_llt T_w -> R_{e,w}(q).
TraceTable atomic_trace(AtomKind kind, int n);

// Induction (theta_1 (x) ... (x) theta_r)^ to H_n(q), n = sum of factor
// sizes: sum over ordered set partitions of the factor-size composition of
// embedded block immanant products, read back off the total immanant.
TraceTable induce_trace(const std::vector<TraceTable>& factors);

// The generating immanant of a trace (common monic denominator split off).
Immanant trace_immanant(const TraceTable& theta);

// First pair (u, w) with theta(T_u T_w) != theta(T_w T_u), if any.
std::optional<std::pair<Permutation, Permutation>> trace_property_violation(
    const TraceTable& theta);

/*
  Per-n workspace: caches the KL table, minimal-length class
  representatives, the induced trace families, and the basis expansions of
  Y_q(T_w) that drive the coefficient read-offs. Family accessors build
  lazily; the context is not safe for concurrent mutation.
*/
class TraceContext {
public:
    explicit TraceContext(int n);

    int n() const { return n_; }
    const KLTable& kl() const { return kl_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const std::vector<std::pair<Partition, Permutation>>& min_reps() const { return reps_; }

    // Induced families: eps from sign atoms, eta from trivial atoms, the
    // LLT analogs from their atomic tables.
    const TraceTable& eps(const Partition& la) { return family("eps", la); }
    const TraceTable& eta(const Partition& la) { return family("eta", la); }
    const TraceTable& eps_llt(const Partition& la) { return family("eps_llt", la); }
    const TraceTable& eta_llt(const Partition& la) { return family("eta_llt", la); }
    // Coefficient families read off the expansions of Y_q:
    // psi = sgn(la) z_la [p_la], chi^la = [s_{la'}], phi = [e_la],
    // gamma = [h_la].
    const TraceTable& psi(const Partition& la) { return family("psi", la); }
    const TraceTable& chi(const Partition& la) { return family("chi", la); }
    const TraceTable& phi(const Partition& la) { return family("phi", la); }
    const TraceTable& gamma(const Partition& la) { return family("gamma", la); }
    // psi_llt applies the scalar (q-1)^n prod_i 1/(q^{la_i}-1) to psi.
    const TraceTable& psi_llt(const Partition& la) { return family("psi_llt", la); }
    // Any of the above by tag, for the CLI.
    const TraceTable& family(const std::string& tag, const Partition& la);

    // Y_q(D) = sum_la eps^la(D) m_la.
    SymFunc y_q(const HeckeElement& d);
    // Y_q(D) re-expressed in every basis.
    std::map<Basis, SymFunc> all_expansions(const HeckeElement& d);
    // Cached basis expansion of Y_q(T_w).
    const SymFunc& y_of_basis_element(const Permutation& w, Basis b);

    // Coordinates b_la of theta in the eps family, solved on the minimal
    // length class representatives; a singular system is fatal.
    std::map<Partition, RatFunc> eps_coordinates(const TraceTable& theta);
    // theta = sum b_la eps^la  ->  sum b_la eps^la_Z where
    // eps^la_Z(D) = [m_la] (r * Y_q(D)[s X]).
    TraceTable z_transform(const TraceTable& theta, const RatFunc& r, const RatFunc& s);

private:
    int n_;
    KLTable kl_;
    std::vector<Partition> partitions_;
    std::vector<std::pair<Partition, Permutation>> reps_;
    std::map<std::string, std::map<Partition, TraceTable>> families_;
    std::map<Basis, std::map<Permutation, SymFunc>> y_cache_;
    TraceTable build_family(const std::string& tag, const Partition& la);
};

struct ChainResult {
    std::string identity;
    int n = 0;
    bool pass = false;
    std::string counterexample;  // empty when passing
};

// The eight principal-specialization chains: each right-hand side compared
// as a full table against eps^n_llt/(1-q)^n resp. eta^n_llt/(1-q)^n.
std::vector<ChainResult> verify_specialization_chains(int n);

} // namespace qtrace

#endif
