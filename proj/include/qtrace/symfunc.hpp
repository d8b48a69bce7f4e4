#ifndef QTRACE_SYMFUNC_HPP
#define QTRACE_SYMFUNC_HPP

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

#include "qtrace/partition.hpp"

namespace qtrace {

// The six classical bases of the degree-n homogeneous symmetric functions:
// monomial, elementary, complete homogeneous, power sum, Schur, forgotten.
enum class Basis { m = 0, e = 1, h = 2, p = 3, s = 4, f = 5 };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& tag);

/*
  Homogeneous symmetric function of degree n with RatFunc coefficients,
  tagged by the basis its coefficient map refers to. All support partitions
  have size n; zero coefficients are never stored.
*/
class SymFunc {
public:
    SymFunc() = default;
    SymFunc(Basis basis, int n) : basis_(basis), n_(n) {}
    static SymFunc basis_element(Basis basis, const Partition& lambda);

    Basis basis() const { return basis_; }
    int n() const { return n_; }
    const std::map<Partition, RatFunc>& terms() const { return coeffs_; }
    RatFunc coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const RatFunc& c);
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    SymFunc times(const RatFunc& c) const;
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    std::string to_string() const;
    nlohmann::json to_json() const;
    static SymFunc from_json(const nlohmann::json& j);

private:
    Basis basis_ = Basis::m;
    int n_ = 0;
    std::map<Partition, RatFunc> coeffs_;
};

// Re-express F in the target basis. Transition matrices are exact
// rationals built once per degree (by n-variable polynomial expansion for
// e,h,p,s against m) and cached thread-safely.
SymFunc change_basis(const SymFunc& F, Basis target);

// The standard involution: p_lambda -> sgn(lambda) p_lambda. The result
// carries the same basis tag as the input.
SymFunc omega(const SymFunc& F);

// Plethystic alphabet scaling X -> s(q) X: on the p-basis,
// p_k -> compose_power(s,k) * p_k. Same basis tag on return.
SymFunc plethysm_scale(const SymFunc& F, const RatFunc& s);

struct PartitionStats {
    long z;
    int sign;
    long b;
    std::vector<int> hooks;
    Partition conjugate;
};
PartitionStats partition_stats(const Partition& lambda);

} // namespace qtrace

#endif
