#ifndef QTRACE_PERM_HPP
#define QTRACE_PERM_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qtrace/partition.hpp"

namespace qtrace {

/*
  Permutation of {1..n} in one-line notation. Composition is
  (u*v)(i) = u(v(i)); all reduced-word machinery uses that convention.
  Coxeter length (= inversion count) is cached at construction.
*/
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(w_.size()); }
    // 1-based application: w(i).
    int operator()(int i) const { return w_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& one_line() const { return w_; }
    long length() const { return len_; }
    bool is_identity() const { return len_ == 0; }

    Permutation inverse() const;
    bool is_right_descent(int i) const;
    std::vector<int> right_descents() const;
    std::vector<int> left_descents() const;
    // w * s_i and s_i * w for the adjacent transposition s_i = (i, i+1).
    Permutation times_s(int i) const;
    Permutation s_times(int i) const;
    // Deterministic reduced word (peels the largest right descent);
    // w = s_{word[0]} * s_{word[1]} * ... under the composition convention.
    std::vector<int> reduced_word() const;
    Partition cycle_type() const;

    auto operator<=>(const Permutation&) const = default;

    // Digit string for n <= 9 ("2143"), bracketed list otherwise.
    std::string to_string() const;
    static Permutation parse(const std::string& text);

private:
    std::vector<int> w_;
    long len_ = 0;
};

Permutation compose(const Permutation& u, const Permutation& v);
Permutation longest_element(int n);
// Lexicographic order of one-line notations.
std::vector<Permutation> all_permutations(int n);

// Bruhat order on S_n, oriented so e <= w <= longest_element for all w.
bool bruhat_leq(const Permutation& u, const Permutation& w);

bool contains_pattern(const Permutation& w, const Permutation& p);

// Rank word of arbitrary distinct values, e.g. {4,7,2} -> 231.
Permutation standardize(const std::vector<int>& values);

// For each partition of n (descending lex) a minimum-length representative
// of the conjugacy class with that cycle type: concatenated cycles
// (1..λ1)(λ1+1..λ1+λ2)..., the unique such rep built from consecutive runs.
std::vector<std::pair<Partition, Permutation>> min_length_class_reps(int n);

/*
  Ordered decomposition of {1..n} into blocks of positions; used for the
  subgroups S_{I_1} x ... x S_{I_r} that drive trace induction. Blocks are
  pairwise disjoint, cover {1..n}, and are stored ascending.
*/
struct BlockSubgroupContext {
    int n = 0;
    std::vector<std::vector<int>> blocks;
};

// Reverses each block internally (maps the k-th smallest position of a
// block to its k-th largest member), fixing the block decomposition.
Permutation longest_element(const BlockSubgroupContext& ctx);

// Extend a permutation u of {1..|J|} to S_n by letting it act on the
// ordered positions J and fixing everything else.
Permutation embed_in_positions(const Permutation& u, const std::vector<int>& J, int n);

// All ordered set partitions of {1..n} with block sizes lambda_1, ...,
// lambda_r (in order); each block ascending; n!/prod(lambda_i!) of them.
std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int n,
                                                                  const Partition& lambda);
// Same, for an arbitrary composition of n (blocks in the given size order).
std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int n,
                                                                  const std::vector<int>& sizes);

} // namespace qtrace

#endif
