#ifndef QTRACE_TEST_SUPPORT_HPP
#define QTRACE_TEST_SUPPORT_HPP

#include <random>
#include <set>
#include <vector>

#include "qtrace/perm.hpp"

namespace qtrace::testing {

// All reduced words of w (exponential; for oracle use at small n only).
inline void all_reduced_words_rec(const Permutation& w, std::vector<int>& acc,
                                  std::vector<std::vector<int>>& out) {
    if (w.is_identity()) {
        out.emplace_back(acc.rbegin(), acc.rend());
        return;
    }
    for (int i : w.right_descents()) {
        acc.push_back(i);
        all_reduced_words_rec(w.times_s(i), acc, out);
        acc.pop_back();
    }
}

inline std::vector<std::vector<int>> all_reduced_words(const Permutation& w) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    all_reduced_words_rec(w, acc, out);
    return out;
}

// Independent Bruhat oracle: u <= w iff some reduced word of w has a
// subword that is a reduced word of u.
inline bool bruhat_oracle(const Permutation& u, const Permutation& w) {
    if (u.length() > w.length()) return false;
    const int n = u.n();
    for (const auto& word : all_reduced_words(w)) {
        const size_t L = word.size();
        for (size_t mask = 0; mask < (size_t{1} << L); ++mask) {
            if (static_cast<long>(std::popcount(mask)) != u.length()) continue;
            Permutation prod = Permutation::identity(n);
            for (size_t i = 0; i < L; ++i)
                if (mask & (size_t{1} << i)) prod = prod.times_s(word[i]);
            if (prod == u) return true;
        }
    }
    return false;
}

inline Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

} // namespace qtrace::testing

#endif
