#include "qtrace/perm.hpp"

#include <algorithm>
#include <numeric>

#include "qtrace/guards.hpp"

namespace qtrace {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v)])
            throw input_error("not a permutation of 1.." + std::to_string(n));
        seen[static_cast<size_t>(v)] = 1;
    }
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++len_;
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (size_t i = 0; i < w_.size(); ++i)
        inv[static_cast<size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

bool Permutation::is_right_descent(int i) const {
    if (i < 1 || i >= n()) throw input_error("descent index out of range");
    return (*this)(i) > (*this)(i + 1);
}

std::vector<int> Permutation::right_descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (is_right_descent(i)) d.push_back(i);
    return d;
}

std::vector<int> Permutation::left_descents() const {
    return inverse().right_descents();
}

Permutation Permutation::times_s(int i) const {
    // (w*s_i)(k) = w(s_i(k)): swap the entries at positions i, i+1.
    if (i < 1 || i >= n()) throw input_error("generator index out of range");
    std::vector<int> v = w_;
    std::swap(v[static_cast<size_t>(i - 1)], v[static_cast<size_t>(i)]);
    return Permutation(std::move(v));
}

Permutation Permutation::s_times(int i) const {
    // (s_i*w)(k) = s_i(w(k)): swap the values i, i+1 wherever they occur.
    if (i < 1 || i >= n()) throw input_error("generator index out of range");
    std::vector<int> v = w_;
    for (int& x : v) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return Permutation(std::move(v));
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    while (!w.is_identity()) {
        int d = 0;
        for (int i = 1; i < w.n(); ++i)
            if (w.is_right_descent(i)) d = i;
        word.push_back(d);
        w = w.times_s(d);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(w_.size(), 0);
    std::vector<int> sizes;
    for (int start = 1; start <= n(); ++start) {
        if (seen[static_cast<size_t>(start - 1)]) continue;
        int len = 0;
        int cur = start;
        while (!seen[static_cast<size_t>(cur - 1)]) {
            seen[static_cast<size_t>(cur - 1)] = 1;
            cur = (*this)(cur);
            ++len;
        }
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return Partition(std::move(sizes));
}

std::string Permutation::to_string() const {
    if (n() <= 9) {
        std::string s;
        for (int v : w_) s += static_cast<char>('0' + v);
        return s;
    }
    std::string s = "[";
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w_[i]);
    }
    return s + "]";
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw input_error("empty permutation literal");
    std::vector<int> v;
    if (text.front() == '[' || text.find(',') != std::string::npos) {
        std::string body = text;
        if (!body.empty() && body.front() == '[') {
            if (body.back() != ']') throw input_error("unbalanced brackets in permutation");
            body = body.substr(1, body.size() - 2);
        }
        size_t pos = 0;
        while (pos < body.size()) {
            while (pos < body.size() && (body[pos] == ',' || body[pos] == ' ')) ++pos;
            if (pos >= body.size()) break;
            size_t end = pos;
            while (end < body.size() && body[end] != ',' && body[end] != ' ') ++end;
            try {
                v.push_back(std::stoi(body.substr(pos, end - pos)));
            } catch (const std::exception&) {
                throw input_error("bad permutation literal: \"" + text + "\"");
            }
            pos = end;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw input_error("bad permutation literal: \"" + text + "\"");
            v.push_back(c - '0');
        }
    }
    return Permutation(std::move(v));
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw size_mismatch("composing permutations of different sizes");
    std::vector<int> w(static_cast<size_t>(u.n()));
    for (int i = 1; i <= u.n(); ++i) w[static_cast<size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(w));
}

Permutation longest_element(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw size_mismatch("Bruhat comparison of different sizes");
    const int n = u.n();
    // r_w(i,j) = #{k <= i : w(k) >= j}; u <= w iff r_u <= r_w everywhere.
    for (int i = 1; i <= n; ++i) {
        int ru = 0;
        int rw = 0;
        std::vector<int> cu(static_cast<size_t>(n) + 2, 0), cw(cu);
        for (int k = 1; k <= i; ++k) {
            ++cu[static_cast<size_t>(u(k))];
            ++cw[static_cast<size_t>(w(k))];
        }
        for (int j = n; j >= 1; --j) {
            ru += cu[static_cast<size_t>(j)];
            rw += cw[static_cast<size_t>(j)];
            if (ru > rw) return false;
        }
    }
    return true;
}

namespace {

bool pattern_search(const std::vector<int>& w, const std::vector<int>& p, size_t from,
                    std::vector<int>& picked) {
    if (picked.size() == p.size()) {
        Permutation got = standardize(picked);
        return got.one_line() == p;
    }
    size_t need = p.size() - picked.size();
    for (size_t i = from; i + need <= w.size(); ++i) {
        picked.push_back(w[i]);
        if (pattern_search(w, p, i + 1, picked)) return true;
        picked.pop_back();
    }
    return false;
}

} // namespace

Permutation standardize(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("standardize requires distinct values");
    std::vector<int> ranks(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                                    sorted.begin()) +
                   1;
    return Permutation(std::move(ranks));
}

bool contains_pattern(const Permutation& w, const Permutation& p) {
    if (p.n() > w.n()) return false;
    if (p.n() == 0) return true;
    std::vector<int> picked;
    picked.reserve(static_cast<size_t>(p.n()));
    return pattern_search(w.one_line(), p.one_line(), 0, picked);
}

std::vector<std::pair<Partition, Permutation>> min_length_class_reps(int n) {
    check_guard(n, 8, "min_length_class_reps");
    std::vector<std::pair<Partition, Permutation>> out;
    for (const Partition& lambda : all_partitions(n)) {
        std::vector<int> w(static_cast<size_t>(n));
        int base = 0;
        for (int part : lambda.parts()) {
            // cycle (base+1, ..., base+part): each entry shifts forward.
            for (int j = 1; j < part; ++j) w[static_cast<size_t>(base + j - 1)] = base + j + 1;
            w[static_cast<size_t>(base + part - 1)] = base + 1;
            base += part;
        }
        Permutation rep(std::move(w));
        if (rep.length() != n - lambda.length())
            throw invariant_violation("class representative is not of minimal length");
        out.emplace_back(lambda, std::move(rep));
    }
    return out;
}

Permutation longest_element(const BlockSubgroupContext& ctx) {
    std::vector<int> w(static_cast<size_t>(ctx.n), 0);
    std::vector<char> seen(static_cast<size_t>(ctx.n) + 1, 0);
    for (const auto& block : ctx.blocks) {
        for (size_t i = 0; i < block.size(); ++i) {
            int pos = block[i];
            int val = block[block.size() - 1 - i];
            if (pos < 1 || pos > ctx.n || seen[static_cast<size_t>(pos)])
                throw input_error("blocks must partition 1..n");
            seen[static_cast<size_t>(pos)] = 1;
            w[static_cast<size_t>(pos - 1)] = val;
        }
    }
    for (int v : w)
        if (v == 0) throw input_error("blocks must cover 1..n");
    return Permutation(std::move(w));
}

Permutation embed_in_positions(const Permutation& u, const std::vector<int>& J, int n) {
    if (u.n() != static_cast<int>(J.size()))
        throw size_mismatch("embedding positions do not match permutation size");
    std::vector<int> w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (int i = 1; i <= u.n(); ++i) {
        int pos = J[static_cast<size_t>(i - 1)];
        int val = J[static_cast<size_t>(u(i) - 1)];
        if (pos < 1 || pos > n) throw input_error("embedding position out of range");
        w[static_cast<size_t>(pos - 1)] = val;
    }
    return Permutation(std::move(w));
}

namespace {

void gen_osp(const std::vector<int>& lambda, size_t block_idx, std::vector<int>& remaining,
             std::vector<std::vector<int>>& acc, std::vector<std::vector<std::vector<int>>>& out) {
    if (block_idx == lambda.size()) {
        out.push_back(acc);
        return;
    }
    const int k = lambda[block_idx];
    // choose a k-subset of `remaining` (kept ascending) in lex order
    std::vector<int> idx(static_cast<size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    const int m = static_cast<int>(remaining.size());
    while (true) {
        std::vector<int> block, rest;
        size_t t = 0;
        for (int i = 0; i < m; ++i) {
            if (t < idx.size() && idx[t] == i) {
                block.push_back(remaining[static_cast<size_t>(i)]);
                ++t;
            } else {
                rest.push_back(remaining[static_cast<size_t>(i)]);
            }
        }
        acc.push_back(std::move(block));
        gen_osp(lambda, block_idx + 1, rest, acc, out);
        acc.pop_back();
        // next k-combination of {0..m-1}
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

} // namespace

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int n,
                                                                  const Partition& lambda) {
    return ordered_set_partitions(n, lambda.parts());
}

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(
    int n, const std::vector<int>& sizes) {
    int total = 0;
    for (int s : sizes) {
        if (s <= 0) throw input_error("block sizes must be positive");
        total += s;
    }
    if (total != n) throw size_mismatch("block sizes must sum to n");
    std::vector<int> remaining(static_cast<size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 1);
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> acc;
    gen_osp(sizes, 0, remaining, acc, out);
    return out;
}

} // namespace qtrace
