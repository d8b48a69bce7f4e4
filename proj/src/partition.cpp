#include "qtrace/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qtrace {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw input_error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("partition parts must be weakly decreasing");
    }
}

int Partition::n() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

long Partition::z() const {
    long result = 1;
    int mult = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        ++mult;
        result *= parts_[i];
        if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
            for (int k = 2; k <= mult; ++k) result *= k;
            mult = 0;
        }
    }
    return result;
}

int Partition::sign() const {
    return (n() - length()) % 2 == 0 ? 1 : -1;
}

long Partition::b_stat() const {
    long b = 0;
    for (size_t i = 0; i < parts_.size(); ++i) b += static_cast<long>(i) * parts_[i];
    return b;
}

std::vector<int> Partition::hooks() const {
    Partition conj = conjugate();
    std::vector<int> h;
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i - 1); ++j)
            h.push_back(part(i - 1) - j + conj.part(j - 1) - i + 1);
    return h;
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw input_error("unbalanced brackets in partition");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && (body[pos] == ' ' || body[pos] == ',')) ++pos;
        if (pos >= body.size()) break;
        size_t end = pos;
        while (end < body.size() && body[end] != ',' && body[end] != ' ') ++end;
        try {
            parts.push_back(std::stoi(body.substr(pos, end - pos)));
        } catch (const std::exception&) {
            throw input_error("bad partition literal: \"" + text + "\"");
        }
        pos = end;
    }
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw input_error("all_partitions requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

} // namespace qtrace
