#ifndef QTRACE_PARTITION_HPP
#define QTRACE_PARTITION_HPP

#include <compare>
#include <string>
#include <vector>

#include "qtrace/ring.hpp"

namespace qtrace {

// Integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const;
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    // z_lambda = prod_i i^{m_i} m_i!, the centralizer order of the class.
    long z() const;
    // (-1)^{n - length}.
    int sign() const;
    // b(lambda) = sum_i (i-1) lambda_i.
    long b_stat() const;
    // Multiset of hook lengths over all cells.
    std::vector<int> hooks() const;

    auto operator<=>(const Partition&) const = default;

    // "[2,1]"; parse also accepts the bare form "2,1".
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
};

// All partitions of n, descending lexicographic: (n) first, (1^n) last.
std::vector<Partition> all_partitions(int n);

} // namespace qtrace

#endif
