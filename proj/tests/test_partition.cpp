#include <doctest.h>

#include <algorithm>
#include <map>

#include "qtrace/partition.hpp"

using namespace qtrace;

TEST_CASE("construction and validation") {
    Partition p({3, 2, 2, 1});
    CHECK(p.n() == 8);
    CHECK(p.length() == 4);
    CHECK_THROWS_AS(Partition({1, 2}), input_error);
    CHECK_THROWS_AS(Partition({2, 0}), input_error);
    CHECK(Partition().n() == 0);
}

TEST_CASE("conjugate") {
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : all_partitions(n))
            CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("statistics") {
    CHECK(Partition({2, 1}).z() == 2);
    CHECK(Partition({1, 1, 1}).z() == 6);
    CHECK(Partition({3}).z() == 3);
    CHECK(Partition({2, 2}).z() == 8);
    CHECK(Partition({3, 2, 2, 1}).z() == 3 * 2 * 2 * 2 * 1);

    CHECK(Partition({2, 1}).sign() == -1);
    CHECK(Partition({1, 1, 1}).sign() == 1);
    CHECK(Partition({3}).sign() == 1);
    CHECK(Partition({2}).sign() == -1);

    CHECK(Partition({2, 1}).b_stat() == 1);
    CHECK(Partition({2, 2}).b_stat() == 2);
    CHECK(Partition({1, 1, 1, 1}).b_stat() == 6);
    CHECK(Partition({4}).b_stat() == 0);

    // sum over classes of n!/z_lambda equals n!
    for (int n = 1; n <= 7; ++n) {
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        long total = 0;
        for (const Partition& p : all_partitions(n)) total += fact / p.z();
        CHECK(total == fact);
    }
}

TEST_CASE("hooks") {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v;
    };
    CHECK(sorted(Partition({2, 1}).hooks()) == std::vector<int>{3, 1, 1});
    CHECK(sorted(Partition({2, 2}).hooks()) == std::vector<int>{3, 2, 2, 1});
    CHECK(sorted(Partition({3}).hooks()) == std::vector<int>{3, 2, 1});
    // Hook product divides n! with quotient = (# standard tableaux), so
    // prod hooks | n! exactly.
    for (const Partition& p : all_partitions(6)) {
        long prod = 1;
        for (int h : p.hooks()) prod *= h;
        CHECK(720 % prod == 0);
    }
}

TEST_CASE("enumeration order and counts") {
    auto p4 = all_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(all_partitions(n).size() == static_cast<size_t>(counts[n]));
    for (const Partition& p : all_partitions(7)) CHECK(p.n() == 7);
}

TEST_CASE("text round trip") {
    CHECK(Partition({2, 1}).to_string() == "[2,1]");
    CHECK(Partition().to_string() == "[]");
    CHECK(Partition::parse("[2,1]") == Partition({2, 1}));
    CHECK(Partition::parse("2,1") == Partition({2, 1}));
    CHECK(Partition::parse("3") == Partition({3}));
    CHECK_THROWS_AS(Partition::parse("1,2"), input_error);
    CHECK_THROWS_AS(Partition::parse("[2,x]"), input_error);
    for (const Partition& p : all_partitions(6)) CHECK(Partition::parse(p.to_string()) == p);
}
