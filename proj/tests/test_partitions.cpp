#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "hilborb/partition.hpp"

using namespace hilborb;

namespace {

// Brute-force centralizer order of any permutation of the given cycle type.
long centralizer_order(const Partition& type) {
    int n = type.size();
    std::vector<int> rep(n);  // a concrete permutation of this cycle type
    int base = 0;
    for (int len : type.parts) {
        for (int k = 0; k < len; ++k) rep[base + k] = base + (k + 1) % len;
        base += len;
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long count = 0;
    do {
        bool commutes = true;
        for (int x = 0; x < n && commutes; ++x)
            commutes = p[rep[x]] == rep[p[x]];
        if (commutes) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

long factorial(int n) {
    long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TEST_CASE("partition enumeration counts and order") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);

    auto p6 = enumerate_partitions(6);
    std::set<std::string> distinct;
    for (auto& p : p6) {
        CHECK(p.size() == 6);
        p.validate();
        distinct.insert(p.to_compact_string());
    }
    CHECK(distinct.size() == p6.size());
    CHECK(std::is_sorted(p6.begin(), p6.end()));
    CHECK(p6.front() == Partition{6});
    CHECK(p6.back() == Partition{1, 1, 1, 1, 1, 1});
}

TEST_CASE("multipartition enumeration") {
    auto m = enumerate_multipartitions(1, 2);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == MultiPartition{Partition{1}, Partition{}});
    CHECK(m[1] == MultiPartition{Partition{}, Partition{1}});

    CHECK(enumerate_multipartitions(2, 2).size() == 5);
    CHECK(enumerate_multipartitions(3, 3).size() == 22);

    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_multipartitions(n, 1).size() == enumerate_partitions(n).size());

    auto m43 = enumerate_multipartitions(4, 3);
    CHECK(std::is_sorted(m43.begin(), m43.end()));
    for (auto& mp : m43) CHECK(mp.size() == 4);
}

TEST_CASE("z_of matches brute-force centralizer orders") {
    for (int n = 1; n <= 4; ++n)
        CHECK(z_of(Partition(std::vector<int>(n, 1))) == factorial(n));
    CHECK(z_of(Partition{2, 1}) == centralizer_order(Partition{2, 1}));  // = 2
    CHECK(z_of(Partition{2, 1}) == 2);
    CHECK(z_of(Partition{2, 2}) == centralizer_order(Partition{2, 2}));  // = 8
    CHECK(z_of(Partition{2, 2}) == 8);
    for (auto& p : enumerate_partitions(6))
        CHECK(z_of(p) == centralizer_order(p));
}

TEST_CASE("class equation: sum of n!/z over partitions of n is n!") {
    for (int n = 1; n <= 10; ++n) {
        Int total(0);
        Int nf(1);
        for (int k = 2; k <= n; ++k) nf *= k;
        for (auto& p : enumerate_partitions(n)) total += nf / z_of(p);
        CHECK(total == nf);
    }
}

TEST_CASE("age + length = size") {
    for (int n = 0; n <= 8; ++n)
        for (auto& p : enumerate_partitions(n))
            CHECK(p.age() + p.length() == p.size());
}

TEST_CASE("arm and leg counts") {
    CHECK(arm_leg(Partition{2}, 0, 0) == std::pair<int, int>(1, 0));
    CHECK(arm_leg(Partition{2, 1}, 0, 0) == std::pair<int, int>(1, 1));
    CHECK(arm_leg(Partition{4, 3, 1}, 0, 1) == std::pair<int, int>(2, 1));
    CHECK_THROWS_AS(arm_leg(Partition{2, 1}, 1, 1), std::out_of_range);
    CHECK_THROWS_AS(arm_leg(Partition{2}, 1, 0), std::out_of_range);

    // arm/leg swap under transposition
    Partition p{4, 2, 2, 1};
    Partition t = p.transpose();
    for (int r = 0; r < p.length(); ++r)
        for (int c = 0; c < p.parts[r]; ++c) {
            auto [a, l] = arm_leg(p, r, c);
            auto [a2, l2] = arm_leg(t, c, r);
            CHECK(a == l2);
            CHECK(l == a2);
        }
}

TEST_CASE("aut order and compact strings") {
    CHECK(Partition{3, 3, 2, 1, 1, 1}.aut_order() == 12);  // 2! * 3!
    CHECK(Partition{}.aut_order() == 1);
    for (auto& p : enumerate_partitions(7))
        CHECK(Partition::from_compact_string(p.to_compact_string()) == p);
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_partitions(-1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_multipartitions(2, 0), std::invalid_argument);
}
