// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#include <doctest.h>

#include "vobf/multiindex.hpp"

using namespace vobf;

TEST_CASE("multiplicity counts distinct permutations") {
    CHECK(multiplicity({0, 1}) == 2);
    CHECK(multiplicity({3, 3}) == 1);
    CHECK(multiplicity({0, 1, 1}) == 3);
    CHECK(multiplicity({0}) == 1);
    CHECK(multiplicity({0, 1, 2, 3}) == 24);
    CHECK(multiplicity({2, 2, 2}) == 1);
}

TEST_CASE("enumerate_indices is lexicographic with multiset count") {
    const auto one = enumerate_indices(1, 3);
    REQUIRE(one.size() == 3);
    CHECK(one[0] == MultiIndex{0});
    CHECK(one[1] == MultiIndex{1});
    CHECK(one[2] == MultiIndex{2});

    CHECK(enumerate_indices(2, 3).size() == 6);
    CHECK(enumerate_indices(3, 4).size() == 20);

    // stable canonical order: sorted tuples, lexicographic
    const auto two = enumerate_indices(2, 3);
    CHECK(two[0] == MultiIndex{0, 0});
    CHECK(two[1] == MultiIndex{0, 1});
    CHECK(two[2] == MultiIndex{0, 2});
    CHECK(two[3] == MultiIndex{1, 1});
    CHECK(two[4] == MultiIndex{1, 2});
    CHECK(two[5] == MultiIndex{2, 2});
}

TEST_CASE("enumeration matches closed-form count and rank inverts it") {
    for (int m = 1; m <= 4; ++m) {
        for (int n : {1, 2, 3, 5, 8, 20}) {
            const auto idx = enumerate_indices(m, n);
            CHECK(idx.size() == multiset_count(n, m));
            if (n <= 8) {
                for (std::size_t i = 0; i < idx.size(); ++i) {
                    CHECK(index_rank(idx[i], n) == i);
                }
            }
        }
    }
}

TEST_CASE("binomial basics") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(73, 4) == 1088430);
    CHECK(binomial(3, 5) == 0);
}
