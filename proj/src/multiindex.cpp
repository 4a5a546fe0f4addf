// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#include "vobf/multiindex.hpp"

#include <stdexcept>

namespace vobf {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::uint64_t multiset_count(int extent, int order) {
    if (order == 0) return 1;
    if (extent <= 0) return 0;
    return binomial(extent + order - 1, order);
}

std::uint64_t multiplicity(const MultiIndex& idx) {
    const int m = static_cast<int>(idx.size());
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
    std::uint64_t rep_div = 1;
    int run = 1;
    for (int i = 1; i < m; ++i) {
        if (idx[i] == idx[i - 1]) {
            ++run;
            rep_div *= static_cast<std::uint64_t>(run);
        } else {
            run = 1;
        }
    }
    return fact / rep_div;
}

std::vector<MultiIndex> enumerate_indices(int order, int extent) {
    if (order < 1 || extent < 1) throw std::invalid_argument("enumerate_indices: order and extent must be >= 1");
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(multiset_count(extent, order)));
    MultiIndex cur(static_cast<std::size_t>(order), 0);
    for (;;) {
        out.push_back(cur);
        int j = order - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == extent - 1) --j;
        if (j < 0) break;
        const int v = cur[static_cast<std::size_t>(j)] + 1;
        for (int t = j; t < order; ++t) cur[static_cast<std::size_t>(t)] = v;
    }
    return out;
}

std::size_t index_rank(const MultiIndex& idx, int extent) {
    const int m = static_cast<int>(idx.size());
    std::size_t r = 0;
    int prev = 0;
    for (int j = 0; j < m; ++j) {
        const int v = idx[static_cast<std::size_t>(j)];
        if (v < prev || v >= extent) throw std::invalid_argument("index_rank: tuple not sorted or out of range");
        for (int t = prev; t < v; ++t) {
            r += static_cast<std::size_t>(multiset_count(extent - t, m - j - 1));
        }
        prev = v;
    }
    return r;
}

}  // namespace vobf
