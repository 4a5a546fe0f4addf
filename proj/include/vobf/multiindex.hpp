// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 vobf contributors

#ifndef VOBF_MULTIINDEX_HPP
#define VOBF_MULTIINDEX_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vobf {

/// Sorted (non-decreasing) tuple of lag or basis-function indices.
using MultiIndex = std::vector<int>;

std::uint64_t binomial(int n, int k);

/// Number of sorted index tuples of length `order` over {0..extent-1},
/// i.e. C(extent + order - 1, order).
std::uint64_t multiset_count(int extent, int order);

/// Number of distinct permutations of a sorted tuple: m! / prod(rep!).
std::uint64_t multiplicity(const MultiIndex& idx);

/// All sorted tuples of length `order` over {0..extent-1} in lexicographic
/// order. This ordering is the canonical vectorization used everywhere.
std::vector<MultiIndex> enumerate_indices(int order, int extent);

/// Position of a sorted tuple within enumerate_indices(order, extent).
std::size_t index_rank(const MultiIndex& idx, int extent);

}  // namespace vobf

#endif
