// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_PARTITIONS_HPP
#define CTXLOGIC_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace ctxlogic {

/// Visits every set partition of {0,...,n-1} exactly once, via restricted
/// growth strings. The callback receives block_of, where block_of[k] is the
/// 0-based block index of element k; block indices appear in first-use order.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Number of set partitions of an n-element set.
std::uint64_t bell_number(int n);

} // namespace ctxlogic

#endif
