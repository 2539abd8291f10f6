// SPDX-License-Identifier: Apache-2.0
#include "ctxlogic/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctxlogic {

namespace {

void visit_rgs(int k, int n, int max_used, std::vector<int>& block_of,
               const std::function<void(const std::vector<int>&)>& visit) {
    if (k == n) {
        visit(block_of);
        return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
        block_of[k] = b;
        visit_rgs(k + 1, n, std::max(max_used, b), block_of, visit);
    }
}

} // namespace

void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n <= 0) throw std::invalid_argument("set partition of an empty set");
    std::vector<int> block_of(n, 0);
    visit_rgs(1, n, 0, block_of, visit);
}

std::uint64_t bell_number(int n) {
    if (n < 0) throw std::invalid_argument("negative bell number index");
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next(i + 1);
        next[0] = row.back();
        for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
    }
    return row[0];
}

} // namespace ctxlogic
