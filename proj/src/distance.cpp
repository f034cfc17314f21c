// Copyright 2026 tausearch developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tausearch/distance.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

namespace tausearch {

PairVerdict classify_pair(ItemId i, ItemId j, const Ranking& a, const Ranking& b) {
    const std::uint32_t ia = a.rank_of(i);
    const std::uint32_t ja = a.rank_of(j);
    const std::uint32_t ib = b.rank_of(i);
    const std::uint32_t jb = b.rank_of(j);
    const bool i_in_a = ia != 0;
    const bool j_in_a = ja != 0;
    const bool i_in_b = ib != 0;
    const bool j_in_b = jb != 0;
    assert((i_in_a || i_in_b) && (j_in_a || j_in_b));

    if (i_in_a && j_in_a && i_in_b && j_in_b) {
        const bool same_order = (ia < ja) == (ib < jb);
        return {PairCase::BothShared, same_order ? 0u : 1u};
    }
    if ((i_in_a && j_in_a) || (i_in_b && j_in_b)) {
        const bool shared_is_i = i_in_a && i_in_b;
        const bool shared_is_j = j_in_a && j_in_b;
        if (shared_is_i || shared_is_j) {
            // Both in one list, one of them also in the other. No penalty
            // iff the shared item is ranked ahead in the list holding both.
            const bool pair_in_a = i_in_a && j_in_a;
            const std::uint32_t rank_i = pair_in_a ? ia : ib;
            const std::uint32_t rank_j = pair_in_a ? ja : jb;
            const bool shared_ahead =
                shared_is_i ? rank_i < rank_j : rank_j < rank_i;
            return {PairCase::OneShared, shared_ahead ? 0u : 1u};
        }
        return {PairCase::SameListOnly, 0u};
    }
    return {PairCase::CrossOnly, 1u};
}

std::uint64_t kendall_complete(const Ranking& r1, const Ranking& r2) {
    if (r1.sorted_items() != r2.sorted_items()) {
        throw DomainMismatchError("rankings do not cover the same item set");
    }
    const auto& items = r1.items();
    std::uint64_t discordant = 0;
    for (std::size_t p = 0; p + 1 < items.size(); ++p) {
        const std::uint32_t rp = r2.rank_of(items[p]);
        for (std::size_t q = p + 1; q < items.size(); ++q) {
            // items[p] is ahead of items[q] in r1 by construction.
            if (r2.rank_of(items[q]) < rp) {
                ++discordant;
            }
        }
    }
    return discordant;
}

std::uint64_t kendall_k0_oracle(const Ranking& r1, const Ranking& r2) {
    std::vector<ItemId> universe;
    universe.reserve(r1.k() + r2.k());
    std::set_union(r1.sorted_items().begin(), r1.sorted_items().end(),
                   r2.sorted_items().begin(), r2.sorted_items().end(),
                   std::back_inserter(universe));
    std::uint64_t total = 0;
    for (std::size_t x = 0; x + 1 < universe.size(); ++x) {
        for (std::size_t y = x + 1; y < universe.size(); ++y) {
            total += classify_pair(universe[x], universe[y], r1, r2).penalty;
        }
    }
    return total;
}

namespace {

std::uint64_t count_inversions(const std::vector<std::uint32_t>& seq) {
    std::uint64_t inversions = 0;
    for (std::size_t x = 0; x + 1 < seq.size(); ++x) {
        for (std::size_t y = x + 1; y < seq.size(); ++y) {
            if (seq[x] > seq[y]) {
                ++inversions;
            }
        }
    }
    return inversions;
}

// Penalties from items exclusive to `own` being ranked ahead of items it
// shares with the other list: for every exclusive item, each shared item
// ranked below it in `own` costs 1.
std::uint64_t exclusive_ahead_penalty(const Ranking& own, const Ranking& other,
                                      std::uint32_t shared_total) {
    std::uint64_t penalty = 0;
    std::uint32_t shared_seen = 0;
    for (ItemId item : own.items()) {
        if (other.contains(item)) {
            ++shared_seen;
        } else {
            penalty += shared_total - shared_seen;
        }
    }
    return penalty;
}

}  // namespace

std::uint64_t kendall_k0(const Ranking& r1, const Ranking& r2) {
    // r2-ranks of shared items, visited in r1 rank order; discordant shared
    // pairs are exactly the inversions of that sequence.
    std::vector<std::uint32_t> shared_ranks;
    shared_ranks.reserve(std::min(r1.k(), r2.k()));
    for (ItemId item : r1.items()) {
        const std::uint32_t rank2 = r2.rank_of(item);
        if (rank2 != 0) {
            shared_ranks.push_back(rank2);
        }
    }
    const auto shared = static_cast<std::uint32_t>(shared_ranks.size());

    const std::uint64_t both = count_inversions(shared_ranks);
    const std::uint64_t one1 = exclusive_ahead_penalty(r1, r2, shared);
    const std::uint64_t one2 = exclusive_ahead_penalty(r2, r1, shared);
    const std::uint64_t cross = static_cast<std::uint64_t>(r1.k() - shared) *
                                static_cast<std::uint64_t>(r2.k() - shared);
    return both + one1 + one2 + cross;
}

std::uint64_t min_distance(std::uint32_t k, std::uint32_t n) {
    assert(n <= k);
    const std::uint64_t gap = k - n;
    return gap * gap;
}

std::uint32_t min_overlap(std::uint32_t k, double theta_d) {
    assert(theta_d >= 0.0);
    assert(theta_d < static_cast<double>(k) * static_cast<double>(k));
    auto bound_met = [&](std::uint32_t m) {
        return static_cast<double>(min_distance(k, m)) <= theta_d;
    };
    // ceil(k - sqrt(theta_d)), then correct for sqrt rounding so the result
    // is exactly the least m satisfying the bound.
    double raw = static_cast<double>(k) - std::sqrt(theta_d);
    auto m = static_cast<std::uint32_t>(std::clamp(
        std::ceil(raw), 0.0, static_cast<double>(k)));
    while (m > 0 && bound_met(m - 1)) {
        --m;
    }
    while (m < k && !bound_met(m)) {
        ++m;
    }
    return m;
}

}  // namespace tausearch
