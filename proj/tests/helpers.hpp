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

#pragma once

#include <algorithm>
#include <vector>

#include "tausearch/core.hpp"
#include "tausearch/rng.hpp"

namespace tausearch::testing {

// The three-ranking example used throughout: tau1=[2,5,4,3], tau2=[1,4,7,5],
// tau3=[0,8,7,5], ids 1..3, and the usual query [8,1,0,6].
inline Dataset example_dataset() {
    std::vector<Ranking> rankings;
    rankings.push_back(make_ranking(1, {2, 5, 4, 3}));
    rankings.push_back(make_ranking(2, {1, 4, 7, 5}));
    rankings.push_back(make_ranking(3, {0, 8, 7, 5}));
    return Dataset(std::move(rankings));
}

inline Ranking example_query() { return make_ranking(99, {8, 1, 0, 6}); }

/// Random ranking of k distinct items drawn from [0, domain).
inline Ranking random_ranking(Rng& rng, RankingId id, std::uint32_t k,
                              std::uint32_t domain) {
    std::vector<ItemId> items;
    items.reserve(k);
    while (items.size() < k) {
        const ItemId candidate = rng.next_u32(domain);
        if (std::find(items.begin(), items.end(), candidate) == items.end()) {
            items.push_back(candidate);
        }
    }
    return Ranking(id, std::move(items));
}

/// Random permutation of an existing ranking's item set.
inline Ranking random_permutation_of(Rng& rng, RankingId id, const Ranking& r) {
    std::vector<ItemId> items = r.items();
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        const std::size_t j =
            i + rng.next_u32(static_cast<std::uint32_t>(items.size() - i));
        std::swap(items[i], items[j]);
    }
    return Ranking(id, std::move(items));
}

inline Dataset random_dataset(Rng& rng, std::size_t n, std::uint32_t k,
                              std::uint32_t domain) {
    std::vector<Ranking> rankings;
    rankings.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rankings.push_back(
            random_ranking(rng, static_cast<RankingId>(i), k, domain));
    }
    return Dataset(std::move(rankings));
}

inline bool is_subset(const std::vector<RankingId>& inner,
                      const std::vector<RankingId>& outer) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace tausearch::testing
