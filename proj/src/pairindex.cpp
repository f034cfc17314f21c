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

#include "tausearch/pairindex.hpp"

#include <algorithm>
#include <utility>

#include "tausearch/distance.hpp"
#include "tausearch/rng.hpp"

namespace tausearch {

std::vector<PairKey> pairs_unsorted(const Ranking& r) {
    const auto& items = r.items();
    std::vector<PairKey> pairs;
    pairs.reserve(items.size() * (items.size() - 1) / 2);
    for (std::size_t p = 0; p + 1 < items.size(); ++p) {
        for (std::size_t q = p + 1; q < items.size(); ++q) {
            pairs.push_back(canonical_pair(items[p], items[q]));
        }
    }
    return pairs;
}

std::vector<PairKey> pairs_sorted(const Ranking& r) {
    const auto& items = r.items();
    std::vector<PairKey> pairs;
    pairs.reserve(items.size() * (items.size() - 1) / 2);
    for (std::size_t p = 0; p + 1 < items.size(); ++p) {
        for (std::size_t q = p + 1; q < items.size(); ++q) {
            pairs.push_back(PairKey{items[p], items[q]});
        }
    }
    return pairs;
}

std::span<const RankingId> PairIndex::postings(PairKey key) const {
    const std::uint64_t packed = pack_pair(key);
    auto it = std::lower_bound(keys_.begin(), keys_.end(), packed);
    if (it == keys_.end() || *it != packed) {
        return {};
    }
    const std::size_t slot = static_cast<std::size_t>(it - keys_.begin());
    return {ids_.data() + offsets_[slot], offsets_[slot + 1] - offsets_[slot]};
}

PairIndex build_pair_index(const Dataset& dataset, PairVariant variant) {
    PairIndex index;
    index.dataset_ = &dataset;
    index.variant_ = variant;
    index.k_ = dataset.k();
    index.size_ = dataset.size();

    std::vector<std::pair<std::uint64_t, RankingId>> entries;
    const std::size_t per_ranking =
        static_cast<std::size_t>(dataset.k()) * (dataset.k() - 1) / 2;
    entries.reserve(dataset.size() * per_ranking);
    for (const Ranking& r : dataset.rankings()) {
        auto pairs = variant == PairVariant::Unsorted ? pairs_unsorted(r)
                                                      : pairs_sorted(r);
        for (PairKey key : pairs) {
            entries.emplace_back(pack_pair(key), r.id());
        }
    }
    std::sort(entries.begin(), entries.end());

    index.ids_.reserve(entries.size());
    for (const auto& [key, id] : entries) {
        if (index.keys_.empty() || index.keys_.back() != key) {
            index.keys_.push_back(key);
            index.offsets_.push_back(index.ids_.size());
        }
        index.ids_.push_back(id);
    }
    index.offsets_.push_back(index.ids_.size());
    return index;
}

unsigned sufficient_pair_budget(std::uint32_t k, double theta_d) {
    const std::uint32_t overlap_floor = min_overlap(k, theta_d);
    unsigned budget = 0;
    for (std::uint32_t i = 1; i + overlap_floor <= k + 1; ++i) {
        budget += k - i;
    }
    return budget;
}

std::vector<PairKey> select_query_pairs(const Ranking& q, PairVariant variant,
                                        unsigned l, std::uint64_t seed,
                                        double theta_d) {
    const std::uint32_t k = q.k();
    const unsigned pair_count = k * (k - 1) / 2;
    if (l == 0) {
        l = std::min(sufficient_pair_budget(k, theta_d), pair_count);
        if (l == 0) {
            throw LTooLargeError("ranking of length " + std::to_string(k) +
                                 " has no pairs to select");
        }
    } else if (l > pair_count) {
        throw LTooLargeError("l = " + std::to_string(l) + " exceeds the " +
                             std::to_string(pair_count) + " pairs of a " +
                             std::to_string(k) + "-ranking");
    }

    // Position pairs (p, s) with p < s; both variants shuffle this same
    // sequence, which keeps per-seed selections aligned across schemes.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> positions;
    positions.reserve(pair_count);
    for (std::uint32_t p = 0; p + 1 < k; ++p) {
        for (std::uint32_t s = p + 1; s < k; ++s) {
            positions.emplace_back(p, s);
        }
    }
    Rng rng(seed);
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
        const std::size_t j =
            i + rng.next_u32(static_cast<std::uint32_t>(positions.size() - i));
        std::swap(positions[i], positions[j]);
    }

    std::vector<PairKey> selected;
    selected.reserve(l);
    const auto& items = q.items();
    for (unsigned i = 0; i < l; ++i) {
        const auto [p, s] = positions[i];
        // p < s means items[p] is ranked ahead, which is exactly the sorted
        // orientation.
        selected.push_back(variant == PairVariant::Sorted
                               ? PairKey{items[p], items[s]}
                               : canonical_pair(items[p], items[s]));
    }
    return selected;
}

QueryOutcome query_lsh(const PairIndex& index, const Ranking& q,
                       const QueryParams& params) {
    const auto start = std::chrono::steady_clock::now();
    QueryOutcome out;
    if (index.size() == 0) {
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }
    if (q.k() != index.k()) {
        throw KMismatchError("query has " + std::to_string(q.k()) +
                             " items, index expects " + std::to_string(index.k()));
    }

    const auto lookups = select_query_pairs(q, index.variant(), params.l,
                                            params.seed, params.theta_d);
    for (PairKey key : lookups) {
        auto bucket = index.postings(key);
        out.candidate_ids.insert(out.candidate_ids.end(), bucket.begin(),
                                 bucket.end());
    }
    std::sort(out.candidate_ids.begin(), out.candidate_ids.end());
    out.candidate_ids.erase(
        std::unique(out.candidate_ids.begin(), out.candidate_ids.end()),
        out.candidate_ids.end());

    const Dataset& dataset = index.dataset();
    for (RankingId id : out.candidate_ids) {
        if (static_cast<double>(kendall_k0(*dataset.find(id), q)) <=
            params.theta_d) {
            out.result_ids.push_back(id);
        }
    }
    out.distance_calls = out.candidate_ids.size();
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

}  // namespace tausearch
