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

#include <cstdint>
#include <span>
#include <vector>

#include "tausearch/core.hpp"

namespace tausearch {

/// Unsorted: a pair means plain co-occurrence, canonical form a < b.
/// Sorted: (a, b) additionally asserts a is ranked ahead of b.
enum class PairVariant { Unsorted, Sorted };

struct PairKey {
    ItemId a = 0;
    ItemId b = 0;

    friend bool operator==(const PairKey&, const PairKey&) = default;
};

constexpr std::uint64_t pack_pair(PairKey key) {
    return (static_cast<std::uint64_t>(key.a) << 32) | key.b;
}

constexpr PairKey canonical_pair(ItemId x, ItemId y) {
    return x < y ? PairKey{x, y} : PairKey{y, x};
}

/// All k(k-1)/2 co-occurring pairs of r in canonical a < b form.
std::vector<PairKey> pairs_unsorted(const Ranking& r);

/// All k(k-1)/2 pairs of r oriented so the first component is ranked ahead.
std::vector<PairKey> pairs_sorted(const Ranking& r);

/// Pair-keyed inverted index; each bucket is the posting list of one hash
/// label. Unsorted keys are the (1,1) buckets of item-presence pairs,
/// sorted keys the '1' buckets of rank-order projections, materialized for
/// co-occurring pairs only. Stored as packed 64-bit keys over a sorted
/// array. Immutable after build; the dataset must outlive the index.
class PairIndex {
public:
    PairIndex() = default;

    PairVariant variant() const { return variant_; }
    std::uint32_t k() const { return k_; }
    std::size_t size() const { return size_; }
    std::size_t key_count() const { return keys_.size(); }
    std::size_t entry_count() const { return ids_.size(); }
    const Dataset& dataset() const { return *dataset_; }

    /// Posting list for a pair key; empty span when the bucket is absent.
    std::span<const RankingId> postings(PairKey key) const;

private:
    friend PairIndex build_pair_index(const Dataset& dataset, PairVariant variant);

    const Dataset* dataset_ = nullptr;
    PairVariant variant_ = PairVariant::Unsorted;
    std::uint32_t k_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> keys_;     // sorted, unique
    std::vector<std::size_t> offsets_;    // keys_.size() + 1
    std::vector<RankingId> ids_;          // ascending within each bucket
};

PairIndex build_pair_index(const Dataset& dataset, PairVariant variant);

/// The sufficient lookup budget derived from the overlap floor: the number
/// of query pairs touching any one of the first k - min_overlap + 1 items,
/// sum over i = 1..k-mu+1 of (k - i).
unsigned sufficient_pair_budget(std::uint32_t k, double theta_d);

/// First l entries of a seed-deterministic permutation of q's pair set.
/// Prefixes are nested: the selection for l is a prefix of the selection for
/// any larger l under the same seed. Both variants permute the same
/// underlying unordered pairs, the sorted variant just orients each by q's
/// ranks, so scheme comparisons are pairwise-aligned. l = 0 requests the
/// sufficient_pair_budget(k, theta_d) cap. Throws LTooLargeError when an
/// explicit l exceeds k(k-1)/2.
std::vector<PairKey> select_query_pairs(const Ranking& q, PairVariant variant,
                                        unsigned l, std::uint64_t seed,
                                        double theta_d);

/// Filter-and-validate over l pair-bucket lookups. Recall below 1 is
/// possible for l < k(k-1)/2.
QueryOutcome query_lsh(const PairIndex& index, const Ranking& q,
                       const QueryParams& params);

}  // namespace tausearch
