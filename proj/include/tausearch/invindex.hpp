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

#include <span>
#include <unordered_map>
#include <vector>

#include "tausearch/core.hpp"

namespace tausearch {

/// Item-level inverted index: item -> ascending list of ranking ids.
/// Immutable after build; concurrent read queries are safe. The dataset
/// must outlive the index.
class InvertedIndex {
public:
    InvertedIndex() = default;

    std::uint32_t k() const { return k_; }
    std::size_t size() const { return size_; }
    std::size_t item_count() const { return postings_.size(); }
    const Dataset& dataset() const { return *dataset_; }

    /// Empty span when the item is unindexed.
    std::span<const RankingId> postings(ItemId item) const;

private:
    friend InvertedIndex build_inverted(const Dataset& dataset);

    const Dataset* dataset_ = nullptr;
    std::uint32_t k_ = 0;
    std::size_t size_ = 0;
    std::unordered_map<ItemId, std::vector<RankingId>> postings_;
};

InvertedIndex build_inverted(const Dataset& dataset);

/// Filter-and-validate over all k posting lists of the query's items.
/// Candidates are every ranking sharing at least one item with q; results
/// are the candidates whose distance passes theta_d. Exact for theta < 1.
QueryOutcome query_invin(const InvertedIndex& index, const Ranking& q,
                         const QueryParams& params);

/// Same results as query_invin, scanning only the first
/// k - min_overlap(k, theta_d) + 1 posting lists (query rank order) and
/// keeping only candidates whose overlap meets the pruning floor. Any true
/// result must appear in one of the scanned lists, so no result is lost.
QueryOutcome query_invin_drop(const InvertedIndex& index, const Ranking& q,
                              const QueryParams& params);

}  // namespace tausearch
