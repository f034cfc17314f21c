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

#include "tausearch/invindex.hpp"

#include <algorithm>

#include "tausearch/distance.hpp"

namespace tausearch {

namespace {

void check_query_k(std::uint32_t index_k, const Ranking& q) {
    if (q.k() != index_k) {
        throw KMismatchError("query has " + std::to_string(q.k()) +
                             " items, index expects " + std::to_string(index_k));
    }
}

void sort_unique(std::vector<RankingId>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

std::vector<RankingId> validate(const Dataset& dataset,
                                const std::vector<RankingId>& candidates,
                                const Ranking& q, double theta_d) {
    std::vector<RankingId> results;
    for (RankingId id : candidates) {
        if (static_cast<double>(kendall_k0(*dataset.find(id), q)) <= theta_d) {
            results.push_back(id);
        }
    }
    return results;
}

}  // namespace

std::span<const RankingId> InvertedIndex::postings(ItemId item) const {
    auto it = postings_.find(item);
    if (it == postings_.end()) {
        return {};
    }
    return {it->second.data(), it->second.size()};
}

InvertedIndex build_inverted(const Dataset& dataset) {
    InvertedIndex index;
    index.dataset_ = &dataset;
    index.k_ = dataset.k();
    index.size_ = dataset.size();
    for (const Ranking& r : dataset.rankings()) {
        for (ItemId item : r.items()) {
            index.postings_[item].push_back(r.id());
        }
    }
    for (auto& [item, ids] : index.postings_) {
        std::sort(ids.begin(), ids.end());
    }
    return index;
}

QueryOutcome query_invin(const InvertedIndex& index, const Ranking& q,
                         const QueryParams& params) {
    const auto start = std::chrono::steady_clock::now();
    QueryOutcome out;
    if (index.size() == 0) {
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }
    check_query_k(index.k(), q);

    for (ItemId item : q.items()) {
        auto list = index.postings(item);
        out.candidate_ids.insert(out.candidate_ids.end(), list.begin(), list.end());
    }
    sort_unique(out.candidate_ids);
    out.result_ids =
        validate(index.dataset(), out.candidate_ids, q, params.theta_d);
    out.distance_calls = out.candidate_ids.size();
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

QueryOutcome query_invin_drop(const InvertedIndex& index, const Ranking& q,
                              const QueryParams& params) {
    const auto start = std::chrono::steady_clock::now();
    QueryOutcome out;
    if (index.size() == 0) {
        out.elapsed = std::chrono::steady_clock::now() - start;
        return out;
    }
    check_query_k(index.k(), q);

    const std::uint32_t k = index.k();
    const std::uint32_t overlap_floor = min_overlap(k, params.theta_d);
    const std::uint32_t lists_to_scan = k - overlap_floor + 1;

    std::vector<RankingId> seen;
    for (std::uint32_t p = 0; p < lists_to_scan; ++p) {
        auto list = index.postings(q.items()[p]);
        seen.insert(seen.end(), list.begin(), list.end());
    }
    sort_unique(seen);

    // Exact overlap against q; anything below the floor cannot reach theta_d.
    const Dataset& dataset = index.dataset();
    for (RankingId id : seen) {
        if (overlap(*dataset.find(id), q) >= overlap_floor) {
            out.candidate_ids.push_back(id);
        }
    }
    out.result_ids = validate(dataset, out.candidate_ids, q, params.theta_d);
    out.distance_calls = out.candidate_ids.size();
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

}  // namespace tausearch
