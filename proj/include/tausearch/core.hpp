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

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tausearch {

using ItemId = std::uint32_t;
using RankingId = std::uint32_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DuplicateItemError : Error {
    using Error::Error;
};
struct EmptyRankingError : Error {
    using Error::Error;
};
struct KMismatchError : Error {
    using Error::Error;
};
struct LTooLargeError : Error {
    using Error::Error;
};

/// A top-k list: an ordered sequence of k distinct items. The leftmost item
/// has rank 1. Immutable after construction.
class Ranking {
public:
    Ranking() = default;

    /// Throws EmptyRankingError / DuplicateItemError on invalid input.
    Ranking(RankingId id, std::vector<ItemId> items);

    RankingId id() const { return id_; }
    std::uint32_t k() const { return static_cast<std::uint32_t>(items_.size()); }
    const std::vector<ItemId>& items() const { return items_; }
    const std::vector<ItemId>& sorted_items() const { return sorted_; }

    bool contains(ItemId item) const;

    /// 1-based rank of an item, 0 if the item is absent.
    std::uint32_t rank_of(ItemId item) const;

private:
    RankingId id_ = 0;
    std::vector<ItemId> items_;
    std::vector<ItemId> sorted_;
};

Ranking make_ranking(RankingId id, std::vector<ItemId> items);

/// Number of items the two rankings have in common.
std::uint32_t overlap(const Ranking& a, const Ranking& b);

/// A collection of rankings sharing one list length k, plus the induced
/// global item domain.
class Dataset {
public:
    Dataset() = default;

    /// Infers k from the first ranking; throws Error on an empty input,
    /// nonuniform lengths, or duplicate ranking ids.
    explicit Dataset(std::vector<Ranking> rankings);

    /// Explicit k; permits an empty dataset.
    Dataset(std::uint32_t k, std::vector<Ranking> rankings);

    std::uint32_t k() const { return k_; }
    std::size_t size() const { return rankings_.size(); }
    bool empty() const { return rankings_.empty(); }
    const std::vector<Ranking>& rankings() const { return rankings_; }

    /// Sorted union of all member item sets.
    const std::vector<ItemId>& domain() const { return domain_; }

    const Ranking* find(RankingId id) const;

private:
    void init();

    std::uint32_t k_ = 0;
    std::vector<Ranking> rankings_;
    std::vector<ItemId> domain_;
    std::unordered_map<RankingId, std::size_t> position_of_;
};

enum class Method { InvIn, InvInDrop, Scheme1, Scheme2, Oracle };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// Per-query knobs. theta is the normalized threshold in [0,1); theta_d is
/// the non-normalized threshold theta * k^2 used against the integer-valued
/// distance.
struct QueryParams {
    double theta = 0.0;
    double theta_d = 0.0;
    unsigned l = 1;  // number of pair lookups; 0 requests the overlap-bound budget
    std::uint64_t seed = 0;
    Method method = Method::Oracle;

    static QueryParams for_k(double theta, std::uint32_t k, unsigned l,
                             std::uint64_t seed, Method method);
};

/// What one query returned: validated results, the pre-validation candidate
/// set, and bookkeeping. Both id vectors are sorted ascending.
struct QueryOutcome {
    std::vector<RankingId> result_ids;
    std::vector<RankingId> candidate_ids;
    std::size_t distance_calls = 0;
    std::chrono::nanoseconds elapsed{0};
};

}  // namespace tausearch
