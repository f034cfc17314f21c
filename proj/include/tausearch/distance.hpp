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

#include "tausearch/core.hpp"

namespace tausearch {

struct DomainMismatchError : Error {
    using Error::Error;
};

/// How one unordered item pair relates to a pair of top-k lists.
enum class PairCase {
    BothShared,    // both items in both lists
    OneShared,     // both items in one list, exactly one of them in the other
    CrossOnly,     // each item exclusive to a different list
    SameListOnly,  // both items exclusive to the same list
};

struct PairVerdict {
    PairCase case_tag;
    std::uint32_t penalty;  // 0 or 1
};

/// Classifies the unordered pair {i, j} against rankings a and b and assigns
/// its disagreement penalty:
///  - BothShared pairs penalize when the two lists order them differently.
///  - OneShared pairs penalize when the unshared item is ranked ahead of the
///    shared one in the list containing both (applied symmetrically to both
///    lists).
///  - CrossOnly pairs always penalize; SameListOnly pairs never do.
/// Requires each item to occur in at least one of the two rankings.
PairVerdict classify_pair(ItemId i, ItemId j, const Ranking& a, const Ranking& b);

/// Number of discordant pairs between two rankings over the same item set.
/// Throws DomainMismatchError when the item sets differ.
std::uint64_t kendall_complete(const Ranking& r1, const Ranking& r2);

/// Penalty-zero generalization to top-k lists with possibly different item
/// sets. Literal enumeration of every unordered pair over the union domain
/// via classify_pair. Quadratic in the union size; kept permanently as the
/// reference the optimized kernel is tested against.
std::uint64_t kendall_k0_oracle(const Ranking& r1, const Ranking& r2);

/// Same value as kendall_k0_oracle, computed by decomposition: inversions
/// among shared items + misplaced-exclusive counts per list + the
/// all-discordant cross block |A\B|*|B\A|.
std::uint64_t kendall_k0(const Ranking& r1, const Ranking& r2);

/// Smallest distance achievable by two k-rankings sharing n items: (k-n)^2.
std::uint64_t min_distance(std::uint32_t k, std::uint32_t n);

/// Smallest overlap a ranking can have with the query while still being able
/// to meet the threshold: the least integer m with (k-m)^2 <= theta_d.
/// Rankings sharing fewer than this many items are prunable. Requires
/// 0 <= theta_d < k^2.
std::uint32_t min_overlap(std::uint32_t k, double theta_d);

}  // namespace tausearch
