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

#include "tausearch/core.hpp"

#include <algorithm>

namespace tausearch {

Ranking::Ranking(RankingId id, std::vector<ItemId> items)
    : id_(id), items_(std::move(items)) {
    if (items_.empty()) {
        throw EmptyRankingError("ranking " + std::to_string(id) + " is empty");
    }
    sorted_ = items_;
    std::sort(sorted_.begin(), sorted_.end());
    if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
        throw DuplicateItemError("ranking " + std::to_string(id) +
                                 " repeats an item");
    }
}

bool Ranking::contains(ItemId item) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), item);
}

std::uint32_t Ranking::rank_of(ItemId item) const {
    for (std::size_t p = 0; p < items_.size(); ++p) {
        if (items_[p] == item) {
            return static_cast<std::uint32_t>(p + 1);
        }
    }
    return 0;
}

Ranking make_ranking(RankingId id, std::vector<ItemId> items) {
    return Ranking(id, std::move(items));
}

std::uint32_t overlap(const Ranking& a, const Ranking& b) {
    const auto& sa = a.sorted_items();
    const auto& sb = b.sorted_items();
    std::uint32_t common = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] < sb[j]) {
            ++i;
        } else if (sb[j] < sa[i]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

Dataset::Dataset(std::vector<Ranking> rankings) : rankings_(std::move(rankings)) {
    if (rankings_.empty()) {
        throw Error("dataset has no rankings");
    }
    k_ = rankings_.front().k();
    init();
}

Dataset::Dataset(std::uint32_t k, std::vector<Ranking> rankings)
    : k_(k), rankings_(std::move(rankings)) {
    init();
}

void Dataset::init() {
    position_of_.reserve(rankings_.size());
    for (std::size_t pos = 0; pos < rankings_.size(); ++pos) {
        const Ranking& r = rankings_[pos];
        if (r.k() != k_) {
            throw Error("ranking " + std::to_string(r.id()) + " has length " +
                        std::to_string(r.k()) + ", dataset k is " +
                        std::to_string(k_));
        }
        if (!position_of_.emplace(r.id(), pos).second) {
            throw Error("duplicate ranking id " + std::to_string(r.id()));
        }
        domain_.insert(domain_.end(), r.sorted_items().begin(),
                       r.sorted_items().end());
    }
    std::sort(domain_.begin(), domain_.end());
    domain_.erase(std::unique(domain_.begin(), domain_.end()), domain_.end());
}

const Ranking* Dataset::find(RankingId id) const {
    auto it = position_of_.find(id);
    return it == position_of_.end() ? nullptr : &rankings_[it->second];
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::InvIn:
            return "invin";
        case Method::InvInDrop:
            return "invin-drop";
        case Method::Scheme1:
            return "scheme1";
        case Method::Scheme2:
            return "scheme2";
        case Method::Oracle:
            return "oracle";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : {Method::InvIn, Method::InvInDrop, Method::Scheme1,
                     Method::Scheme2, Method::Oracle}) {
        if (method_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

QueryParams QueryParams::for_k(double theta, std::uint32_t k, unsigned l,
                               std::uint64_t seed, Method method) {
    if (theta < 0.0 || theta >= 1.0) {
        throw Error("theta must lie in [0, 1), got " + std::to_string(theta));
    }
    QueryParams p;
    p.theta = theta;
    p.theta_d = theta * static_cast<double>(k) * static_cast<double>(k);
    p.l = l;
    p.seed = seed;
    p.method = method;
    return p;
}

}  // namespace tausearch
