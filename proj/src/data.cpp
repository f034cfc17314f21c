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

#include "tausearch/data.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "tausearch/rng.hpp"

namespace tausearch {

namespace {

struct Interner {
    std::unordered_map<std::string, std::uint32_t> ids;
    std::vector<std::string> labels;

    std::uint32_t intern(const std::string& label) {
        auto [it, inserted] =
            ids.emplace(label, static_cast<std::uint32_t>(labels.size()));
        if (inserted) {
            labels.push_back(label);
        }
        return it->second;
    }
};

}  // namespace

ParsedRankings parse_rankings(std::istream& in) {
    Interner items;
    Interner ranking_ids;
    std::vector<Ranking> rankings;
    std::uint32_t k = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(line_no, "missing TAB between ranking id and items");
        }
        const std::string id_token = line.substr(0, tab);
        if (id_token.empty()) {
            throw ParseError(line_no, "empty ranking id");
        }
        if (ranking_ids.ids.count(id_token) != 0) {
            throw DuplicateRankingIdError(line_no,
                                          "ranking id '" + id_token + "' repeats");
        }

        std::vector<ItemId> row;
        std::istringstream tokens(line.substr(tab + 1));
        std::string token;
        while (tokens >> token) {
            const ItemId item = items.intern(token);
            if (std::find(row.begin(), row.end(), item) != row.end()) {
                throw DuplicateItemInLineError(
                    line_no, "item '" + token + "' repeats within the ranking");
            }
            row.push_back(item);
        }
        if (row.empty()) {
            throw ParseError(line_no, "ranking has no items");
        }
        if (k == 0) {
            k = static_cast<std::uint32_t>(row.size());
        } else if (row.size() != k) {
            throw InconsistentKError(
                line_no, "ranking has " + std::to_string(row.size()) +
                             " items, expected " + std::to_string(k));
        }
        const RankingId id = ranking_ids.intern(id_token);
        rankings.emplace_back(id, std::move(row));
    }
    if (rankings.empty()) {
        throw EmptyDatasetError("input contains no rankings");
    }
    return ParsedRankings{Dataset(k, std::move(rankings)),
                          std::move(ranking_ids.labels),
                          std::move(items.labels)};
}

void write_rankings(std::ostream& out, const Dataset& dataset,
                    const std::vector<std::string>* ranking_labels,
                    const std::vector<std::string>* item_labels) {
    for (const Ranking& r : dataset.rankings()) {
        if (ranking_labels != nullptr) {
            out << (*ranking_labels)[r.id()];
        } else {
            out << r.id();
        }
        char sep = '\t';
        for (ItemId item : r.items()) {
            out << sep;
            if (item_labels != nullptr) {
                out << (*item_labels)[item];
            } else {
                out << item;
            }
            sep = ' ';
        }
        out << '\n';
    }
}

namespace {

class ItemSampler {
public:
    ItemSampler(const GeneratorSpec& spec) : spec_(spec) {
        if (spec.popularity == Popularity::Zipf) {
            cumulative_.reserve(spec.domain_size);
            double total = 0.0;
            for (std::uint32_t i = 0; i < spec.domain_size; ++i) {
                total += std::pow(static_cast<double>(i) + 1.0,
                                  -spec.zipf_exponent);
                cumulative_.push_back(total);
            }
        }
    }

    ItemId draw(Rng& rng) const {
        if (spec_.popularity == Popularity::Uniform) {
            return rng.next_u32(spec_.domain_size);
        }
        const double u = rng.next_double() * cumulative_.back();
        const auto it =
            std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        return static_cast<ItemId>(
            std::min<std::size_t>(it - cumulative_.begin(),
                                  cumulative_.size() - 1));
    }

private:
    const GeneratorSpec& spec_;
    std::vector<double> cumulative_;
};

// Draw k distinct items, rejecting repeats. Fine while k is small relative
// to the effective domain.
std::vector<ItemId> draw_distinct(const ItemSampler& sampler, Rng& rng,
                                  std::uint32_t k) {
    std::vector<ItemId> picked;
    picked.reserve(k);
    while (picked.size() < k) {
        const ItemId candidate = sampler.draw(rng);
        if (std::find(picked.begin(), picked.end(), candidate) == picked.end()) {
            picked.push_back(candidate);
        }
    }
    return picked;
}

}  // namespace

Dataset generate(const GeneratorSpec& spec) {
    if (spec.domain_size < spec.k) {
        throw DomainTooSmallError("domain of " + std::to_string(spec.domain_size) +
                                  " items cannot host rankings of length " +
                                  std::to_string(spec.k));
    }
    if (spec.n == 0 || spec.k == 0) {
        throw Error("generator needs n >= 1 and k >= 1");
    }
    ItemSampler sampler(spec);
    Rng rng(spec.seed);
    std::vector<Ranking> rankings;
    rankings.reserve(spec.n);
    for (std::uint32_t id = 0; id < spec.n; ++id) {
        rankings.emplace_back(id, draw_distinct(sampler, rng, spec.k));
    }
    return Dataset(spec.k, std::move(rankings));
}

std::vector<Ranking> make_queries(const Dataset& dataset,
                                  const QueryWorkloadSpec& spec) {
    if (dataset.empty()) {
        throw Error("cannot derive queries from an empty dataset");
    }
    const std::uint32_t k = dataset.k();
    const std::size_t pair_count = static_cast<std::size_t>(k) * (k - 1) / 2;
    if (spec.mode == QueryWorkloadSpec::Mode::Perturbed &&
        spec.swaps + spec.replacements > pair_count + k) {
        throw Error("perturbation budget exceeds k(k-1)/2 + k");
    }

    const auto& domain = dataset.domain();
    Rng rng(spec.seed);
    std::vector<Ranking> queries;
    queries.reserve(spec.count);
    for (std::uint32_t qi = 0; qi < spec.count; ++qi) {
        std::vector<ItemId> items;
        if (spec.mode == QueryWorkloadSpec::Mode::UniformRandom) {
            while (items.size() < k) {
                const ItemId candidate =
                    domain[rng.next_u32(static_cast<std::uint32_t>(domain.size()))];
                if (std::find(items.begin(), items.end(), candidate) ==
                    items.end()) {
                    items.push_back(candidate);
                }
            }
        } else {
            const std::size_t source =
                rng.next_u32(static_cast<std::uint32_t>(dataset.size()));
            items = dataset.rankings()[source].items();
            for (unsigned s = 0; s < spec.swaps && k >= 2; ++s) {
                const std::uint32_t p = rng.next_u32(k - 1);
                std::swap(items[p], items[p + 1]);
            }
            // Replacements need spare domain items; skip when none exist.
            for (unsigned rep = 0;
                 rep < spec.replacements && domain.size() > k; ++rep) {
                const std::uint32_t pos = rng.next_u32(k);
                ItemId fresh;
                do {
                    fresh = domain[rng.next_u32(
                        static_cast<std::uint32_t>(domain.size()))];
                } while (std::find(items.begin(), items.end(), fresh) !=
                         items.end());
                items[pos] = fresh;
            }
        }
        queries.emplace_back(qi, std::move(items));
    }
    return queries;
}

}  // namespace tausearch
