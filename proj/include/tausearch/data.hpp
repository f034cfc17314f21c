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
#include <iosfwd>
#include <string>
#include <vector>

#include "tausearch/core.hpp"

namespace tausearch {

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& cause)
        : Error("line " + std::to_string(line) + ": " + cause), line(line) {}
    std::size_t line;
};
struct InconsistentKError : ParseError {
    using ParseError::ParseError;
};
struct DuplicateRankingIdError : ParseError {
    using ParseError::ParseError;
};
struct DuplicateItemInLineError : ParseError {
    using ParseError::ParseError;
};
struct EmptyDatasetError : Error {
    using Error::Error;
};
struct DomainTooSmallError : Error {
    using Error::Error;
};

enum class Popularity { Uniform, Zipf };

/// Synthetic dataset recipe. Uniform popularity spreads items evenly;
/// Zipf(exponent) concentrates occurrences on low item ids.
struct GeneratorSpec {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t domain_size = 0;
    Popularity popularity = Popularity::Uniform;
    double zipf_exponent = 1.0;
    std::uint64_t seed = 0;
};

/// Query workload recipe. Perturbed mode samples dataset rankings and
/// applies adjacent swaps then item replacements; UniformRandom draws fresh
/// k-subsets of the domain.
struct QueryWorkloadSpec {
    enum class Mode { Perturbed, UniformRandom };

    std::uint32_t count = 0;
    Mode mode = Mode::Perturbed;
    unsigned swaps = 0;
    unsigned replacements = 0;
    std::uint64_t seed = 0;
};

/// Dataset plus the label dictionaries that ingestion built. Internal ids
/// are dense insertion-order integers; labels are the original tokens.
struct ParsedRankings {
    Dataset dataset;
    std::vector<std::string> ranking_labels;  // by ranking id
    std::vector<std::string> item_labels;     // by item id
};

/// Reads the rankings text format: one ranking per line as
/// `<ranking_id><TAB><item_1> <item_2> ... <item_k>`, `#` comment lines
/// allowed, k inferred from the first data line. Item and ranking tokens
/// are arbitrary non-whitespace strings mapped through insertion-ordered
/// dictionaries.
ParsedRankings parse_rankings(std::istream& in);

/// Inverse of parse_rankings. Null label tables fall back to decimal ids.
void write_rankings(std::ostream& out, const Dataset& dataset,
                    const std::vector<std::string>* ranking_labels = nullptr,
                    const std::vector<std::string>* item_labels = nullptr);

/// Deterministic synthetic dataset: n rankings of k distinct items drawn by
/// weighted sampling without replacement under the popularity law. Ranking
/// ids are 0..n-1. Throws DomainTooSmallError when domain_size < k.
Dataset generate(const GeneratorSpec& spec);

/// Deterministic query workload over a dataset; see QueryWorkloadSpec.
std::vector<Ranking> make_queries(const Dataset& dataset,
                                  const QueryWorkloadSpec& spec);

}  // namespace tausearch
