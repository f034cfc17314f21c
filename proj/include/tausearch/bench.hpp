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

/// One benchmark sweep: every method crossed with every theta, and with
/// every l for the methods that take one. threads = 1 forces serial query
/// execution (stable latencies); 0 uses all available threads.
struct ExperimentGrid {
    std::vector<Method> methods;
    std::vector<double> thetas;
    std::vector<unsigned> ls;
    std::uint32_t query_count = 0;
    std::uint64_t seed = 0;
    int threads = 0;
};

/// Aggregated metrics of one grid cell. l < 0 means the method takes no l.
/// Everything except avg_query_us is reproducible bit-for-bit given seeds.
struct BenchRow {
    std::string dataset;
    Method method = Method::InvIn;
    std::uint32_t k = 0;
    double theta = 0.0;
    long l = -1;
    std::uint32_t queries = 0;
    double avg_candidates = 0.0;
    double avg_validated = 0.0;
    double recall = 0.0;
    double avg_query_us = 0.0;
};

/// Exact distance from q to every ranking, in dataset order. Serial kernel;
/// the reference the parallel paths are checked against.
std::vector<std::uint64_t> distances_to_all(const Dataset& dataset,
                                            const Ranking& q);

/// The definitional result set: ids of all rankings within theta_d of q,
/// by linear scan. Sorted ascending.
std::vector<RankingId> ground_truth(const Dataset& dataset, const Ranking& q,
                                    double theta_d);

/// Same result set as ground_truth, scanning rankings across threads.
std::vector<RankingId> ground_truth_parallel(const Dataset& dataset,
                                             const Ranking& q, double theta_d);

/// |retrieved intersect truth| / |truth|; 1 when truth is empty. Both inputs
/// sorted ascending.
double recall_of(const std::vector<RankingId>& retrieved,
                 const std::vector<RankingId>& truth);

/// The Oracle method as a query: validates every ranking, so candidates are
/// the whole dataset and recall is 1 by construction.
QueryOutcome query_oracle(const Dataset& dataset, const Ranking& q,
                          const QueryParams& params);

/// Runs the grid over a shared query workload. Ground truth is computed once
/// per (query, theta) and reused by every method; per-query pair-selection
/// seeds derive from grid.seed, so scheme rows are pairwise-aligned. Index
/// build time is excluded from the timing column; 10 warm-up queries
/// precede each cell's measurement.
std::vector<BenchRow> run_grid(const Dataset& dataset,
                               const std::vector<Ranking>& queries,
                               const ExperimentGrid& grid,
                               const std::string& dataset_label);

extern const char* const kCsvHeader;

/// CSV with the fixed header, one row per cell, floats at 6 significant
/// digits, the l column empty for methods without one.
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace tausearch
