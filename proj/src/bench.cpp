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

#include "tausearch/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <ostream>

#include "tausearch/distance.hpp"
#include "tausearch/invindex.hpp"
#include "tausearch/pairindex.hpp"
#include "tausearch/rng.hpp"

namespace tausearch {

std::vector<std::uint64_t> distances_to_all(const Dataset& dataset,
                                            const Ranking& q) {
    std::vector<std::uint64_t> distances(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        distances[i] = kendall_k0(dataset.rankings()[i], q);
    }
    return distances;
}

std::vector<RankingId> ground_truth(const Dataset& dataset, const Ranking& q,
                                    double theta_d) {
    std::vector<RankingId> truth;
    for (const Ranking& r : dataset.rankings()) {
        if (static_cast<double>(kendall_k0(r, q)) <= theta_d) {
            truth.push_back(r.id());
        }
    }
    std::sort(truth.begin(), truth.end());
    return truth;
}

std::vector<RankingId> ground_truth_parallel(const Dataset& dataset,
                                             const Ranking& q, double theta_d) {
    const auto n = static_cast<std::int64_t>(dataset.size());
    std::vector<char> hit(dataset.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        hit[i] = static_cast<double>(kendall_k0(dataset.rankings()[i], q)) <=
                 theta_d;
    }
    std::vector<RankingId> truth;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        if (hit[i]) {
            truth.push_back(dataset.rankings()[i].id());
        }
    }
    std::sort(truth.begin(), truth.end());
    return truth;
}

double recall_of(const std::vector<RankingId>& retrieved,
                 const std::vector<RankingId>& truth) {
    if (truth.empty()) {
        return 1.0;
    }
    std::size_t found = 0;
    auto it = retrieved.begin();
    for (RankingId id : truth) {
        it = std::lower_bound(it, retrieved.end(), id);
        if (it != retrieved.end() && *it == id) {
            ++found;
            ++it;
        }
    }
    return static_cast<double>(found) / static_cast<double>(truth.size());
}

QueryOutcome query_oracle(const Dataset& dataset, const Ranking& q,
                          const QueryParams& params) {
    const auto start = std::chrono::steady_clock::now();
    QueryOutcome out;
    out.candidate_ids.reserve(dataset.size());
    for (const Ranking& r : dataset.rankings()) {
        out.candidate_ids.push_back(r.id());
        if (static_cast<double>(kendall_k0(r, q)) <= params.theta_d) {
            out.result_ids.push_back(r.id());
        }
    }
    std::sort(out.candidate_ids.begin(), out.candidate_ids.end());
    std::sort(out.result_ids.begin(), out.result_ids.end());
    out.distance_calls = dataset.size();
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

namespace {

bool method_takes_l(Method m) {
    return m == Method::Scheme1 || m == Method::Scheme2;
}

struct CellAccumulator {
    double candidates = 0.0;
    double validated = 0.0;
    double recall = 0.0;
    double micros = 0.0;
};

}  // namespace

const char* const kCsvHeader =
    "dataset,method,k,theta,l,queries,avg_candidates,avg_validated,recall,"
    "avg_query_us";

std::vector<BenchRow> run_grid(const Dataset& dataset,
                               const std::vector<Ranking>& queries,
                               const ExperimentGrid& grid,
                               const std::string& dataset_label) {
    for (const Ranking& q : queries) {
        if (q.k() != dataset.k()) {
            throw KMismatchError("query " + std::to_string(q.id()) +
                                 " does not match dataset k");
        }
    }
    const std::uint32_t k = dataset.k();
    const auto nq = static_cast<std::int64_t>(queries.size());
    const unsigned pair_count = k * (k - 1) / 2;
    for (double theta : grid.thetas) {
        if (theta < 0.0 || theta >= 1.0) {
            throw Error("grid theta must lie in [0, 1)");
        }
    }

    const bool wants_inverted =
        std::any_of(grid.methods.begin(), grid.methods.end(), [](Method m) {
            return m == Method::InvIn || m == Method::InvInDrop;
        });
    const bool wants_unsorted = std::count(grid.methods.begin(),
                                           grid.methods.end(), Method::Scheme1);
    const bool wants_sorted = std::count(grid.methods.begin(),
                                         grid.methods.end(), Method::Scheme2);
    if ((wants_unsorted || wants_sorted) && pair_count == 0) {
        throw Error("pairwise schemes need k >= 2");
    }

    InvertedIndex inverted;
    PairIndex unsorted_pairs;
    PairIndex sorted_pairs;
    if (wants_inverted) {
        inverted = build_inverted(dataset);
    }
    if (wants_unsorted) {
        unsorted_pairs = build_pair_index(dataset, PairVariant::Unsorted);
    }
    if (wants_sorted) {
        sorted_pairs = build_pair_index(dataset, PairVariant::Sorted);
    }

    std::vector<std::uint64_t> seeds(queries.size());
    for (std::size_t i = 0; i < queries.size(); ++i) {
        seeds[i] = derive_seed(grid.seed, i);
    }

    const bool parallel = grid.threads != 1;

    // Ground truth once per (query, theta), shared by every method row.
    std::vector<std::vector<std::vector<RankingId>>> truths(grid.thetas.size());
    for (auto& per_theta : truths) {
        per_theta.resize(queries.size());
    }
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::int64_t i = 0; i < nq; ++i) {
        const auto distances = distances_to_all(dataset, queries[i]);
        for (std::size_t t = 0; t < grid.thetas.size(); ++t) {
            const double theta_d = grid.thetas[t] * static_cast<double>(k) * k;
            std::vector<RankingId>& truth = truths[t][i];
            for (std::size_t r = 0; r < distances.size(); ++r) {
                if (static_cast<double>(distances[r]) <= theta_d) {
                    truth.push_back(dataset.rankings()[r].id());
                }
            }
            std::sort(truth.begin(), truth.end());
        }
    }

    auto run_query = [&](Method method, const Ranking& q,
                         const QueryParams& params) {
        switch (method) {
            case Method::InvIn:
                return query_invin(inverted, q, params);
            case Method::InvInDrop:
                return query_invin_drop(inverted, q, params);
            case Method::Scheme1:
                return query_lsh(unsorted_pairs, q, params);
            case Method::Scheme2:
                return query_lsh(sorted_pairs, q, params);
            case Method::Oracle:
                return query_oracle(dataset, q, params);
        }
        throw Error("unreachable method");
    };

    std::vector<BenchRow> rows;
    std::vector<CellAccumulator> cells(queries.size());
    auto run_cell = [&](Method method, std::size_t theta_slot, long requested_l,
                        unsigned effective_l) {
        const double theta = grid.thetas[theta_slot];
        const std::size_t warmup = std::min<std::size_t>(10, queries.size());
        for (std::size_t i = 0; i < warmup; ++i) {
            run_query(method, queries[i],
                      QueryParams::for_k(theta, k, effective_l, seeds[i], method));
        }
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
        for (std::int64_t i = 0; i < nq; ++i) {
            const auto params =
                QueryParams::for_k(theta, k, effective_l, seeds[i], method);
            const QueryOutcome outcome = run_query(method, queries[i], params);
            CellAccumulator& cell = cells[i];
            cell.candidates = static_cast<double>(outcome.candidate_ids.size());
            cell.validated = static_cast<double>(outcome.result_ids.size());
            cell.recall = recall_of(outcome.result_ids, truths[theta_slot][i]);
            cell.micros =
                std::chrono::duration<double, std::micro>(outcome.elapsed)
                    .count();
        }
        BenchRow row;
        row.dataset = dataset_label;
        row.method = method;
        row.k = k;
        row.theta = theta;
        row.l = requested_l;
        row.queries = static_cast<std::uint32_t>(queries.size());
        for (const CellAccumulator& cell : cells) {
            row.avg_candidates += cell.candidates;
            row.avg_validated += cell.validated;
            row.recall += cell.recall;
            row.avg_query_us += cell.micros;
        }
        if (!queries.empty()) {
            const auto n = static_cast<double>(queries.size());
            row.avg_candidates /= n;
            row.avg_validated /= n;
            row.recall /= n;
            row.avg_query_us /= n;
        }
        rows.push_back(std::move(row));
    };

    for (std::size_t t = 0; t < grid.thetas.size(); ++t) {
        for (Method method : grid.methods) {
            if (!method_takes_l(method)) {
                run_cell(method, t, -1, 1);
                continue;
            }
            for (unsigned l : grid.ls) {
                unsigned effective_l = l;
                if (l > pair_count) {
                    effective_l = pair_count;
                    std::cerr << "warning: l=" << l << " clamped to "
                              << pair_count << " (all pairs at k=" << k << ")\n";
                }
                run_cell(method, t, static_cast<long>(l), effective_l);
            }
        }
    }
    return rows;
}

namespace {

std::string format_sig(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << kCsvHeader << '\n';
    for (const BenchRow& row : rows) {
        out << row.dataset << ',' << method_name(row.method) << ',' << row.k
            << ',' << format_sig(row.theta) << ',';
        if (row.l >= 0) {
            out << row.l;
        }
        out << ',' << row.queries << ',' << format_sig(row.avg_candidates)
            << ',' << format_sig(row.avg_validated) << ','
            << format_sig(row.recall) << ',' << format_sig(row.avg_query_us)
            << '\n';
    }
}

}  // namespace tausearch
