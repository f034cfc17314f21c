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

#include "tausearch/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tausearch/bench.hpp"
#include "tausearch/data.hpp"
#include "tausearch/distance.hpp"
#include "tausearch/invindex.hpp"
#include "tausearch/lshmodel.hpp"
#include "tausearch/pairindex.hpp"

namespace tausearch {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return out;
}

std::string format_sig(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

struct GenerateOptions {
    GeneratorSpec spec;
    std::string dist = "uniform";
    std::string out_path;
};

int cmd_generate(const GenerateOptions& opt) {
    GeneratorSpec spec = opt.spec;
    spec.popularity =
        opt.dist == "zipf" ? Popularity::Zipf : Popularity::Uniform;
    const Dataset dataset = generate(spec);

    auto out = open_output(opt.out_path);
    write_rankings(out, dataset);
    out.flush();
    if (!out) {
        throw IoError("write to '" + opt.out_path + "' failed");
    }
    std::cout << "n " << dataset.size() << "\nk " << dataset.k() << "\ndomain "
              << dataset.domain().size() << "\ndist " << opt.dist;
    if (spec.popularity == Popularity::Zipf) {
        std::cout << '(' << format_sig(spec.zipf_exponent) << ')';
    }
    std::cout << '\n';
    return 0;
}

struct QueryOptions {
    std::string data_path;
    std::string query_text;
    double theta = 0.1;
    std::string method = "oracle";
    unsigned l = 0;  // 0 = overlap-bound budget
    std::uint64_t seed = 1;
};

// Indices are rebuilt per invocation; the build cost goes to stderr so the
// result listing stays machine-readable.
void report_build_time(std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "index build: " << format_sig(elapsed.count()) << " ms\n";
}

// Query items are labels resolved through the dataset dictionary; unknown
// labels get fresh ids so they simply match nothing.
Ranking parse_query(const std::string& text, const ParsedRankings& parsed) {
    std::unordered_map<std::string, ItemId> lookup;
    lookup.reserve(parsed.item_labels.size());
    for (std::size_t i = 0; i < parsed.item_labels.size(); ++i) {
        lookup.emplace(parsed.item_labels[i], static_cast<ItemId>(i));
    }
    ItemId next_fresh = static_cast<ItemId>(parsed.item_labels.size());

    std::vector<ItemId> items;
    std::istringstream tokens(text);
    std::string token;
    while (tokens >> token) {
        auto it = lookup.find(token);
        if (it != lookup.end()) {
            items.push_back(it->second);
        } else {
            auto [fresh_it, _] = lookup.emplace(token, next_fresh++);
            items.push_back(fresh_it->second);
        }
    }
    if (items.empty()) {
        throw Error("query has no items");
    }
    return make_ranking(0, std::move(items));
}

int cmd_query(const QueryOptions& opt) {
    const auto method = method_from_name(opt.method);
    if (!method) {
        throw Error("unknown method '" + opt.method + "'");
    }
    auto in = open_input(opt.data_path);
    const ParsedRankings parsed = parse_rankings(in);
    const Dataset& dataset = parsed.dataset;

    const Ranking q = parse_query(opt.query_text, parsed);
    if (q.k() != dataset.k()) {
        throw Error("query has " + std::to_string(q.k()) + " items, dataset k is " +
                    std::to_string(dataset.k()));
    }
    const QueryParams params =
        QueryParams::for_k(opt.theta, dataset.k(), opt.l, opt.seed, *method);

    const auto build_start = std::chrono::steady_clock::now();
    QueryOutcome outcome;
    switch (*method) {
        case Method::InvIn:
        case Method::InvInDrop: {
            const InvertedIndex index = build_inverted(dataset);
            report_build_time(build_start);
            outcome = *method == Method::InvIn
                          ? query_invin(index, q, params)
                          : query_invin_drop(index, q, params);
            break;
        }
        case Method::Scheme1:
        case Method::Scheme2: {
            const PairIndex index = build_pair_index(
                dataset, *method == Method::Scheme1 ? PairVariant::Unsorted
                                                    : PairVariant::Sorted);
            report_build_time(build_start);
            outcome = query_lsh(index, q, params);
            break;
        }
        case Method::Oracle:
            outcome = query_oracle(dataset, q, params);
            break;
    }

    std::vector<std::pair<std::uint64_t, RankingId>> listed;
    listed.reserve(outcome.result_ids.size());
    for (RankingId id : outcome.result_ids) {
        listed.emplace_back(kendall_k0(*dataset.find(id), q), id);
    }
    std::sort(listed.begin(), listed.end());
    for (const auto& [distance, id] : listed) {
        std::cout << parsed.ranking_labels[id] << '\t' << distance << '\n';
    }
    std::cout << "candidates " << outcome.candidate_ids.size() << '\n';
    return 0;
}

struct BenchOptions {
    std::string data_path;
    std::string label;
    std::vector<double> thetas{0.1, 0.2, 0.3};
    std::vector<unsigned> ls{1, 3, 6, 10};
    std::vector<std::string> methods{"invin", "invin-drop", "scheme1", "scheme2"};
    std::uint32_t queries = 1000;
    std::string query_mode = "perturbed";
    unsigned swaps = 2;
    unsigned replacements = 1;
    std::uint64_t seed = 42;
    int threads = 0;
    std::string out_path;
};

int cmd_bench(const BenchOptions& opt) {
    auto in = open_input(opt.data_path);
    const ParsedRankings parsed = parse_rankings(in);
    const Dataset& dataset = parsed.dataset;

    QueryWorkloadSpec workload;
    workload.count = opt.queries;
    workload.mode = opt.query_mode == "uniform"
                        ? QueryWorkloadSpec::Mode::UniformRandom
                        : QueryWorkloadSpec::Mode::Perturbed;
    workload.swaps = opt.swaps;
    workload.replacements = opt.replacements;
    workload.seed = opt.seed;
    const std::vector<Ranking> queries = make_queries(dataset, workload);

    ExperimentGrid grid;
    for (const std::string& name : opt.methods) {
        const auto method = method_from_name(name);
        if (!method) {
            throw Error("unknown method '" + name + "'");
        }
        grid.methods.push_back(*method);
    }
    grid.thetas = opt.thetas;
    grid.ls = opt.ls;
    grid.query_count = opt.queries;
    grid.seed = opt.seed;
    grid.threads = opt.threads;

    std::string label = opt.label;
    if (label.empty()) {
        const auto slash = opt.data_path.find_last_of('/');
        label = opt.data_path.substr(slash == std::string::npos ? 0 : slash + 1);
        const auto dot = label.find_last_of('.');
        if (dot != std::string::npos) {
            label = label.substr(0, dot);
        }
    }

    std::cerr << "bench: " << dataset.size() << " rankings, k=" << dataset.k()
              << ", " << queries.size() << " queries\n";
    const auto rows = run_grid(dataset, queries, grid, label);

    auto out = open_output(opt.out_path);
    write_csv(out, rows);
    out.flush();
    if (!out) {
        throw IoError("write to '" + opt.out_path + "' failed");
    }
    std::cerr << "bench: wrote " << rows.size() << " rows to " << opt.out_path
              << '\n';
    return 0;
}

struct AnalyzeOptions {
    std::uint32_t k = 10;
    std::vector<double> thetas{0.1, 0.2, 0.3};
    std::vector<unsigned> ls{1, 3, 6, 10};
    std::string out_path;
};

int cmd_analyze(const AnalyzeOptions& opt) {
    if (opt.k == 0) {
        throw Error("k must be positive");
    }
    for (double theta : opt.thetas) {
        if (theta < 0.0 || theta >= 1.0) {
            throw Error("theta must lie in [0, 1)");
        }
    }
    for (unsigned l : opt.ls) {
        if (l == 0) {
            throw Error("l must be positive");
        }
    }

    std::ostringstream csv;
    csv << "k,theta,scheme,m,l,p1,candidate_prob,f_ratio\n";
    for (double theta : opt.thetas) {
        const double theta_d =
            theta * static_cast<double>(opt.k) * static_cast<double>(opt.k);
        const double ratio = f_ratio(opt.k, theta_d);
        for (Scheme scheme : {Scheme::One, Scheme::Two}) {
            const double p1 = scheme == Scheme::One ? p1_scheme1(opt.k, theta_d)
                                                    : p1_scheme2(opt.k, theta_d);
            const unsigned m = scheme == Scheme::One ? 2 : 1;
            for (unsigned l : opt.ls) {
                csv << opt.k << ',' << format_sig(theta) << ','
                    << (scheme == Scheme::One ? 1 : 2) << ',' << m << ',' << l
                    << ',' << format_sig(p1) << ','
                    << format_sig(candidate_probability(p1, m, l)) << ','
                    << format_sig(ratio) << '\n';
            }
        }
    }
    if (opt.out_path.empty()) {
        std::cout << csv.str();
    } else {
        auto out = open_output(opt.out_path);
        out << csv.str();
        out.flush();
        if (!out) {
            throw IoError("write to '" + opt.out_path + "' failed");
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"similarity search over top-k rankings"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate_cmd =
        app.add_subcommand("generate", "write a synthetic rankings file");
    generate_cmd->add_option("--n", gen.spec.n, "number of rankings")->required();
    generate_cmd->add_option("--k", gen.spec.k, "ranking length")->required();
    generate_cmd->add_option("--domain", gen.spec.domain_size, "distinct items")
        ->required();
    generate_cmd->add_option("--dist", gen.dist, "item popularity")
        ->check(CLI::IsMember({"uniform", "zipf"}))
        ->default_val("uniform");
    generate_cmd->add_option("--zipf-s", gen.spec.zipf_exponent,
                             "zipf exponent (with --dist zipf)");
    generate_cmd->add_option("--seed", gen.spec.seed, "generator seed");
    generate_cmd->add_option("--out", gen.out_path, "output path")->required();

    QueryOptions query;
    auto* query_cmd = app.add_subcommand("query", "run a single query");
    query_cmd->add_option("--data", query.data_path, "rankings file")->required();
    query_cmd->add_option("--q", query.query_text, "query items, space separated")
        ->required();
    query_cmd->add_option("--theta", query.theta, "normalized threshold in [0,1)")
        ->required();
    query_cmd->add_option("--method", query.method, "search method")
        ->check(CLI::IsMember(
            {"invin", "invin-drop", "scheme1", "scheme2", "oracle"}));
    query_cmd->add_option("--l", query.l,
                          "pair lookups (schemes); 0 = overlap-bound budget");
    query_cmd->add_option("--seed", query.seed, "pair-selection seed");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "run an experiment grid");
    bench_cmd->add_option("--data", bench.data_path, "rankings file")->required();
    bench_cmd->add_option("--label", bench.label, "dataset label in the CSV");
    bench_cmd->add_option("--thetas", bench.thetas, "normalized thresholds")
        ->delimiter(',');
    bench_cmd->add_option("--ls", bench.ls, "l values for the schemes")
        ->delimiter(',');
    bench_cmd->add_option("--methods", bench.methods, "methods to run")
        ->delimiter(',');
    bench_cmd->add_option("--queries", bench.queries, "workload size");
    bench_cmd->add_option("--query-mode", bench.query_mode, "workload mode")
        ->check(CLI::IsMember({"perturbed", "uniform"}));
    bench_cmd->add_option("--swaps", bench.swaps, "adjacent swaps per query");
    bench_cmd->add_option("--replacements", bench.replacements,
                          "item replacements per query");
    bench_cmd->add_option("--seed", bench.seed, "workload + selection seed");
    bench_cmd->add_option("--threads", bench.threads,
                          "query threads; 1 = serial, 0 = all");
    bench_cmd->add_option("--out", bench.out_path, "CSV output path")->required();

    AnalyzeOptions analyze;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "emit analytic collision-model curves");
    analyze_cmd->add_option("--k", analyze.k, "ranking length")->required();
    analyze_cmd->add_option("--thetas", analyze.thetas, "normalized thresholds")
        ->delimiter(',');
    analyze_cmd->add_option("--ls", analyze.ls, "l values")->delimiter(',');
    analyze_cmd->add_option("--out", analyze.out_path,
                            "CSV output path (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("tausearch");
    for (const std::string& arg : args) {
        argv.push_back(arg.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (generate_cmd->parsed()) {
            return cmd_generate(gen);
        }
        if (query_cmd->parsed()) {
            return cmd_query(query);
        }
        if (bench_cmd->parsed()) {
            return cmd_bench(bench);
        }
        return cmd_analyze(analyze);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? argc - 1 : 0);
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args);
}

}  // namespace tausearch
