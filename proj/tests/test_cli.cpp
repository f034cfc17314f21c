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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "tausearch/cli.hpp"

using tausearch::run_cli;

namespace {

struct CaptureStdout {
    CaptureStdout() : old(std::cout.rdbuf(buffer.rdbuf())) {}
    ~CaptureStdout() { std::cout.rdbuf(old); }
    std::string text() const { return buffer.str(); }

    std::ostringstream buffer;
    std::streambuf* old;
};

std::string temp_path(const std::string& name) {
    return "/tmp/tausearch_test_" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

void write_example(const std::string& path) {
    std::ofstream out(path);
    out << "t1\t2 5 4 3\nt2\t1 4 7 5\nt3\t0 8 7 5\n";
}

}  // namespace

TEST_CASE("generate writes a deterministic file and a summary") {
    const std::string path = temp_path("gen.txt");
    {
        CaptureStdout capture;
        REQUIRE(run_cli({"generate", "--n", "50", "--k", "5", "--domain", "40",
                         "--dist", "uniform", "--seed", "7", "--out", path}) ==
                0);
        CHECK(capture.text().find("n 50") != std::string::npos);
        CHECK(capture.text().find("k 5") != std::string::npos);
    }
    const std::string first = slurp(path);
    CHECK(std::count(first.begin(), first.end(), '\n') == 50);

    {
        CaptureStdout capture;
        REQUIRE(run_cli({"generate", "--n", "50", "--k", "5", "--domain", "40",
                         "--dist", "uniform", "--seed", "7", "--out", path}) ==
                0);
    }
    CHECK(slurp(path) == first);
    std::remove(path.c_str());
}

TEST_CASE("generate rejects an undersized domain with exit 2") {
    CaptureStdout capture;
    CHECK(run_cli({"generate", "--n", "10", "--k", "10", "--domain", "5",
                   "--out", temp_path("never.txt")}) == 2);
}

TEST_CASE("query prints results sorted by distance") {
    const std::string path = temp_path("example.txt");
    write_example(path);

    {
        CaptureStdout capture;
        REQUIRE(run_cli({"query", "--data", path, "--q", "8 1 0 6", "--theta",
                         "0.5625", "--method", "invin"}) == 0);
        CHECK(capture.text() == "t3\t6\ncandidates 2\n");
    }
    {
        // a query overlapping everything lists all three under a lax theta
        CaptureStdout capture;
        REQUIRE(run_cli({"query", "--data", path, "--q", "2 5 4 3", "--theta",
                         "0.999", "--method", "oracle"}) == 0);
        CHECK(capture.text() == "t1\t0\nt2\t10\nt3\t13\ncandidates 3\n");
    }
    {
        // the oracle is the default method
        CaptureStdout capture;
        REQUIRE(run_cli({"query", "--data", path, "--q", "2 5 4 3", "--theta",
                         "0.999"}) == 0);
        CHECK(capture.text() == "t1\t0\nt2\t10\nt3\t13\ncandidates 3\n");
    }
    {
        // without --l the schemes use the overlap-bound budget, which at
        // theta_d = 9 and k = 4 covers all six pairs
        CaptureStdout capture;
        REQUIRE(run_cli({"query", "--data", path, "--q", "8 1 0 6", "--theta",
                         "0.5625", "--method", "scheme1"}) == 0);
        CHECK(capture.text().find("t3\t6\n") != std::string::npos);
    }
    {
        // co-occurrence lookup with all pairs finds the same result
        CaptureStdout capture;
        REQUIRE(run_cli({"query", "--data", path, "--q", "8 1 0 6", "--theta",
                         "0.5625", "--method", "scheme1", "--l", "6"}) == 0);
        CHECK(capture.text().find("t3\t6\n") != std::string::npos);
    }
    {
        // t3's only pair shared with this query is order-reversed, so the
        // rank-ordered buckets cannot surface it
        CaptureStdout capture;
        REQUIRE(run_cli({"query", "--data", path, "--q", "8 1 0 6", "--theta",
                         "0.5625", "--method", "scheme2", "--l", "6"}) == 0);
        CHECK(capture.text() == "candidates 0\n");
    }

    // k mismatch is a usage error
    CHECK(run_cli({"query", "--data", path, "--q", "8 1", "--theta", "0.5"}) ==
          2);
    // so is a theta outside [0, 1)
    CHECK(run_cli({"query", "--data", path, "--q", "8 1 0 6", "--theta",
                   "1.0"}) == 2);
    std::remove(path.c_str());
}

TEST_CASE("missing files exit with the I/O code") {
    CHECK(run_cli({"query", "--data", temp_path("nope.txt"), "--q", "1 2",
                   "--theta", "0.1"}) == 3);
    CHECK(run_cli({"bench", "--data", temp_path("nope.txt"), "--out",
                   temp_path("nope.csv")}) == 3);
}

TEST_CASE("unknown flags and bad values exit with the usage code") {
    CHECK(run_cli({"generate", "--bogus", "1"}) == 2);
    CHECK(run_cli({"query"}) == 2);
    CHECK(run_cli({}) == 2);
    CHECK(run_cli({"analyze", "--k", "10", "--thetas", "2.0"}) == 2);
    CHECK(run_cli({"analyze", "--k", "0"}) == 2);
}

TEST_CASE("bench writes the CSV contract") {
    const std::string data_path = temp_path("bench_data.txt");
    const std::string csv_path = temp_path("bench.csv");
    {
        CaptureStdout capture;
        REQUIRE(run_cli({"generate", "--n", "300", "--k", "6", "--domain",
                         "90", "--seed", "3", "--out", data_path}) == 0);
    }
    REQUIRE(run_cli({"bench", "--data", data_path, "--label", "demo",
                     "--queries", "40", "--thetas", "0.1,0.3", "--ls", "1,6",
                     "--seed", "11", "--threads", "1", "--out", csv_path}) == 0);

    std::istringstream csv(slurp(csv_path));
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line ==
          "dataset,method,k,theta,l,queries,avg_candidates,avg_validated,"
          "recall,avg_query_us");
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        CHECK(line.rfind("demo,", 0) == 0);
    }
    // 2 thetas x (2 l-free + 2 schemes x 2 ls)
    CHECK(rows == 12);

    // rerun is identical in every column but the timing one
    const std::string first = slurp(csv_path);
    REQUIRE(run_cli({"bench", "--data", data_path, "--label", "demo",
                     "--queries", "40", "--thetas", "0.1,0.3", "--ls", "1,6",
                     "--seed", "11", "--threads", "1", "--out", csv_path}) == 0);
    const std::string second = slurp(csv_path);
    auto strip_timing = [](const std::string& text) {
        std::istringstream in(text);
        std::string out;
        std::string row;
        while (std::getline(in, row)) {
            out += row.substr(0, row.find_last_of(','));
            out += '\n';
        }
        return out;
    };
    CHECK(strip_timing(first) == strip_timing(second));

    std::remove(data_path.c_str());
    std::remove(csv_path.c_str());
}

TEST_CASE("analyze emits model curves with the dominance invariant") {
    CaptureStdout capture;
    REQUIRE(run_cli({"analyze", "--k", "10", "--thetas", "0,0.09,0.3", "--ls",
                     "1,3"}) == 0);
    std::istringstream csv(capture.text());
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == "k,theta,scheme,m,l,p1,candidate_prob,f_ratio");

    std::size_t rows = 0;
    bool saw_theta0_full_prob = false;
    while (std::getline(csv, line)) {
        ++rows;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> cols;
        while (std::getline(fields, field, ',')) {
            cols.push_back(field);
        }
        REQUIRE(cols.size() == 8);
        const double ratio = std::stod(cols[7]);
        CHECK(ratio <= 1.0 + 1e-9);
        if (cols[1] == "0") {
            CHECK(std::stod(cols[6]) == 1.0);
            saw_theta0_full_prob = true;
        }
    }
    CHECK(rows == 3 * 2 * 2);
    CHECK(saw_theta0_full_prob);

    // theta 0.09 at k=10 is the theta_d = 9 operating point
    CHECK(capture.text().find("10,0.09,1,2,1,0.538462,0.289941,0.318616") !=
          std::string::npos);
    CHECK(capture.text().find("10,0.09,2,1,1,0.91,0.91,0.318616") !=
          std::string::npos);
}
