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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "tausearch/bench.hpp"
#include "tausearch/distance.hpp"
#include "tausearch/invindex.hpp"
#include "tausearch/pairindex.hpp"

using namespace tausearch;
using tausearch::testing::example_dataset;
using tausearch::testing::example_query;

namespace {

std::vector<RankingId> to_vec(std::span<const RankingId> span) {
    return {span.begin(), span.end()};
}

bool has_pair(const std::vector<PairKey>& pairs, ItemId a, ItemId b) {
    return std::find(pairs.begin(), pairs.end(), PairKey{a, b}) != pairs.end();
}

}  // namespace

TEST_CASE("pairs_unsorted emits all canonical co-occurrence pairs") {
    const Ranking tau1 = make_ranking(1, {2, 5, 4, 3});
    const auto pairs = pairs_unsorted(tau1);
    CHECK(pairs.size() == 6);
    CHECK(has_pair(pairs, 2, 5));
    CHECK(has_pair(pairs, 2, 4));
    CHECK(has_pair(pairs, 2, 3));
    CHECK(has_pair(pairs, 4, 5));
    CHECK(has_pair(pairs, 3, 5));
    CHECK(!has_pair(pairs, 5, 4));  // canonical form only

    CHECK(pairs_unsorted(make_ranking(0, {42})).empty());

    Rng rng(5);
    const Ranking r = testing::random_ranking(rng, 0, 9, 50);
    const auto many = pairs_unsorted(r);
    CHECK(many.size() == 9 * 8 / 2);
    std::set<std::uint64_t> distinct;
    for (PairKey key : many) {
        distinct.insert(pack_pair(key));
    }
    CHECK(distinct.size() == many.size());
}

TEST_CASE("pairs_sorted orients every pair by rank order") {
    const Ranking tau1 = make_ranking(1, {2, 5, 4, 3});
    const auto pairs = pairs_sorted(tau1);
    CHECK(pairs.size() == 6);
    CHECK(has_pair(pairs, 2, 5));
    CHECK(has_pair(pairs, 2, 4));
    CHECK(has_pair(pairs, 2, 3));
    CHECK(has_pair(pairs, 5, 4));
    CHECK(!has_pair(pairs, 4, 5));

    CHECK(pairs_sorted(make_ranking(0, {8, 3})) ==
          std::vector<PairKey>{PairKey{8, 3}});

    // reversing the list swaps every pair's components
    const Ranking fwd = make_ranking(0, {1, 2, 3, 4});
    const Ranking rev = make_ranking(1, {4, 3, 2, 1});
    for (PairKey key : pairs_sorted(fwd)) {
        CHECK(has_pair(pairs_sorted(rev), key.b, key.a));
    }
}

TEST_CASE("pair indices reproduce the worked-example tables") {
    const Dataset ds = example_dataset();
    const PairIndex unsorted = build_pair_index(ds, PairVariant::Unsorted);
    const PairIndex sorted = build_pair_index(ds, PairVariant::Sorted);

    CHECK(to_vec(unsorted.postings({5, 7})) == std::vector<RankingId>{2, 3});
    CHECK(to_vec(unsorted.postings({4, 5})) == std::vector<RankingId>{1, 2});
    CHECK(to_vec(unsorted.postings({3, 4})) == std::vector<RankingId>{1});

    CHECK(to_vec(sorted.postings({7, 5})) == std::vector<RankingId>{2, 3});
    CHECK(to_vec(sorted.postings({5, 4})) == std::vector<RankingId>{1});
    CHECK(to_vec(sorted.postings({4, 5})) == std::vector<RankingId>{2});

    // every ranking contributes k(k-1)/2 entries
    CHECK(unsorted.entry_count() == ds.size() * 6);
    CHECK(sorted.entry_count() == ds.size() * 6);
}

TEST_CASE("a single sorted ranking produces exactly one key per pair") {
    const Dataset ds(std::vector<Ranking>{make_ranking(0, {1, 2})});
    const PairIndex index = build_pair_index(ds, PairVariant::Sorted);
    CHECK(index.key_count() == 1);
    CHECK(to_vec(index.postings({1, 2})) == std::vector<RankingId>{0});
    CHECK(index.postings({2, 1}).empty());
}

TEST_CASE("buckets equal their brute-force hash definitions") {
    Rng rng(17);
    const Dataset ds = testing::random_dataset(rng, 60, 5, 18);
    const PairIndex unsorted = build_pair_index(ds, PairVariant::Unsorted);
    const PairIndex sorted = build_pair_index(ds, PairVariant::Sorted);

    const auto& domain = ds.domain();
    for (std::size_t x = 0; x < domain.size(); ++x) {
        for (std::size_t y = x + 1; y < domain.size(); ++y) {
            const ItemId i = domain[x];
            const ItemId j = domain[y];
            // the (1,1) bucket of the presence projections (h_i, h_j)
            std::vector<RankingId> both_present;
            // the '1' bucket of the rank-order projection, i before j
            std::vector<RankingId> i_before_j;
            std::vector<RankingId> j_before_i;
            for (const Ranking& r : ds.rankings()) {
                if (r.contains(i) && r.contains(j)) {
                    both_present.push_back(r.id());
                    (r.rank_of(i) < r.rank_of(j) ? i_before_j : j_before_i)
                        .push_back(r.id());
                }
            }
            REQUIRE(to_vec(unsorted.postings({i, j})) == both_present);
            REQUIRE(to_vec(sorted.postings({i, j})) == i_before_j);
            REQUIRE(to_vec(sorted.postings({j, i})) == j_before_i);
            // the two oriented buckets partition the co-occurrence bucket
            REQUIRE(i_before_j.size() + j_before_i.size() ==
                    both_present.size());
        }
    }
}

TEST_CASE("pair budget follows the overlap bound") {
    // k=10, theta_d=9 -> floor 7, 9+8+7+6 lookups suffice
    CHECK(sufficient_pair_budget(10, 9.0) == 30);
    // floor 1 means every pair may be needed
    CHECK(sufficient_pair_budget(4, 15.9) == 6);
    for (std::uint32_t k : {2u, 4u, 10u}) {
        for (int step = 0; step < 20; ++step) {
            const double theta_d =
                static_cast<double>(k) * k * step / 20.0;
            const std::uint32_t floor_m = min_overlap(k, theta_d);
            unsigned expected = 0;
            for (std::uint32_t i = 1; i <= k - floor_m + 1; ++i) {
                expected += k - i;
            }
            REQUIRE(sufficient_pair_budget(k, theta_d) == expected);
            REQUIRE(sufficient_pair_budget(k, theta_d) <= k * (k - 1) / 2);
        }
    }
}

TEST_CASE("select_query_pairs is deterministic, nested, and variant-aligned") {
    const Ranking q = example_query();
    const double theta_d = 9.0;

    // exhaustive selection covers the whole pair set
    auto all = select_query_pairs(q, PairVariant::Unsorted, 6, 42, theta_d);
    auto reference = pairs_unsorted(q);
    std::sort(all.begin(), all.end(),
              [](PairKey a, PairKey b) { return pack_pair(a) < pack_pair(b); });
    std::sort(reference.begin(), reference.end(),
              [](PairKey a, PairKey b) { return pack_pair(a) < pack_pair(b); });
    CHECK(all == reference);

    // nesting: the 3-selection is a prefix of the 6-selection
    const auto three = select_query_pairs(q, PairVariant::Sorted, 3, 42, theta_d);
    const auto six = select_query_pairs(q, PairVariant::Sorted, 6, 42, theta_d);
    CHECK(std::equal(three.begin(), three.end(), six.begin()));

    // sorted selections respect q's rank order
    const auto sorted_pairs_of_q = pairs_sorted(q);
    for (PairKey key : six) {
        CHECK(std::find(sorted_pairs_of_q.begin(), sorted_pairs_of_q.end(),
                        key) != sorted_pairs_of_q.end());
    }

    // the two variants pick the same underlying unordered pairs
    const auto unsorted_sel =
        select_query_pairs(q, PairVariant::Unsorted, 6, 42, theta_d);
    for (std::size_t i = 0; i < six.size(); ++i) {
        CHECK(canonical_pair(six[i].a, six[i].b) == unsorted_sel[i]);
    }

    // same seed, same selection
    CHECK(select_query_pairs(q, PairVariant::Sorted, 3, 42, theta_d) == three);

    CHECK_THROWS_AS(select_query_pairs(q, PairVariant::Sorted, 7, 42, theta_d),
                    LTooLargeError);

    // l = 0 asks for the overlap-bound budget
    const auto budget = select_query_pairs(q, PairVariant::Sorted, 0, 42, 4.0);
    CHECK(budget.size() == std::min(sufficient_pair_budget(4, 4.0), 6u));
}

TEST_CASE("query_lsh finds the bucketed rankings on the worked example") {
    const Dataset ds = example_dataset();
    const PairIndex unsorted = build_pair_index(ds, PairVariant::Unsorted);
    // query containing the pair (5, 7); exhaustive lookup hits its bucket
    const Ranking q = make_ranking(0, {5, 7, 1, 0});
    const auto params = QueryParams::for_k(0.5, 4, 6, 9, Method::Scheme1);
    const QueryOutcome out = query_lsh(unsorted, q, params);
    CHECK(testing::is_subset({2, 3}, out.candidate_ids));
}

TEST_CASE("query_lsh over an empty index returns nothing") {
    const Dataset empty(4, {});
    const PairIndex index = build_pair_index(empty, PairVariant::Unsorted);
    const auto params = QueryParams::for_k(0.5, 4, 3, 9, Method::Scheme1);
    const QueryOutcome out = query_lsh(index, example_query(), params);
    CHECK(out.candidate_ids.empty());
    CHECK(out.result_ids.empty());
}

TEST_CASE("exhaustive lookups reach full recall when the floor is >= 2") {
    Rng rng(907);
    const std::uint32_t k = 5;
    const Dataset ds = testing::random_dataset(rng, 120, k, 20);
    const PairIndex unsorted = build_pair_index(ds, PairVariant::Unsorted);
    const PairIndex sorted = build_pair_index(ds, PairVariant::Sorted);
    const double theta = 0.3;  // floor 3 at k=5
    REQUIRE(min_overlap(k, theta * k * k) >= 2);
    for (int qi = 0; qi < 40; ++qi) {
        const Ranking q = testing::random_ranking(rng, 5000, k, 20);
        const auto params = QueryParams::for_k(theta, k, k * (k - 1) / 2,
                                               derive_seed(3, qi),
                                               Method::Scheme1);
        const auto truth = ground_truth(ds, q, params.theta_d);
        // co-occurrence buckets are orientation-free: every result sharing
        // two items is reachable
        REQUIRE(query_lsh(unsorted, q, params).result_ids == truth);

        // rank-ordered buckets can only reach results agreeing with q on at
        // least one shared pair; a result whose shared items are all
        // order-reversed sits in none of the looked-up buckets
        std::vector<RankingId> reachable;
        for (RankingId id : truth) {
            const Ranking& r = *ds.find(id);
            bool concordant_shared_pair = false;
            for (PairKey key : pairs_sorted(q)) {
                if (r.contains(key.a) && r.contains(key.b) &&
                    r.rank_of(key.a) < r.rank_of(key.b)) {
                    concordant_shared_pair = true;
                    break;
                }
            }
            if (concordant_shared_pair) {
                reachable.push_back(id);
            }
        }
        REQUIRE(query_lsh(sorted, q, params).result_ids == reachable);
    }
}

TEST_CASE("aligned selection nests candidates across l and across schemes") {
    Rng rng(510);
    const std::uint32_t k = 6;
    const Dataset ds = testing::random_dataset(rng, 150, k, 24);
    const InvertedIndex inverted = build_inverted(ds);
    const PairIndex unsorted = build_pair_index(ds, PairVariant::Unsorted);
    const PairIndex sorted = build_pair_index(ds, PairVariant::Sorted);

    for (int qi = 0; qi < 25; ++qi) {
        const Ranking q = testing::random_ranking(rng, 9000, k, 24);
        const std::uint64_t seed = derive_seed(77, qi);
        std::vector<RankingId> previous_s1;
        std::vector<RankingId> previous_s2;
        for (unsigned l : {1u, 3u, 6u, 10u}) {
            const auto p1 = QueryParams::for_k(0.2, k, l, seed, Method::Scheme1);
            const auto p2 = QueryParams::for_k(0.2, k, l, seed, Method::Scheme2);
            const auto s1 = query_lsh(unsorted, q, p1);
            const auto s2 = query_lsh(sorted, q, p2);
            const auto inv = query_invin(inverted, q, p1);
            REQUIRE(testing::is_subset(s1.result_ids, s1.candidate_ids));
            REQUIRE(testing::is_subset(s2.result_ids, s2.candidate_ids));
            REQUIRE(testing::is_subset(inv.result_ids, inv.candidate_ids));
            REQUIRE(testing::is_subset(s2.candidate_ids, s1.candidate_ids));
            REQUIRE(testing::is_subset(s1.candidate_ids, inv.candidate_ids));
            REQUIRE(testing::is_subset(previous_s1, s1.candidate_ids));
            REQUIRE(testing::is_subset(previous_s2, s2.candidate_ids));
            previous_s1 = s1.candidate_ids;
            previous_s2 = s2.candidate_ids;
        }
    }
}
