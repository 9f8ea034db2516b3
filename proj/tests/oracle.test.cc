// Copyright 2026 The gql Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "gql/boolean_function.h"
#include "gql/oracle.h"
#include "gql/quantum_sim.h"
#include "stats.h"

namespace gql {
namespace {

using testing::to_index;
using testing::tv_distance;

Graph triangle() {
    return Graph(3, {{0, 1}, {0, 2}, {1, 2}});
}

TEST(OrQuery, Examples) {
    OracleHandle h(triangle(), 1);
    EXPECT_FALSE(h.or_query(VertexSet{}));
    EXPECT_TRUE(h.or_query(VertexSet{0, 1, 2}));
    EXPECT_TRUE(h.or_query(VertexSet{0, 2}));
    EXPECT_FALSE(h.or_query(VertexSet{1}));
    EXPECT_EQ(h.ledger().or_query, 4u);
}

TEST(ParityQuery, Examples) {
    OracleHandle h(triangle(), 1);
    EXPECT_FALSE(h.parity_query(BitVector(3)));
    EXPECT_TRUE(h.parity_query(BitVector::ones(3)));
    EXPECT_TRUE(h.parity_query(BitVector::from_string("110")));
    EXPECT_EQ(h.ledger().parity_query, 3u);
}

TEST(BellSample, Accounting) {
    OracleHandle h(Graph(5), 3);
    for (int i = 0; i < 10; i++) {
        EXPECT_TRUE(h.bell_sample().y.none());
    }
    EXPECT_EQ(h.ledger().graph_state_copy, 20u);
    h.bell_sample(BellCharge::parity_queries);
    EXPECT_EQ(h.ledger().parity_query, 2u);
}

TEST(BellSample, SingleEdgeMatvec) {
    OracleHandle h(Graph(2, {{0, 1}}), 5);
    std::map<uint64_t, uint64_t> counts;
    const uint64_t draws = 100000;
    for (uint64_t i = 0; i < draws; i++) {
        BellSample b = h.bell_sample();
        if (b.s == BitVector::from_string("10")) EXPECT_EQ(b.y.str(), "01");
        if (b.s == BitVector::from_string("11")) EXPECT_EQ(b.y.str(), "11");
        counts[(to_index(b.s) << 2) | to_index(b.y)]++;
    }
    // Compare with the statevector Bell distribution: index x * 4 + z.
    auto dist = bell_distribution(build_graph_state(Graph(2, {{0, 1}})));
    std::vector<double> exact(16, 0.0);
    for (uint64_t i = 0; i < dist.size(); i++) exact[i] = dist[i].probability;
    EXPECT_LT(tv_distance(counts, draws, exact), 0.02);
}

TEST(ParityVector, Examples) {
    OracleHandle h(triangle(), 1);
    EXPECT_TRUE(h.parity_vector_query(BitVector(3)).none());
    EXPECT_EQ(h.parity_vector_query(BitVector::unit(3, 1)).str(), "101");
    EXPECT_EQ(h.ledger().parity_query, 4u);
    for (uint32_t leaves : {3u, 4u}) {
        std::vector<Edge> edges;
        for (uint32_t l = 1; l <= leaves; l++) edges.emplace_back(0, l);
        OracleHandle s(Graph(6, edges), 2);
        BitVector y = s.parity_vector_query(BitVector::ones(6));
        EXPECT_EQ(y.get(0), leaves % 2 == 1);
        for (uint32_t l = 1; l <= leaves; l++) EXPECT_TRUE(y.get(l));
        EXPECT_FALSE(y.get(5));
    }
}

TEST(GraphStateSample, StarOutcomesQuarterEach) {
    OracleHandle h(Graph(3, {{0, 1}, {0, 2}}), 9);
    std::map<std::string, int> counts;
    const int draws = 40000;
    for (int i = 0; i < draws; i++) counts[h.graphstate_hadamard_sample().str()]++;
    EXPECT_EQ(counts.size(), 4u);
    for (const char *o : {"000", "100", "011", "111"}) {
        EXPECT_NEAR(counts[o] / static_cast<double>(draws), 0.25, 0.01) << o;
    }
    EXPECT_EQ(h.ledger().graph_state_copy, static_cast<uint64_t>(draws));
}

TEST(GraphStateSample, EmptySingleVertex) {
    OracleHandle h(Graph(1), 1);
    for (int i = 0; i < 10; i++) EXPECT_TRUE(h.graphstate_hadamard_sample().none());
}

TEST(FourierSampleOr, MatchesStatevector) {
    Rng rng = make_rng(17);
    for (int t = 0; t < 3; t++) {
        const uint32_t n = 8;
        Graph g = generate({FamilyKind::fixed_edge_count, n, 0, 0, 6, {}, {}}, rng);
        TruthTable f = TruthTable::from_function(n, [&](uint64_t x) {
            BitVector v(n);
            for (uint32_t q = 0; q < n; q++) v.set(q, x >> q & 1);
            return g.induces_edge(v);
        });
        auto exact = fourier_sampling_distribution(f);
        OracleHandle h(g, 100 + t);
        std::map<uint64_t, uint64_t> counts;
        const uint64_t draws = 100000;
        for (uint64_t i = 0; i < draws; i++) {
            auto s = h.fourier_sample_or(BitVector::ones(n));
            ASSERT_TRUE(s);
            counts[to_index(*s)]++;
        }
        EXPECT_LT(tv_distance(counts, draws, exact), 0.02);
        EXPECT_EQ(h.ledger().or_query, draws);
    }
}

// Squared coefficient of the centre indicator, by direct summation.
double star_centre_probability(uint32_t n, uint32_t leaves) {
    std::vector<Edge> edges;
    for (uint32_t l = 1; l <= leaves; l++) edges.emplace_back(0, l);
    Graph g(n, edges);
    double sum = 0;
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        BitVector v(n);
        for (uint32_t q = 0; q < n; q++) v.set(q, x >> q & 1);
        double sign = g.induces_edge(v) ? -1.0 : 1.0;
        sum += (x & 1) ? -sign : sign;
    }
    double coeff = sum / static_cast<double>(uint64_t{1} << n);
    return coeff * coeff;
}

TEST(FourierSampleOr, StarCentreProbability) {
    EXPECT_DOUBLE_EQ(star_centre_probability(3, 2), 9.0 / 16.0);
    EXPECT_NEAR(star_centre_probability(12, 10), std::pow(1 - std::ldexp(1.0, -10), 2), 1e-12);
    // Large star uses the closed form: centre appears at that rate.
    std::vector<Edge> edges;
    for (uint32_t l = 1; l <= 40; l++) edges.emplace_back(0, l);
    OracleHandle h(Graph(64, edges), 4);
    int hits = 0;
    for (int i = 0; i < 2000; i++) {
        auto s = h.fourier_sample_or(BitVector::ones(64));
        ASSERT_TRUE(s);
        hits += *s == BitVector::unit(64, 0);
    }
    EXPECT_GT(hits, 1990);
}

TEST(FourierSampleOr, StarTwoLeavesRate) {
    OracleHandle h(Graph(40, {{7, 3}, {7, 30}}), 6);
    int hits = 0;
    const int draws = 40000;
    for (int i = 0; i < draws; i++) {
        hits += *h.fourier_sample_or(BitVector::ones(40)) == BitVector::unit(40, 7);
    }
    EXPECT_NEAR(hits / static_cast<double>(draws), 9.0 / 16.0, 0.01);
}

TEST(JuntaQuery, Examples) {
    Junta or4{10, or_function(4), {0, 2, 5, 9}};
    OracleHandle a(or4, 1);
    EXPECT_FALSE(a.junta_query(BitVector(10)));

    Junta maj{8, majority_function(3), {1, 4, 7}};
    OracleHandle b(maj, 1);
    EXPECT_TRUE(b.junta_query(BitVector::from_indices(8, std::vector<uint32_t>{1, 4})));
    EXPECT_FALSE(b.junta_query(BitVector::from_indices(8, std::vector<uint32_t>{1, 2})));

    Junta half{12, exact_half_function(4), {0, 3, 6, 11}};
    OracleHandle c(half, 1);
    EXPECT_TRUE(c.junta_query(BitVector::from_indices(12, std::vector<uint32_t>{3, 11, 5})));
    EXPECT_FALSE(c.junta_query(BitVector::from_indices(12, std::vector<uint32_t>{0, 3, 11})));
    EXPECT_EQ(c.ledger().junta_query, 2u);
}

TEST(Oracle, WrongKindThrows) {
    OracleHandle h(triangle(), 1);
    EXPECT_THROW(h.junta_query(BitVector(3)), UnsupportedOracleError);
    OracleHandle j(Junta{4, parity_function(2), {0, 1}}, 1);
    EXPECT_THROW(j.or_query(VertexSet{0}), UnsupportedOracleError);
}

TEST(Oracle, RevealIsAudited) {
    OracleHandle h(triangle(), 1);
    EXPECT_EQ(h.reveal_graph(), triangle());
    EXPECT_EQ(h.ledger().reveal_used, 1u);
}

TEST(Ledger, JsonRoundTrip) {
    QueryLedger l{1, 2, 3, 4, 5, 6, 7};
    EXPECT_EQ(ledger_from_json(ledger_to_json(l)), l);
    QueryLedger sum = l;
    sum += l;
    EXPECT_EQ(sum.charged_quantum, 8u);
}

TEST(Oracle, SameSeedSameSamples) {
    Rng rng = make_rng(2);
    Graph g = generate({FamilyKind::fixed_edge_count, 20, 0, 0, 30, {}, {}}, rng);
    OracleHandle a(g, 99), b(g, 99);
    for (int i = 0; i < 50; i++) {
        BellSample x = a.bell_sample(), y = b.bell_sample();
        EXPECT_EQ(x.s, y.s);
        EXPECT_EQ(x.y, y.y);
    }
}

}  // namespace
}  // namespace gql
