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

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "gql/parity_learners.h"

namespace gql {
namespace {

Graph cycle_on(uint32_t n, const VertexSet &order) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < order.size(); i++) {
        edges.push_back(make_edge(order[i], order[(i + 1) % order.size()]));
    }
    return Graph(n, edges);
}

TEST(Family, SingletonNeedsNoSamples) {
    Graph g(5, {{1, 2}});
    OracleHandle h(g, 1);
    EXPECT_EQ(learn_from_family(h, {g}), g);
    EXPECT_EQ(h.ledger().graph_state_copy, 0u);
    EXPECT_EQ(family_sample_count(1, 7), 0u);
}

TEST(Family, TriangleSubgraphs) {
    auto family = all_subgraphs(Graph::complete(3));
    Rng rng = make_rng(1);
    int ok = 0;
    for (int t = 0; t < 1000; t++) {
        const Graph &g = family[uniform_below(rng, family.size())];
        OracleHandle h(g, t);
        try {
            ok += learn_from_family(h, family) == g;
        } catch (const LearningFailure &) {
        }
    }
    EXPECT_GE(ok, 990);
}

TEST(Family, AllGraphsOnFour) {
    auto family = all_graphs(4);
    Rng rng = make_rng(2);
    FamilyOptions opts;
    opts.samples = 19;
    int ok = 0;
    for (int t = 0; t < 1000; t++) {
        const Graph &g = family[uniform_below(rng, family.size())];
        OracleHandle h(g, t);
        try {
            ok += learn_from_family(h, family, opts) == g;
        } catch (const LearningFailure &) {
        }
        EXPECT_EQ(h.ledger().graph_state_copy, 38u);
    }
    EXPECT_GE(ok, 990);
}

TEST(LowWeight, MatchesBruteForce) {
    Rng rng = make_rng(7);
    for (int t = 0; t < 40; t++) {
        const uint32_t n = 14, len = 10, d = 1 + t % 4;
        std::vector<BitVector> cols;
        for (uint32_t i = 0; i < n; i++) cols.push_back(BitVector::random(len, rng));
        BitVector target = BitVector::random(len, rng);
        std::set<VertexSet> brute;
        for (uint32_t mask = 0; mask < (1u << n); mask++) {
            if (static_cast<uint32_t>(std::popcount(mask)) > d) continue;
            BitVector acc(len);
            VertexSet members;
            for (uint32_t i = 0; i < n; i++) {
                if (mask >> i & 1) {
                    acc ^= cols[i];
                    members.push_back(i);
                }
            }
            if (acc == target) brute.insert(members);
        }
        LowWeightSolver solver(cols, d);
        auto got = solver.solve(target, 1000000);
        EXPECT_EQ(std::set<VertexSet>(got.begin(), got.end()), brute);
        if (brute.size() >= 2) {
            EXPECT_EQ(solver.solve(target, 2).size(), 2u);
        }
    }
}

TEST(LowWeight, TableCap) {
    std::vector<BitVector> cols(200, BitVector(64));
    EXPECT_THROW(LowWeightSolver(cols, 6, 1000), ScaleError);
}

TEST(BoundedDegree, EmptyGraphAllIsolated) {
    OracleHandle h(Graph(40), 1);
    BoundedDegreeResult r = learn_bounded_degree(h, 3);
    EXPECT_TRUE(r.non_isolated.empty());
    EXPECT_EQ(r.phase2_samples, 0u);
    EXPECT_EQ(r.graph(), Graph(40));
}

TEST(BoundedDegree, CycleOnEight) {
    Rng rng = make_rng(9);
    int ok = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; t++) {
        auto support = random_subset(32, 8, rng);
        shuffle(support, rng);
        Graph g = cycle_on(32, support);
        OracleHandle h(g, t);
        BoundedDegreeOptions opts;
        opts.m_hint = 8;
        BoundedDegreeResult r = learn_bounded_degree(h, 2, opts);
        ok += !r.ambiguous() && r.over_degree().empty() && r.graph() == g;
    }
    EXPECT_GE(ok, 950);
}

TEST(BoundedDegree, PlantedHighDegreeVertex) {
    Rng rng = make_rng(10);
    for (int t = 0; t < 50; t++) {
        std::vector<Edge> edges;
        for (uint32_t l = 1; l <= 5; l++) edges.emplace_back(0, l);
        edges.emplace_back(10, 11);
        edges.emplace_back(11, 12);
        Graph g(40, edges);
        OracleHandle h(g, t);
        BoundedDegreeResult r = learn_bounded_degree(h, 2);
        EXPECT_EQ(r.over_degree(), VertexSet{0});
        for (uint32_t v = 1; v < 40; v++) {
            if (g.degree(v) == 0) continue;
            ASSERT_EQ(r.rows[v].status, RowStatus::exact) << v;
            EXPECT_EQ(vertex_mask(40, r.rows[v].neighbors), g.neighbors(v));
        }
    }
}

TEST(BoundedDegree, SampleCountFormula) {
    // n' = 8, d = 2: log2(8 * (1 + 8 + 28)) = log2(296), ceiling 9.
    EXPECT_EQ(bounded_degree_sample_count(8, 2, 7), 16u);
    EXPECT_EQ(bounded_degree_sample_count(0, 2, 7), 0u);
}

TEST(Subgraph, EmptyHost) {
    OracleHandle h(Graph(10), 1);
    EXPECT_EQ(learn_subgraph_of(h, Graph(10), 2), Graph(10));
    EXPECT_EQ(h.ledger().graph_state_copy, 0u);
}

TEST(Subgraph, AlternateCycleEdges) {
    VertexSet order{0, 1, 2, 3, 4, 5, 6, 7};
    Graph host = cycle_on(8, order);
    Graph g(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    int ok = 0;
    for (int t = 0; t < 1000; t++) {
        OracleHandle h(g, t);
        try {
            ok += learn_subgraph_of(h, host, 2) == g;
        } catch (const LearningFailure &) {
        }
    }
    EXPECT_GE(ok, 990);
}

TEST(Subgraph, DegreeThreeHostEqualsHidden) {
    Rng rng = make_rng(5);
    Graph g = generate({FamilyKind::bounded_degree, 100, 0, 3, 0, {}, {}}, rng);
    OracleHandle h(g, 2);
    EXPECT_EQ(learn_subgraph_of(h, g, 3), g);
}

TEST(Subgraph, OutsideHostFails) {
    Graph host(6, {{0, 1}, {2, 3}});
    OracleHandle h(Graph(6, {{0, 1}, {4, 5}}), 3);
    EXPECT_THROW(learn_subgraph_of(h, host, 1), LearningFailure);
}

TEST(ArbitraryParity, LedgerExact) {
    OracleHandle empty(Graph(9), 1);
    EXPECT_EQ(learn_arbitrary_parity(empty), Graph(9));
    EXPECT_EQ(empty.ledger().parity_query, 18u);
    Rng rng = make_rng(4);
    Graph g = generate({FamilyKind::fixed_edge_count, 64, 0, 0, 300, {}, {}}, rng);
    OracleHandle h(g, 1);
    EXPECT_EQ(learn_arbitrary_parity(h), g);
    EXPECT_EQ(h.ledger().parity_query, 128u);
    OracleHandle tri(Graph::complete(3), 1);
    EXPECT_EQ(learn_arbitrary_parity(tri), Graph::complete(3));
    EXPECT_EQ(tri.ledger().parity_query, 6u);
}

TEST(BoundedEdges, Examples) {
    OracleHandle empty(Graph(50), 1);
    EXPECT_EQ(learn_bounded_edges_parity(empty, 0), Graph(50));
    Rng rng = make_rng(3);
    Graph star = generate({FamilyKind::star, 200, 0, 0, 20, {}, {}}, rng);
    OracleHandle h(star, 1);
    EXPECT_EQ(learn_bounded_edges_parity(h, 20), star);
}

TEST(BoundedEdges, RandomGraphsLedger) {
    Rng rng = make_rng(6);
    const uint64_t m = 40;
    const uint32_t d = bounded_edges_degree(m);
    int ok = 0;
    for (int t = 0; t < 100; t++) {
        Graph g = generate({FamilyKind::fixed_edge_count, 128, 0, 0, m, {}, {}}, rng);
        OracleHandle h(g, t);
        try {
            ok += learn_bounded_edges_parity(h, m) == g;
        } catch (const LearningFailure &) {
        }
        uint64_t dense = 0;
        for (uint32_t v = 0; v < 128; v++) dense += g.degree(v) > d;
        EXPECT_LE(dense, 2 * m / d);
        double budget = 6 * std::sqrt(m * std::log2(static_cast<double>(m))) + 40 + 2 * 2 * m / d;
        EXPECT_LE(h.ledger().parity_query, budget);
    }
    EXPECT_GE(ok, 95);
}

TEST(StarGraphState, RecoveryAndCopies) {
    Rng rng = make_rng(11);
    int ok = 0;
    uint64_t copies = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; t++) {
        Graph g = generate({FamilyKind::star, 40, 0, 0, 5, {}, {}}, rng);
        OracleHandle h(g, t);
        ok += learn_star_graphstate(h).graph(40) == g;
        copies += h.ledger().graph_state_copy;
    }
    EXPECT_GE(ok, 999);
    EXPECT_LE(copies / static_cast<double>(trials), 12.0);
}

TEST(StarGraphState, TwoLeaves) {
    for (int t = 0; t < 50; t++) {
        OracleHandle h(Graph(10, {{4, 1}, {4, 8}}), t);
        StarResult r = learn_star_graphstate(h);
        ASSERT_TRUE(r.center);
        EXPECT_EQ(*r.center, 4u);
        EXPECT_EQ(r.leaves, (VertexSet{1, 8}));
    }
}

TEST(CliqueGraphState, Recovery) {
    OracleHandle edge(Graph(5, {{0, 3}}), 1);
    EXPECT_EQ(learn_clique_graphstate(edge), (VertexSet{0, 3}));
    Rng rng = make_rng(13);
    int ok = 0;
    for (int t = 0; t < 1000; t++) {
        Graph g = generate({FamilyKind::clique, 64, 6, 0, 0, {}, {}}, rng);
        OracleHandle h(g, t);
        try {
            ok += learn_clique_graphstate(h) == g.non_isolated();
        } catch (const LearningFailure &) {
        }
        EXPECT_LE(h.ledger().graph_state_copy, 40u);
    }
    EXPECT_GE(ok, 990);
}

TEST(CliqueGraphState, RowNonzeroHalfTheTime) {
    Graph g = Graph(12, {{2, 5}, {2, 9}, {5, 9}});
    OracleHandle h(g, 3);
    int nonzero = 0;
    const int draws = 20000;
    for (int i = 0; i < draws; i++) nonzero += h.bell_sample().y.get(5);
    EXPECT_NEAR(nonzero / static_cast<double>(draws), 0.5, 0.015);
}

}  // namespace
}  // namespace gql
