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

#include "gql/or_learners.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace gql {

namespace {

constexpr int kMaxAttempts = 20;
constexpr int kMaxSamplesPerAttempt = 20;

VertexSet sorted_union(const VertexSet &a, const VertexSet &b) {
    VertexSet out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Positives among `candidates` when every test is unioned with `base`.
VertexSet group_test(OracleHandle &h, const VertexSet &candidates, const BitVector &base,
                     const CgtBackend &backend, const CgtOptions &options = {}) {
    if (candidates.empty()) {
        return {};
    }
    GraphGroupTest oracle(h, candidates, base);
    VertexSet out;
    for (uint32_t i : cgt_solve(backend, oracle, options)) {
        out.push_back(candidates[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CgtOptions nonempty() {
    CgtOptions o;
    o.known_nonempty = true;
    return o;
}

VertexSet all_vertices_except(uint32_t n, uint32_t skip) {
    VertexSet out;
    for (uint32_t v = 0; v < n; v++) {
        if (v != skip) {
            out.push_back(v);
        }
    }
    return out;
}

VertexSet p_random_subset(const VertexSet &from, double p, Rng &rng) {
    VertexSet out;
    for (uint32_t v : from) {
        if (bernoulli(rng, p)) {
            out.push_back(v);
        }
    }
    return out;
}

void remove_all(VertexSet &from, const VertexSet &taken) {
    VertexSet kept;
    std::set_difference(from.begin(), from.end(), taken.begin(), taken.end(),
                        std::back_inserter(kept));
    from = std::move(kept);
}

}  // namespace

void Decomposition::validate(uint32_t n) const {
    if (part_edges.size() != parts.size()) {
        throw std::invalid_argument("Decomposition: one edge list per part expected");
    }
    std::vector<int64_t> owner(n, -1);
    for (size_t i = 0; i < parts.size(); i++) {
        for (uint32_t v : parts[i]) {
            if (v >= n) {
                throw std::invalid_argument("Decomposition: vertex out of range");
            }
            if (owner[v] != -1) {
                throw std::invalid_argument("Decomposition: parts overlap");
            }
            owner[v] = static_cast<int64_t>(i);
        }
    }
    for (size_t i = 0; i < parts.size(); i++) {
        for (const auto &[u, v] : part_edges[i]) {
            if (u >= n || v >= n || owner[u] != static_cast<int64_t>(i) ||
                owner[v] != static_cast<int64_t>(i)) {
                throw std::invalid_argument("Decomposition: recorded edge leaves its part");
            }
        }
    }
}

Coloring greedy_coloring(const VertexSet &vertices, const std::vector<Edge> &edges) {
    size_t count = vertices.size();
    std::unordered_map<uint32_t, size_t> index;
    for (size_t i = 0; i < count; i++) {
        index[vertices[i]] = i;
    }
    std::vector<std::vector<size_t>> adj(count);
    for (const auto &[u, v] : edges) {
        auto iu = index.find(u);
        auto iv = index.find(v);
        if (iu == index.end() || iv == index.end()) {
            throw std::invalid_argument("greedy_coloring: edge endpoint outside the vertex list");
        }
        adj[iu->second].push_back(iv->second);
        adj[iv->second].push_back(iu->second);
    }
    // Smallest-last order: repeatedly remove a vertex of minimum remaining degree.
    std::vector<size_t> degree(count);
    std::vector<bool> removed(count, false);
    for (size_t i = 0; i < count; i++) {
        degree[i] = adj[i].size();
    }
    std::vector<size_t> order;
    order.reserve(count);
    for (size_t step = 0; step < count; step++) {
        size_t best = count;
        for (size_t i = 0; i < count; i++) {
            if (!removed[i] && (best == count || degree[i] < degree[best])) {
                best = i;
            }
        }
        removed[best] = true;
        order.push_back(best);
        for (size_t w : adj[best]) {
            if (!removed[w]) {
                degree[w]--;
            }
        }
    }
    std::vector<int64_t> color(count, -1);
    size_t colors = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<bool> used(colors + 1, false);
        for (size_t w : adj[*it]) {
            if (color[w] >= 0) {
                used[static_cast<size_t>(color[w])] = true;
            }
        }
        size_t c = 0;
        while (used[c]) {
            c++;
        }
        color[*it] = static_cast<int64_t>(c);
        colors = std::max(colors, c + 1);
    }
    Coloring out;
    out.classes.assign(colors, {});
    for (size_t i = 0; i < count; i++) {
        out.classes[static_cast<size_t>(color[i])].push_back(vertices[i]);
    }
    for (auto &cls : out.classes) {
        std::sort(cls.begin(), cls.end());
    }
    return out;
}

std::pair<VertexSet, VertexSet> find_nonisolated(OracleHandle &h, const VertexSet &a,
                                                 const VertexSet &b, const CgtBackend &backend) {
    if (a.empty() || b.empty()) {
        return {};
    }
    return {group_test(h, a, vertex_mask(h.n(), b), backend),
            group_test(h, b, vertex_mask(h.n(), a), backend)};
}

std::vector<Edge> learn_bipartite_edges(OracleHandle &h, const VertexSet &a, const VertexSet &b,
                                        const CgtBackend &backend) {
    if (a.empty() || b.empty()) {
        return {};
    }
    if (!h.or_query(vertex_mask(h.n(), sorted_union(a, b)))) {
        return {};
    }
    std::vector<Edge> edges;
    VertexSet active = group_test(h, a, vertex_mask(h.n(), b), backend, nonempty());
    for (uint32_t u : active) {
        for (uint32_t w : group_test(h, b, BitVector::unit(h.n(), u), backend, nonempty())) {
            edges.push_back(make_edge(u, w));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> learn_bipartite_bounded_degree(OracleHandle &h, const VertexSet &a,
                                                 const VertexSet &b, uint32_t d,
                                                 const CgtBackend &backend, Rng &rng,
                                                 double design_c) {
    if (d == 0) {
        throw std::invalid_argument("learn_bipartite_bounded_degree: d must be positive");
    }
    if (a.empty() || b.empty()) {
        return {};
    }
    if (!h.or_query(vertex_mask(h.n(), sorted_union(a, b)))) {
        return {};
    }
    VertexSet active_a = group_test(h, a, vertex_mask(h.n(), b), backend, nonempty());
    VertexSet active_b = group_test(h, b, vertex_mask(h.n(), a), backend, nonempty());
    uint32_t nb = static_cast<uint32_t>(active_b.size());
    auto design = build_nonadaptive_design(nb, std::min(d, nb), rng, design_c);

    // rows[i] bit j: does active_a[i] have a neighbour in test j?
    std::vector<BitVector> rows(active_a.size(), BitVector(design.tests.size()));
    for (size_t j = 0; j < design.tests.size(); j++) {
        if (design.tests[j].empty()) {
            continue;
        }
        BitVector base(h.n());
        for (uint32_t i : design.tests[j]) {
            base.set(active_b[i]);
        }
        GraphGroupTest oracle(h, active_a, base);
        for (uint32_t i : cgt_solve(backend, oracle)) {
            rows[i].set(j);
        }
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < active_a.size(); i++) {
        auto decoded = decode_nonadaptive(design, rows[i]);
        if (!decoded || decoded->empty()) {
            throw LearningFailure("learn_bipartite_bounded_degree: degree promise violated");
        }
        for (uint32_t local : *decoded) {
            edges.push_back(make_edge(active_a[i], active_b[local]));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> learn_cross_edges_colored(OracleHandle &h, const VertexSet &a,
                                            const VertexSet &b, const std::vector<Edge> &known_a,
                                            const std::vector<Edge> &known_b,
                                            const CgtBackend &backend,
                                            const std::optional<DegreeBound> &bound, Rng *rng) {
    if (bound && rng == nullptr) {
        throw std::invalid_argument("learn_cross_edges_colored: bounded mode needs an rng");
    }
    Coloring ca = greedy_coloring(a, known_a);
    Coloring cb = greedy_coloring(b, known_b);
    std::vector<Edge> edges;
    for (const auto &class_a : ca.classes) {
        for (const auto &class_b : cb.classes) {
            auto found = bound ? learn_bipartite_bounded_degree(h, class_a, class_b, bound->d,
                                                                backend, *rng, bound->design_c)
                               : learn_bipartite_edges(h, class_a, class_b, backend);
            edges.insert(edges.end(), found.begin(), found.end());
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> learn_merge_tree(OracleHandle &h, const Decomposition &decomposition,
                                   const CgtBackend &backend,
                                   const std::optional<DegreeBound> &bound, Rng *rng) {
    decomposition.validate(h.n());
    if (decomposition.size() == 0) {
        return {};
    }
    std::vector<VertexSet> parts = decomposition.parts;
    std::vector<std::vector<Edge>> known = decomposition.part_edges;
    for (auto &p : parts) {
        std::sort(p.begin(), p.end());
    }
    size_t padded = 1;
    while (padded < parts.size()) {
        padded *= 2;
    }
    parts.resize(padded);
    known.resize(padded);
    while (parts.size() > 1) {
        std::vector<VertexSet> next_parts;
        std::vector<std::vector<Edge>> next_known;
        for (size_t i = 0; i + 1 < parts.size(); i += 2) {
            std::vector<Edge> edges = known[i];
            edges.insert(edges.end(), known[i + 1].begin(), known[i + 1].end());
            if (!parts[i].empty() && !parts[i + 1].empty()) {
                auto cross = learn_cross_edges_colored(h, parts[i], parts[i + 1], known[i],
                                                       known[i + 1], backend, bound, rng);
                edges.insert(edges.end(), cross.begin(), cross.end());
            }
            next_parts.push_back(sorted_union(parts[i], parts[i + 1]));
            next_known.push_back(std::move(edges));
        }
        parts = std::move(next_parts);
        known = std::move(next_known);
    }
    std::sort(known[0].begin(), known[0].end());
    return known[0];
}

uint64_t peel_failure_budget(uint32_t n) {
    double budget = std::ceil(100.0 * std::log(static_cast<double>(std::max<uint32_t>(n, 2))));
    return std::max<uint64_t>(100, static_cast<uint64_t>(budget));
}

Decomposition peel_independent_sets(OracleHandle &h, double p, Rng &rng) {
    if (!(p > 0) || p > 1) {
        throw std::invalid_argument("peel_independent_sets: p must lie in (0, 1]");
    }
    VertexSet remaining(h.n());
    for (uint32_t v = 0; v < h.n(); v++) {
        remaining[v] = v;
    }
    Decomposition out;
    uint64_t failures = 0;
    uint64_t budget = peel_failure_budget(h.n());
    while (!remaining.empty()) {
        VertexSet s = p_random_subset(remaining, p, rng);
        if (s.empty()) {
            continue;
        }
        if (s.size() > 1 && h.or_query(vertex_mask(h.n(), s))) {
            if (++failures > budget) {
                throw LearningFailure("peel_independent_sets: failure budget exhausted; decrease p");
            }
            continue;
        }
        remove_all(remaining, s);
        out.parts.push_back(std::move(s));
        out.part_edges.emplace_back();
    }
    return out;
}

Graph learn_graph_or(OracleHandle &h, const CgtBackend &backend, Rng &rng,
                     const GraphOrOptions &options) {
    const uint32_t n = h.n();
    auto p_for = [&](double m) {
        return m <= 0 ? 1.0 : std::min(1.0, 1.0 / (options.p_scale * std::sqrt(m)));
    };
    const bool known = options.m_hint.has_value();
    double m_est = known ? static_cast<double>(*options.m_hint) : 0.0;
    double p = p_for(m_est);
    const uint64_t known_budget = peel_failure_budget(n);

    VertexSet remaining(n);
    for (uint32_t v = 0; v < n; v++) {
        remaining[v] = v;
    }
    Decomposition decomposition;
    uint64_t failures = 0;
    uint64_t attempts = 0;
    while (!remaining.empty()) {
        VertexSet s = p_random_subset(remaining, p, rng);
        if (s.empty()) {
            continue;
        }
        attempts++;
        if (s.size() > 1 && h.or_query(vertex_mask(n, s))) {
            failures++;
            uint64_t budget = known ? known_budget : 8 + attempts / 8;
            if (failures > budget) {
                if (known) {
                    p /= 2;
                } else {
                    m_est = std::max(1.0, 2 * m_est);
                    p = p_for(m_est);
                }
                failures = 0;
                attempts = 0;
            }
            continue;
        }
        remove_all(remaining, s);
        decomposition.parts.push_back(std::move(s));
        decomposition.part_edges.emplace_back();
    }
    auto edges = learn_merge_tree(h, decomposition, backend, options.degree_bound, &rng);
    return Graph(n, std::move(edges));
}

VertexSet learn_clique_or(OracleHandle &h, uint32_t k, const CgtBackend &backend, Rng &rng) {
    const uint32_t n = h.n();
    if (k < 2 || k > n) {
        throw std::invalid_argument("learn_clique_or: need 2 <= k <= n");
    }
    VertexSet everyone(n);
    for (uint32_t v = 0; v < n; v++) {
        everyone[v] = v;
    }
    for (int attempt = 0; attempt < kMaxAttempts; attempt++) {
        std::optional<uint32_t> anchor;
        for (int round = 0; round < kMaxSamplesPerAttempt && !anchor; round++) {
            VertexSet r = p_random_subset(everyone, 1.0 / k, rng);
            if (r.size() < 2) {
                continue;
            }
            BitVector domain = vertex_mask(n, r);
            if (!h.or_query(domain)) {
                continue;
            }
            auto outcome = h.fourier_sample_or(domain);
            if (outcome && outcome->any()) {
                auto bits = outcome->indices();
                anchor = bits[uniform_below(rng, bits.size())];
            }
        }
        if (!anchor) {
            continue;
        }
        CgtOptions opts = nonempty();
        opts.k = k - 1;
        VertexSet others;
        try {
            others = group_test(h, all_vertices_except(n, *anchor), BitVector::unit(n, *anchor),
                                backend, opts);
        } catch (const CgtViolation &) {
            throw LearningFailure("learn_clique_or: hidden graph is not a k-clique");
        }
        if (others.size() + 1 != k) {
            throw LearningFailure("learn_clique_or: hidden graph is not a k-clique");
        }
        others.push_back(*anchor);
        std::sort(others.begin(), others.end());
        return others;
    }
    throw LearningFailure("learn_clique_or: no clique vertex found within the attempt cap");
}

Graph StarResult::graph(uint32_t n) const {
    std::vector<Edge> edges;
    if (center) {
        for (uint32_t l : leaves) {
            edges.push_back(make_edge(*center, l));
        }
    } else if (leaves.size() == 2) {
        edges.push_back(make_edge(leaves[0], leaves[1]));
    }
    return Graph(n, std::move(edges));
}

StarResult learn_star_or(OracleHandle &h, const CgtBackend &backend) {
    const uint32_t n = h.n();
    BitVector everyone = BitVector::ones(n);
    constexpr int kMaxSamples = 20;
    std::optional<uint32_t> candidate;
    int zeros = 0;
    for (int i = 0; i < kMaxSamples && !candidate; i++) {
        auto outcome = h.fourier_sample_or(everyone);
        if (!outcome) {
            continue;
        }
        size_t weight = outcome->popcount();
        if (weight == 0) {
            zeros++;
        } else if (weight == 1) {
            candidate = outcome->indices()[0];
        }
    }
    if (!candidate) {
        if (zeros == kMaxSamples && !h.or_query(everyone)) {
            return {};
        }
        throw LearningFailure("learn_star_or: centre not found within the sample cap");
    }
    auto neighbours_of = [&](uint32_t v) {
        return group_test(h, all_vertices_except(n, v), BitVector::unit(n, v), backend, nonempty());
    };
    VertexSet leaves = neighbours_of(*candidate);
    if (leaves.size() >= 2) {
        return {candidate, leaves};
    }
    if (leaves.size() != 1) {
        throw LearningFailure("learn_star_or: hidden graph is not a star");
    }
    // The sample hit a leaf, or the star has a single edge.
    uint32_t other = leaves[0];
    VertexSet second = neighbours_of(other);
    if (second.size() >= 2) {
        return {other, second};
    }
    VertexSet ends{std::min(*candidate, other), std::max(*candidate, other)};
    return {std::nullopt, ends};
}

}  // namespace gql
