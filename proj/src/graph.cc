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

#include "gql/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace gql {

Edge make_edge(uint32_t u, uint32_t v) {
    if (u == v) {
        throw std::invalid_argument("make_edge: self-loop");
    }
    return u < v ? Edge{u, v} : Edge{v, u};
}

BitVector vertex_mask(uint32_t n, const VertexSet &vertices) {
    return BitVector::from_indices(n, vertices);
}

Graph::Graph(uint32_t n) : n_(n), adjacency_(n, n) {
}

Graph::Graph(uint32_t n, std::vector<Edge> edges) : n_(n), adjacency_(n, n) {
    for (auto &e : edges) {
        if (e.first >= n || e.second >= n) {
            throw std::invalid_argument("Graph: endpoint out of range");
        }
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("Graph: repeated edge");
    }
    for (const auto &[u, v] : edges) {
        adjacency_.set(u, v);
        adjacency_.set(v, u);
    }
    edges_ = std::move(edges);
}

Graph Graph::from_adjacency(const BitMatrix &adjacency) {
    if (adjacency.rows() != adjacency.cols()) {
        throw std::invalid_argument("Graph::from_adjacency: matrix is not square");
    }
    if (!adjacency.is_symmetric()) {
        throw std::invalid_argument("Graph::from_adjacency: matrix is not symmetric");
    }
    uint32_t n = static_cast<uint32_t>(adjacency.rows());
    std::vector<Edge> edges;
    for (uint32_t u = 0; u < n; u++) {
        if (adjacency.get(u, u)) {
            throw std::invalid_argument("Graph::from_adjacency: nonzero diagonal");
        }
        for (uint32_t v : adjacency.row(u).indices()) {
            if (u < v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, std::move(edges));
}

Graph Graph::complete(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t u = 0; u < n; u++) {
        for (uint32_t v = u + 1; v < n; v++) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

size_t Graph::max_degree() const {
    size_t best = 0;
    for (uint32_t v = 0; v < n_; v++) {
        best = std::max(best, degree(v));
    }
    return best;
}

VertexSet Graph::non_isolated() const {
    VertexSet out;
    for (uint32_t v = 0; v < n_; v++) {
        if (adjacency_.row(v).any()) {
            out.push_back(v);
        }
    }
    return out;
}

bool Graph::induces_edge(const BitVector &subset) const {
    if (subset.size() != n_) {
        throw std::invalid_argument("Graph::induces_edge: subset length differs from n");
    }
    for (uint32_t v : subset.indices()) {
        if (adjacency_.row(v).intersects(subset)) {
            return true;
        }
    }
    return false;
}

bool Graph::induced_parity(const BitVector &subset) const {
    if (subset.size() != n_) {
        throw std::invalid_argument("Graph::induced_parity: subset length differs from n");
    }
    // Each induced edge is seen from both endpoints.
    size_t twice = 0;
    auto s = subset.words();
    for (uint32_t v : subset.indices()) {
        auto r = adjacency_.row(v).words();
        for (size_t w = 0; w < s.size(); w++) {
            twice += std::popcount(r[w] & s[w]);
        }
    }
    return ((twice / 2) & 1) != 0;
}

std::string to_edge_list(const Graph &g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto &[u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) {
        throw std::invalid_argument("parse_edge_list: bad header");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; i++) {
        long long u = -1, v = -1;
        if (!(in >> u >> v) || u < 0 || v < 0 || u >= n || v >= n) {
            throw std::invalid_argument("parse_edge_list: bad edge line");
        }
        if (u >= v) {
            throw std::invalid_argument("parse_edge_list: edges must be written as i < j");
        }
        edges.emplace_back(static_cast<uint32_t>(u), static_cast<uint32_t>(v));
    }
    std::string rest;
    if (in >> rest) {
        throw std::invalid_argument("parse_edge_list: trailing content");
    }
    return Graph(static_cast<uint32_t>(n), std::move(edges));
}

namespace {

constexpr std::pair<FamilyKind, std::string_view> kKindNames[] = {
    {FamilyKind::matching, "matching"},
    {FamilyKind::hamiltonian_cycle, "hamiltonian_cycle"},
    {FamilyKind::star, "star"},
    {FamilyKind::clique, "clique"},
    {FamilyKind::bounded_degree, "bounded_degree"},
    {FamilyKind::fixed_edge_count, "fixed_edge_count"},
    {FamilyKind::subgraph_of, "subgraph_of"},
    {FamilyKind::two_clique_adversary, "two_clique_adversary"},
};

uint64_t pair_count(uint32_t n) {
    return uint64_t{n} * (n - (n > 0 ? 1 : 0)) / 2;
}

Edge random_pair(uint32_t n, Rng &rng) {
    uint32_t u = static_cast<uint32_t>(uniform_below(rng, n));
    uint32_t v = static_cast<uint32_t>(uniform_below(rng, n - 1));
    if (v >= u) {
        v++;
    }
    return make_edge(u, v);
}

std::vector<Edge> all_pairs(uint32_t n) {
    std::vector<Edge> out;
    out.reserve(pair_count(n));
    for (uint32_t u = 0; u < n; u++) {
        for (uint32_t v = u + 1; v < n; v++) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

// Support vertices in uniformly random order.
std::vector<uint32_t> random_placement(uint32_t n, uint32_t count, Rng &rng) {
    auto vs = random_subset(n, count, rng);
    shuffle(vs, rng);
    return vs;
}

Graph gen_fixed_edge_count(uint32_t n, size_t m, Rng &rng) {
    uint64_t total = pair_count(n);
    if (2 * m <= total) {
        struct PairHash {
            size_t operator()(const Edge &e) const noexcept {
                return (uint64_t{e.first} << 32) ^ e.second;
            }
        };
        std::unordered_set<Edge, PairHash> chosen;
        std::vector<Edge> edges;
        while (edges.size() < m) {
            Edge e = random_pair(n, rng);
            if (chosen.insert(e).second) {
                edges.push_back(e);
            }
        }
        return Graph(n, std::move(edges));
    }
    auto pairs = all_pairs(n);
    for (size_t i = 0; i < m; i++) {
        size_t j = i + uniform_below(rng, pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    return Graph(n, std::move(pairs));
}

Graph gen_bounded_degree(uint32_t n, uint32_t d, size_t m, Rng &rng) {
    constexpr int kAttempts = 64;
    for (int attempt = 0; attempt < kAttempts; attempt++) {
        auto pairs = all_pairs(n);
        shuffle(pairs, rng);
        std::vector<uint32_t> deg(n, 0);
        std::vector<Edge> edges;
        for (const auto &[u, v] : pairs) {
            if (m != 0 && edges.size() == m) {
                break;
            }
            if (deg[u] < d && deg[v] < d) {
                deg[u]++;
                deg[v]++;
                edges.emplace_back(u, v);
            }
        }
        if (m == 0 || edges.size() == m) {
            return Graph(n, std::move(edges));
        }
    }
    throw std::invalid_argument("generate: could not place the requested edges under the degree cap");
}

}  // namespace

std::string_view family_kind_name(FamilyKind kind) {
    for (const auto &[k, name] : kKindNames) {
        if (k == kind) {
            return name;
        }
    }
    throw std::invalid_argument("family_kind_name: unknown kind");
}

FamilyKind parse_family_kind(std::string_view name) {
    for (const auto &[k, kname] : kKindNames) {
        if (kname == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown family kind: " + std::string(name));
}

void FamilySpec::validate() const {
    auto fail = [](const std::string &msg) {
        throw std::invalid_argument("FamilySpec: " + msg);
    };
    switch (kind) {
        case FamilyKind::matching:
            if (support % 2 != 0) fail("matching requires an even support size");
            if (support > n) fail("support exceeds n");
            break;
        case FamilyKind::hamiltonian_cycle:
            if (support < 3) fail("cycle length must be at least 3");
            if (support > n) fail("support exceeds n");
            break;
        case FamilyKind::star:
            if (m + 1 > n) fail("star needs m + 1 <= n");
            break;
        case FamilyKind::clique:
            if (support > n) fail("support exceeds n");
            break;
        case FamilyKind::bounded_degree:
            if (d >= n) fail("degree cap must be below n");
            if (m > uint64_t{n} * d / 2) fail("m exceeds n*d/2");
            break;
        case FamilyKind::fixed_edge_count:
            if (m > pair_count(n)) fail("m exceeds n(n-1)/2");
            break;
        case FamilyKind::subgraph_of:
            if (!base) fail("subgraph_of requires a base graph");
            break;
        case FamilyKind::two_clique_adversary:
            if (n % 2 != 0) fail("two_clique_adversary requires even n");
            if (cross && (cross->rows() != n / 2 || cross->cols() != n / 2)) {
                fail("cross block must be (n/2) x (n/2)");
            }
            break;
    }
}

Graph generate(const FamilySpec &spec, Rng &rng) {
    spec.validate();
    const uint32_t n = spec.n;
    std::vector<Edge> edges;
    switch (spec.kind) {
        case FamilyKind::matching: {
            auto vs = random_placement(n, spec.support, rng);
            for (size_t i = 0; i + 1 < vs.size(); i += 2) {
                edges.push_back(make_edge(vs[i], vs[i + 1]));
            }
            break;
        }
        case FamilyKind::hamiltonian_cycle: {
            auto vs = random_placement(n, spec.support, rng);
            for (size_t i = 0; i < vs.size(); i++) {
                edges.push_back(make_edge(vs[i], vs[(i + 1) % vs.size()]));
            }
            break;
        }
        case FamilyKind::star: {
            if (spec.m == 0) {
                break;
            }
            auto vs = random_placement(n, static_cast<uint32_t>(spec.m + 1), rng);
            for (size_t i = 1; i < vs.size(); i++) {
                edges.push_back(make_edge(vs[0], vs[i]));
            }
            break;
        }
        case FamilyKind::clique: {
            auto vs = random_subset(n, spec.support, rng);
            for (size_t i = 0; i < vs.size(); i++) {
                for (size_t j = i + 1; j < vs.size(); j++) {
                    edges.emplace_back(vs[i], vs[j]);
                }
            }
            break;
        }
        case FamilyKind::bounded_degree:
            return gen_bounded_degree(n, spec.d, spec.m, rng);
        case FamilyKind::fixed_edge_count:
            return gen_fixed_edge_count(n, spec.m, rng);
        case FamilyKind::subgraph_of:
            for (const auto &e : spec.base->edges()) {
                if (coin(rng)) {
                    edges.push_back(e);
                }
            }
            return Graph(spec.base->n(), std::move(edges));
        case FamilyKind::two_clique_adversary: {
            uint32_t half = n / 2;
            BitMatrix cross = spec.cross ? *spec.cross : BitMatrix::random(half, half, rng);
            return adversary_instance(half, cross);
        }
    }
    return Graph(n, std::move(edges));
}

Graph adversary_instance(uint32_t n, const BitMatrix &cross) {
    if (cross.rows() != n || cross.cols() != n) {
        throw std::invalid_argument("adversary_instance: cross block must be n x n");
    }
    std::vector<Edge> edges;
    for (uint32_t side = 0; side < 2; side++) {
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = i + 1; j < n; j++) {
                edges.emplace_back(side * n + i, side * n + j);
            }
        }
    }
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j : cross.row(i).indices()) {
            edges.emplace_back(i, n + j);
        }
    }
    return Graph(2 * n, std::move(edges));
}

std::vector<Graph> all_subgraphs(const Graph &g) {
    if (g.m() > 20) {
        throw std::invalid_argument("all_subgraphs: more than 20 edges");
    }
    std::vector<Graph> out;
    out.reserve(size_t{1} << g.m());
    for (uint64_t mask = 0; mask < (uint64_t{1} << g.m()); mask++) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < g.m(); i++) {
            if ((mask >> i) & 1) {
                edges.push_back(g.edges()[i]);
            }
        }
        out.emplace_back(g.n(), std::move(edges));
    }
    return out;
}

std::vector<Graph> all_graphs(uint32_t n) {
    if (n > 6) {
        throw std::invalid_argument("all_graphs: n must be at most 6");
    }
    return all_subgraphs(Graph::complete(n));
}

}  // namespace gql
