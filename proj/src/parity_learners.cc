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

#include "gql/parity_learners.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace gql {

namespace {

constexpr uint32_t kNoMember = 0xFFFFFFFFu;

double subsets_up_to(size_t n, uint32_t d) {
    double total = 0;
    double term = 1;
    for (uint32_t l = 0; l <= d && l <= n; l++) {
        total += term;
        term = term * static_cast<double>(n - l) / static_cast<double>(l + 1);
    }
    return total;
}

uint64_t mix(uint64_t key) {
    return key * 0x9E3779B97F4A7C15ull;
}

}  // namespace

SampleBatch collect_samples(OracleHandle &h, size_t k, BellCharge charge) {
    SampleBatch batch{BitMatrix(h.n(), k), BitMatrix(h.n(), k)};
    for (size_t i = 0; i < k; i++) {
        BellSample sample = h.bell_sample(charge);
        for (uint32_t v : sample.s.indices()) {
            batch.b.set(v, i);
        }
        for (uint32_t v : sample.y.indices()) {
            batch.y.set(v, i);
        }
    }
    return batch;
}

size_t family_sample_count(size_t family_size, uint32_t slack) {
    if (family_size <= 1) {
        return 0;
    }
    return static_cast<size_t>(std::ceil(2 * std::log2(static_cast<double>(family_size)) - 1e-9)) +
           slack;
}

Graph learn_from_family(OracleHandle &h, const std::vector<Graph> &family,
                        const FamilyOptions &options) {
    if (family.empty()) {
        throw std::invalid_argument("learn_from_family: empty family");
    }
    for (const auto &g : family) {
        if (g.n() != h.n()) {
            throw std::invalid_argument("learn_from_family: member vertex count differs from oracle");
        }
    }
    if (family.size() == 1) {
        return family[0];
    }
    size_t k = options.samples.value_or(family_sample_count(family.size(), options.slack));
    std::vector<BellSample> samples;
    samples.reserve(k);
    for (size_t i = 0; i < k; i++) {
        samples.push_back(h.bell_sample(options.charge));
    }
    const Graph *match = nullptr;
    size_t matches = 0;
    for (const auto &g : family) {
        bool consistent = std::all_of(samples.begin(), samples.end(), [&](const BellSample &s) {
            return matvec(g.adjacency(), s.s) == s.y;
        });
        if (consistent) {
            matches++;
            match = &g;
        }
    }
    if (matches == 0) {
        throw LearningFailure("learn_from_family: no family member fits the samples");
    }
    if (matches > 1) {
        throw LearningFailure("learn_from_family: several family members fit the samples");
    }
    return *match;
}

LowWeightSolver::LowWeightSolver(std::vector<BitVector> columns, uint32_t d, uint64_t max_table)
    : columns_(std::move(columns)), d_(d), half_((d + 1) / 2) {
    size_t length = columns_.empty() ? 0 : columns_[0].size();
    for (const auto &c : columns_) {
        if (c.size() != length) {
            throw std::invalid_argument("LowWeightSolver: columns differ in length");
        }
    }
    words_ = std::max<size_t>(1, (length + 63) / 64);
    double entries = subsets_up_to(columns_.size(), half_);
    if (entries > static_cast<double>(max_table)) {
        throw ScaleError("LowWeightSolver: subset table too large");
    }
    size_t count = static_cast<size_t>(entries);
    syndromes_.reserve(count * words_);
    members_.reserve(count * std::max<uint32_t>(half_, 1));
    for_each_subset(half_, [&](const uint32_t *members, uint32_t size, const uint64_t *syndrome) {
        syndromes_.insert(syndromes_.end(), syndrome, syndrome + words_);
        for (uint32_t i = 0; i < std::max<uint32_t>(half_, 1); i++) {
            members_.push_back(i < size ? members[i] : kNoMember);
        }
        return true;
    });
    count = syndromes_.size() / words_;
    bucket_bits_ = 1;
    while ((size_t{1} << bucket_bits_) < count) {
        bucket_bits_++;
    }
    size_t buckets = size_t{1} << bucket_bits_;
    bucket_start_.assign(buckets + 1, 0);
    std::vector<uint32_t> bucket_of(count);
    for (size_t e = 0; e < count; e++) {
        bucket_of[e] = static_cast<uint32_t>(mix(syndromes_[e * words_]) >> (64 - bucket_bits_));
        bucket_start_[bucket_of[e] + 1]++;
    }
    for (size_t b = 0; b < buckets; b++) {
        bucket_start_[b + 1] += bucket_start_[b];
    }
    order_.assign(count, 0);
    std::vector<uint32_t> fill(bucket_start_.begin(), bucket_start_.end() - 1);
    for (size_t e = 0; e < count; e++) {
        order_[fill[bucket_of[e]]++] = static_cast<uint32_t>(e);
    }
}

template <typename Visit>
void LowWeightSolver::for_each_subset(uint32_t max_size, Visit &&visit) const {
    std::vector<uint32_t> members(max_size + 1);
    std::vector<uint64_t> stack((max_size + 1) * words_, 0);
    bool go = visit(members.data(), 0, stack.data());
    // Depth-first over increasing index sequences; level t holds the XOR of
    // the first t chosen columns.
    auto recurse = [&](auto &&self, uint32_t depth, uint32_t start) -> void {
        for (uint32_t i = start; i < columns_.size() && go; i++) {
            members[depth] = i;
            const uint64_t *prev = stack.data() + depth * words_;
            uint64_t *cur = stack.data() + (depth + 1) * words_;
            auto col = columns_[i].words();
            for (size_t w = 0; w < words_; w++) {
                cur[w] = prev[w] ^ (w < col.size() ? col[w] : 0);
            }
            go = visit(members.data(), depth + 1, cur);
            if (go && depth + 1 < max_size) {
                self(self, depth + 1, i + 1);
            }
        }
    };
    if (go && max_size > 0) {
        recurse(recurse, 0, 0);
    }
}

std::vector<VertexSet> LowWeightSolver::solve(const BitVector &target, size_t limit) const {
    if (!columns_.empty() && target.size() != columns_[0].size()) {
        throw std::invalid_argument("LowWeightSolver::solve: target length differs from columns");
    }
    std::vector<uint64_t> t(words_, 0);
    auto tw = target.words();
    std::copy(tw.begin(), tw.end(), t.begin());
    std::set<VertexSet> found;
    std::vector<uint64_t> need(words_);
    const uint32_t slots = std::max<uint32_t>(half_, 1);
    for_each_subset(d_ - half_, [&](const uint32_t *q, uint32_t q_size, const uint64_t *syndrome) {
        for (size_t w = 0; w < words_; w++) {
            need[w] = t[w] ^ syndrome[w];
        }
        uint32_t b = static_cast<uint32_t>(mix(need[0]) >> (64 - bucket_bits_));
        for (uint32_t pos = bucket_start_[b]; pos < bucket_start_[b + 1]; pos++) {
            uint32_t e = order_[pos];
            if (!std::equal(need.begin(), need.end(), syndromes_.begin() + e * words_)) {
                continue;
            }
            VertexSet solution(q, q + q_size);
            bool disjoint = true;
            for (uint32_t i = 0; i < slots && members_[e * slots + i] != kNoMember; i++) {
                uint32_t p = members_[e * slots + i];
                if (std::find(q, q + q_size, p) != q + q_size) {
                    disjoint = false;
                    break;
                }
                solution.push_back(p);
            }
            if (!disjoint) {
                continue;
            }
            std::sort(solution.begin(), solution.end());
            found.insert(std::move(solution));
            if (found.size() >= limit) {
                return false;
            }
        }
        return true;
    });
    return std::vector<VertexSet>(found.begin(), found.end());
}

bool BoundedDegreeResult::ambiguous() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const RowResult &r) { return r.status == RowStatus::ambiguous; });
}

VertexSet BoundedDegreeResult::over_degree() const {
    VertexSet out;
    for (uint32_t v = 0; v < rows.size(); v++) {
        if (rows[v].status == RowStatus::over_degree) {
            out.push_back(v);
        }
    }
    return out;
}

Graph BoundedDegreeResult::graph() const {
    uint32_t n = static_cast<uint32_t>(rows.size());
    std::set<Edge> edges;
    for (uint32_t v = 0; v < n; v++) {
        if (rows[v].status != RowStatus::exact) {
            continue;
        }
        for (uint32_t u : rows[v].neighbors) {
            const RowResult &other = rows[u];
            if (other.status == RowStatus::exact &&
                !std::binary_search(other.neighbors.begin(), other.neighbors.end(), v)) {
                throw LearningFailure("learn_bounded_degree: recovered rows disagree");
            }
            edges.insert(make_edge(u, v));
        }
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

size_t bounded_degree_sample_count(size_t non_isolated, uint32_t d, uint32_t slack) {
    if (non_isolated == 0) {
        return 0;
    }
    double events = static_cast<double>(non_isolated) * subsets_up_to(non_isolated, d);
    return static_cast<size_t>(std::ceil(std::log2(events) - 1e-9)) + slack;
}

BoundedDegreeResult learn_bounded_degree(OracleHandle &h, uint32_t d,
                                         const BoundedDegreeOptions &options) {
    const uint32_t n = h.n();
    BoundedDegreeResult result;
    result.rows.assign(n, RowResult{});
    uint64_t all_pairs = uint64_t{n} * (n > 0 ? n - 1 : 0) / 2;
    uint64_t m_hat = std::max<uint64_t>(1, options.m_hint.value_or(all_pairs));
    // At most 2m nonzero rows, each missed with probability 2^-l.
    uint64_t rows_bound = std::min<uint64_t>(n == 0 ? 1 : n, 2 * m_hat);
    size_t l = static_cast<size_t>(std::ceil(std::log2(static_cast<double>(rows_bound)) - 1e-9)) +
               options.slack;
    SampleBatch phase1 = collect_samples(h, l, options.charge);
    result.phase1_samples = l;
    for (uint32_t v = 0; v < n; v++) {
        if (phase1.y.row(v).any()) {
            result.non_isolated.push_back(v);
        }
    }
    if (result.non_isolated.empty()) {
        return result;
    }
    const VertexSet &w = result.non_isolated;
    size_t k = bounded_degree_sample_count(w.size(), d, options.phase2_slack);
    SampleBatch phase2 = collect_samples(h, k, options.charge);
    result.phase2_samples = k;
    std::vector<BitVector> columns;
    columns.reserve(w.size());
    for (uint32_t u : w) {
        columns.push_back(phase2.b.row(u));
    }
    LowWeightSolver solver(std::move(columns), d, options.max_table);
    for (uint32_t v : w) {
        auto solutions = solver.solve(phase2.y.row(v), 2);
        RowResult &row = result.rows[v];
        if (solutions.empty()) {
            row.status = RowStatus::over_degree;
        } else if (solutions.size() > 1) {
            row.status = RowStatus::ambiguous;
        } else {
            for (uint32_t local : solutions[0]) {
                row.neighbors.push_back(w[local]);
            }
        }
    }
    h.charge_bit_ops(solver.table_size() * w.size());
    return result;
}

Graph learn_subgraph_of(OracleHandle &h, const Graph &g_prime, uint32_t d,
                        const SubgraphOptions &options) {
    const uint32_t n = h.n();
    if (g_prime.n() != n) {
        throw std::invalid_argument("learn_subgraph_of: G' vertex count differs from oracle");
    }
    if (g_prime.max_degree() > d) {
        throw std::invalid_argument("learn_subgraph_of: G' exceeds the degree bound");
    }
    if (g_prime.m() == 0) {
        return Graph(n);
    }
    uint32_t log_n = 0;
    while ((uint64_t{1} << log_n) < n) {
        log_n++;
    }
    size_t k = d + log_n + options.slack;
    SampleBatch batch = collect_samples(h, k, options.charge);
    BitMatrix adjacency(n, n);
    for (uint32_t v = 0; v < n; v++) {
        VertexSet candidates = g_prime.neighbors(v).indices();
        if (candidates.empty()) {
            if (batch.y.row(v).any()) {
                throw LearningFailure("learn_subgraph_of: hidden graph is not a subgraph of G'");
            }
            continue;
        }
        // Row i: s_i restricted to v's candidate neighbours.
        BitMatrix system(k, candidates.size());
        for (size_t j = 0; j < candidates.size(); j++) {
            for (uint32_t i : batch.b.row(candidates[j]).indices()) {
                system.set(i, j);
            }
        }
        auto solution = solve(system, batch.y.row(v));
        if (!solution) {
            throw LearningFailure("learn_subgraph_of: hidden graph is not a subgraph of G'");
        }
        if (!solution->nullspace.empty()) {
            throw LearningFailure("learn_subgraph_of: samples leave a row undetermined");
        }
        for (uint32_t j : solution->particular.indices()) {
            adjacency.set(v, candidates[j]);
        }
    }
    if (!adjacency.is_symmetric()) {
        throw LearningFailure("learn_subgraph_of: recovered rows are not symmetric");
    }
    return Graph::from_adjacency(adjacency);
}

Graph learn_arbitrary_parity(OracleHandle &h) {
    const uint32_t n = h.n();
    BitMatrix adjacency(n, n);
    for (uint32_t v = 0; v < n; v++) {
        adjacency.set_row(v, h.parity_vector_query(BitVector::unit(n, v)));
    }
    for (uint32_t v = 0; v < n; v++) {
        if (adjacency.get(v, v)) {
            throw LearningFailure("learn_arbitrary_parity: nonzero diagonal");
        }
    }
    if (!adjacency.is_symmetric()) {
        throw LearningFailure("learn_arbitrary_parity: rows are not symmetric");
    }
    return Graph::from_adjacency(adjacency);
}

uint32_t bounded_edges_degree(uint64_t m) {
    double md = static_cast<double>(m);
    double d = std::ceil(std::sqrt(md / std::log2(md + 2)) - 1e-9);
    return std::max<uint32_t>(1, static_cast<uint32_t>(d));
}

Graph learn_bounded_edges_parity(OracleHandle &h, uint64_t m, const BoundedEdgesOptions &options) {
    const uint32_t n = h.n();
    if (m == 0) {
        return Graph(n);
    }
    uint32_t d = bounded_edges_degree(m);
    if (4 * uint64_t{d} > n) {
        return learn_arbitrary_parity(h);
    }
    BoundedDegreeOptions bd;
    bd.m_hint = m;
    bd.slack = options.slack;
    bd.phase2_slack = options.phase2_slack;
    bd.charge = BellCharge::parity_queries;
    BoundedDegreeResult low = learn_bounded_degree(h, d, bd);
    BitMatrix adjacency(n, n);
    for (uint32_t v = 0; v < n; v++) {
        const RowResult &row = low.rows[v];
        if (row.status == RowStatus::exact) {
            for (uint32_t u : row.neighbors) {
                adjacency.set(v, u);
            }
        } else {
            // Dense or ambiguous rows are read directly.
            adjacency.set_row(v, h.parity_vector_query(BitVector::unit(n, v)));
        }
    }
    if (!adjacency.is_symmetric()) {
        throw LearningFailure("learn_bounded_edges_parity: recovered rows disagree");
    }
    Graph g = Graph::from_adjacency(adjacency);
    if (g.m() > m) {
        throw LearningFailure("learn_bounded_edges_parity: more than m edges recovered");
    }
    return g;
}

StarResult learn_star_graphstate(OracleHandle &h) {
    constexpr int kMaxCopies = 200;
    std::optional<uint32_t> centre;
    std::optional<BitVector> pattern;
    for (int i = 0; i < kMaxCopies && !(centre && pattern); i++) {
        BitVector outcome = h.graphstate_hadamard_sample();
        size_t weight = outcome.popcount();
        if (weight == 1) {
            centre = outcome.indices()[0];
        } else if (weight >= 2) {
            pattern = std::move(outcome);
        }
    }
    if (!centre || !pattern) {
        throw LearningFailure("learn_star_graphstate: copy cap reached");
    }
    pattern->set(*centre, false);
    VertexSet leaves = pattern->indices();
    if (leaves.size() < 2) {
        throw LearningFailure("learn_star_graphstate: hidden graph is not a star with m >= 2");
    }
    return {centre, leaves};
}

VertexSet learn_clique_graphstate(OracleHandle &h) {
    constexpr size_t kMinSamples = 7;
    constexpr size_t kMaxSamples = 20;
    const uint32_t n = h.n();
    std::vector<BellSample> samples;
    BitVector support(n);
    auto consistent = [&]() {
        // A clique on `support` maps s to y_v = |s cap support \ {v}| mod 2 on the support.
        for (const auto &s : samples) {
            bool total = s.s.dot(support);
            for (uint32_t v = 0; v < n; v++) {
                bool expect = support.get(v) && (total ^ s.s.get(v));
                if (s.y.get(v) != expect) {
                    return false;
                }
            }
        }
        return true;
    };
    while (samples.size() < kMaxSamples) {
        samples.push_back(h.bell_sample());
        support |= samples.back().y;
        if (samples.size() >= kMinSamples && support.popcount() >= 2 && consistent()) {
            return support.indices();
        }
    }
    throw LearningFailure("learn_clique_graphstate: no consistent clique within the sample cap");
}

}  // namespace gql
