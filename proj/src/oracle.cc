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

#include "gql/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace gql {

namespace {

constexpr uint32_t kMaxEnumeratedVertices = 16;

// Cumulative distribution of the squared spectrum of (-1)^table.
std::vector<double> squared_spectrum_cumulative(const std::vector<int64_t> &spectrum) {
    std::vector<double> cumulative(spectrum.size());
    double total = 0;
    for (size_t i = 0; i < spectrum.size(); i++) {
        total += static_cast<double>(spectrum[i]) * static_cast<double>(spectrum[i]);
        cumulative[i] = total;
    }
    return cumulative;
}

// Adjacency restricted to `vars`, as one bitmask per local vertex.
std::vector<uint32_t> local_adjacency(const Graph &g, const VertexSet &vars) {
    std::vector<uint32_t> masks(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); i++) {
        for (size_t j = 0; j < vars.size(); j++) {
            if (g.has_edge(vars[i], vars[j])) {
                masks[i] |= uint32_t{1} << j;
            }
        }
    }
    return masks;
}

// Centre of the star formed by the edges among `vars`, if they form one.
std::optional<uint32_t> star_centre(const Graph &g, const VertexSet &vars, const BitVector &domain) {
    if (vars.size() < 2) {
        return std::nullopt;
    }
    for (uint32_t c : vars) {
        size_t deg = (g.neighbors(c) & domain).popcount();
        if (deg + 1 == vars.size()) {
            for (uint32_t u : vars) {
                if (u != c && (g.neighbors(u) & domain).popcount() != 1) {
                    return std::nullopt;
                }
            }
            return c;
        }
    }
    return std::nullopt;
}

}  // namespace

QueryLedger &QueryLedger::operator+=(const QueryLedger &other) {
    or_query += other.or_query;
    parity_query += other.parity_query;
    graph_state_copy += other.graph_state_copy;
    charged_quantum += other.charged_quantum;
    junta_query += other.junta_query;
    classical_bit_ops += other.classical_bit_ops;
    reveal_used += other.reveal_used;
    return *this;
}

std::string ledger_to_json(const QueryLedger &ledger) {
    nlohmann::ordered_json j;
    j["or_query"] = ledger.or_query;
    j["parity_query"] = ledger.parity_query;
    j["graph_state_copy"] = ledger.graph_state_copy;
    j["charged_quantum"] = ledger.charged_quantum;
    j["junta_query"] = ledger.junta_query;
    j["classical_bit_ops"] = ledger.classical_bit_ops;
    j["reveal_used"] = ledger.reveal_used;
    return j.dump();
}

QueryLedger ledger_from_json(std::string_view text) {
    auto j = nlohmann::json::parse(text);
    QueryLedger l;
    l.or_query = j.at("or_query").get<uint64_t>();
    l.parity_query = j.at("parity_query").get<uint64_t>();
    l.graph_state_copy = j.at("graph_state_copy").get<uint64_t>();
    l.charged_quantum = j.at("charged_quantum").get<uint64_t>();
    l.junta_query = j.value("junta_query", uint64_t{0});
    l.classical_bit_ops = j.value("classical_bit_ops", uint64_t{0});
    l.reveal_used = j.value("reveal_used", uint64_t{0});
    return l;
}

void Junta::validate() const {
    if (vars.size() != g.arity()) {
        throw std::invalid_argument("Junta: variable count differs from arity of g");
    }
    std::vector<bool> seen(n, false);
    for (uint32_t v : vars) {
        if (v >= n) {
            throw std::invalid_argument("Junta: variable out of range");
        }
        if (seen[v]) {
            throw std::invalid_argument("Junta: repeated variable");
        }
        seen[v] = true;
    }
}

bool Junta::evaluate(const BitVector &x) const {
    if (x.size() != n) {
        throw std::invalid_argument("Junta::evaluate: input length differs from n");
    }
    uint64_t local = 0;
    for (size_t i = 0; i < vars.size(); i++) {
        if (x.get(vars[i])) {
            local |= uint64_t{1} << i;
        }
    }
    return g(local);
}

VertexSet Junta::support() const {
    VertexSet s = vars;
    std::sort(s.begin(), s.end());
    return s;
}

OracleHandle::OracleHandle(Graph hidden, uint64_t seed)
    : hidden_(std::move(hidden)), n_(std::get<Graph>(hidden_).n()), rng_(seed) {
}

OracleHandle::OracleHandle(Junta hidden, uint64_t seed) : rng_(seed) {
    hidden.validate();
    n_ = hidden.n;
    hidden_ = std::move(hidden);
}

const Graph &OracleHandle::graph() const {
    if (!holds_graph()) {
        throw UnsupportedOracleError("graph query on a junta oracle");
    }
    return std::get<Graph>(hidden_);
}

const Junta &OracleHandle::junta() const {
    if (!holds_junta()) {
        throw UnsupportedOracleError("junta query on a graph oracle");
    }
    return std::get<Junta>(hidden_);
}

bool OracleHandle::or_query(const BitVector &subset) {
    bool r = graph().induces_edge(subset);
    ledger_.or_query++;
    return r;
}

bool OracleHandle::or_query(const VertexSet &subset) {
    return or_query(vertex_mask(n_, subset));
}

bool OracleHandle::parity_query(const BitVector &subset) {
    bool r = graph().induced_parity(subset);
    ledger_.parity_query++;
    return r;
}

BellSample OracleHandle::bell_sample(BellCharge charge) {
    const Graph &g = graph();
    BellSample out{BitVector::random(n_, rng_), BitVector()};
    out.y = matvec(g.adjacency(), out.s);
    if (charge == BellCharge::graph_state_copies) {
        ledger_.graph_state_copy += 2;
    } else {
        ledger_.parity_query += 2;
    }
    return out;
}

BitVector OracleHandle::parity_vector_query(const BitVector &v) {
    BitVector r = matvec(graph().adjacency(), v);
    ledger_.parity_query += 2;
    return r;
}

BitVector OracleHandle::sample_dense(const std::vector<double> &cumulative, const VertexSet &vars) {
    size_t index = sample_cumulative(cumulative, rng_);
    BitVector out(n_);
    for (size_t i = 0; i < vars.size(); i++) {
        if ((index >> i) & 1) {
            out.set(vars[i]);
        }
    }
    return out;
}

BitVector OracleHandle::graphstate_hadamard_sample() {
    const Graph &g = graph();
    ledger_.graph_state_copy++;
    VertexSet vars = g.non_isolated();
    BitVector all = BitVector::ones(n_);
    if (auto c = star_centre(g, vars, all)) {
        // Outcomes 0, e_c, L, L + e_c, each with probability 1/4.
        BitVector out(n_);
        if (coin(rng_)) {
            out = g.neighbors(*c);
        }
        if (coin(rng_)) {
            out.flip(*c);
        }
        return out;
    }
    if (vars.size() > kMaxEnumeratedVertices) {
        throw UnsupportedOracleError(
            "graphstate_hadamard_sample: hidden graph is neither a star nor small");
    }
    if (!hadamard_cumulative_) {
        auto masks = local_adjacency(g, vars);
        std::vector<int64_t> signs(size_t{1} << vars.size());
        for (uint64_t x = 0; x < signs.size(); x++) {
            int twice = 0;
            for (size_t i = 0; i < vars.size(); i++) {
                if ((x >> i) & 1) {
                    twice += std::popcount(masks[i] & static_cast<uint32_t>(x));
                }
            }
            signs[x] = ((twice / 2) & 1) ? -1 : 1;
        }
        walsh_hadamard(signs);
        hadamard_cumulative_ = squared_spectrum_cumulative(signs);
        hadamard_vars_ = vars;
    }
    return sample_dense(*hadamard_cumulative_, hadamard_vars_);
}

std::optional<BitVector> OracleHandle::fourier_sample_or(const BitVector &domain) {
    const Graph &g = graph();
    if (domain.size() != n_) {
        throw std::invalid_argument("fourier_sample_or: domain length differs from n");
    }
    ledger_.or_query++;
    VertexSet vars;
    for (uint32_t v : domain.indices()) {
        if (g.neighbors(v).intersects(domain)) {
            vars.push_back(v);
        }
    }
    if (vars.size() <= kMaxEnumeratedVertices) {
        auto masks = local_adjacency(g, vars);
        std::vector<int64_t> signs(size_t{1} << vars.size());
        for (uint64_t x = 0; x < signs.size(); x++) {
            bool edge = false;
            for (size_t i = 0; i < vars.size() && !edge; i++) {
                edge = ((x >> i) & 1) && (masks[i] & static_cast<uint32_t>(x));
            }
            signs[x] = edge ? -1 : 1;
        }
        walsh_hadamard(signs);
        return sample_dense(squared_spectrum_cumulative(signs), vars);
    }
    auto c = star_centre(g, vars, domain);
    if (!c) {
        throw UnsupportedOracleError("fourier_sample_or: induced graph is neither a star nor small");
    }
    double leaves = static_cast<double>(vars.size() - 1);
    double amp = 1.0 - std::exp2(-leaves);
    if (bernoulli(rng_, amp * amp)) {
        return BitVector::unit(n_, *c);
    }
    return std::nullopt;
}

bool OracleHandle::junta_query(const BitVector &x) {
    bool r = junta().evaluate(x);
    ledger_.junta_query++;
    return r;
}

const std::vector<double> &OracleHandle::junta_cumulative(uint32_t level) {
    auto it = junta_cumulative_.find(level);
    if (it != junta_cumulative_.end()) {
        return it->second;
    }
    auto spectrum = signed_spectrum(junta().g);
    for (uint64_t t = 0; t < spectrum.size(); t++) {
        if (static_cast<uint32_t>(std::popcount(t)) < level) {
            spectrum[t] = 0;
        }
    }
    return junta_cumulative_.emplace(level, squared_spectrum_cumulative(spectrum)).first->second;
}

BitVector OracleHandle::junta_fourier_sample() {
    const Junta &j = junta();
    ledger_.junta_query++;
    return sample_dense(junta_cumulative(0), j.vars);
}

std::optional<BitVector> OracleHandle::junta_amplified_sample(uint32_t level) {
    const Junta &j = junta();
    const auto &cumulative = junta_cumulative(level);
    double total = static_cast<double>(j.g.size()) * static_cast<double>(j.g.size());
    double w = cumulative.back() / total;
    if (w <= 0) {
        throw std::invalid_argument("junta_amplified_sample: no Fourier weight at or above level");
    }
    ledger_.junta_query += static_cast<uint64_t>(std::ceil(1.0 / std::sqrt(w) - 1e-9));
    if (!bernoulli(rng_, std::max(w, 1.0 - w))) {
        return std::nullopt;
    }
    return sample_dense(cumulative, j.vars);
}

const Graph &OracleHandle::reveal_graph() {
    ledger_.reveal_used++;
    return graph();
}

const Junta &OracleHandle::reveal_junta() {
    ledger_.reveal_used++;
    return junta();
}

double upper_fourier_weight(const TruthTable &g, uint32_t level) {
    auto spectrum = signed_spectrum(g);
    double total = 0;
    for (uint64_t t = 0; t < spectrum.size(); t++) {
        if (static_cast<uint32_t>(std::popcount(t)) >= level) {
            total += static_cast<double>(spectrum[t]) * static_cast<double>(spectrum[t]);
        }
    }
    return total / (static_cast<double>(g.size()) * static_cast<double>(g.size()));
}

}  // namespace gql
