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

#include "gql/cgt.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "json.hpp"

namespace gql {

GraphGroupTest::GraphGroupTest(OracleHandle &oracle, VertexSet candidates, BitVector base)
    : oracle_(oracle), candidates_(std::move(candidates)), base_(std::move(base)) {
    if (base_.size() != oracle_.n()) {
        throw std::invalid_argument("GraphGroupTest: base length differs from n");
    }
}

bool GraphGroupTest::query(const std::vector<uint32_t> &items) {
    BitVector s = base_;
    for (uint32_t i : items) {
        s.set(candidates_.at(i));
    }
    return oracle_.or_query(s);
}

std::vector<uint32_t> GraphGroupTest::peek_positives() {
    const Graph &g = oracle_.reveal_graph();
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < candidates_.size(); i++) {
        if (g.neighbors(candidates_[i]).intersects(base_)) {
            out.push_back(i);
        }
    }
    return out;
}

bool JuntaGroupTest::query(const std::vector<uint32_t> &items) {
    return oracle_.junta_query(BitVector::from_indices(oracle_.n(), items));
}

std::vector<uint32_t> JuntaGroupTest::peek_positives() {
    const Junta &j = oracle_.reveal_junta();
    std::vector<uint32_t> out;
    for (uint32_t local : relevant_variables(j.g)) {
        out.push_back(j.vars[local]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SetGroupTest::SetGroupTest(size_t size, std::vector<uint32_t> positives)
    : size_(size), positives_(std::move(positives)), is_positive_(size, false) {
    for (uint32_t p : positives_) {
        is_positive_.at(p) = true;
    }
    std::sort(positives_.begin(), positives_.end());
}

bool SetGroupTest::query(const std::vector<uint32_t> &items) {
    queries_++;
    return std::any_of(items.begin(), items.end(), [&](uint32_t i) { return is_positive_.at(i); });
}

std::vector<uint32_t> SetGroupTest::peek_positives() {
    peeks_++;
    return positives_;
}

namespace {

constexpr std::pair<CgtKind, std::string_view> kCgtNames[] = {
    {CgtKind::classical_adaptive, "classical_adaptive"},
    {CgtKind::quantum_ideal, "quantum_ideal"},
    {CgtKind::quantum_time_efficient, "quantum_time_efficient"},
};

std::vector<uint32_t> slice(const std::vector<uint32_t> &v, size_t begin, size_t end) {
    return std::vector<uint32_t>(v.begin() + begin, v.begin() + end);
}

// Recursive halving for an unknown number of positives.
void halving(GroupTestOracle &oracle, const std::vector<uint32_t> &items, bool known_positive,
             std::vector<uint32_t> &found) {
    if (items.empty()) {
        return;
    }
    if (!known_positive && !oracle.query(items)) {
        return;
    }
    if (items.size() == 1) {
        found.push_back(items[0]);
        return;
    }
    size_t mid = items.size() / 2;
    auto left = slice(items, 0, mid);
    auto right = slice(items, mid, items.size());
    if (oracle.query(left)) {
        halving(oracle, left, true, found);
        halving(oracle, right, false, found);
    } else {
        halving(oracle, right, true, found);
    }
}

// Generalized binary splitting with at most k positives.
std::vector<uint32_t> splitting(GroupTestOracle &oracle, uint32_t k, bool verify) {
    std::vector<uint32_t> rest(oracle.size());
    for (uint32_t i = 0; i < rest.size(); i++) {
        rest[i] = i;
    }
    std::vector<uint32_t> found;
    if (k == 0) {
        if (!rest.empty() && oracle.query(rest)) {
            throw CgtViolation("cgt_solve: positives found with bound k = 0");
        }
        return found;
    }
    while (!rest.empty() && found.size() < k) {
        size_t left = k - found.size();
        if (rest.size() <= 2 * left - 2) {
            for (uint32_t item : rest) {
                if (oracle.query({item})) {
                    found.push_back(item);
                }
            }
            rest.clear();
            break;
        }
        size_t l = rest.size() - left + 1;
        size_t group = 1;
        while (2 * group * left <= l) {
            group *= 2;
        }
        if (!oracle.query(slice(rest, 0, group))) {
            rest.erase(rest.begin(), rest.begin() + group);
            continue;
        }
        size_t lo = 0, hi = group;
        while (hi - lo > 1) {
            size_t mid = (lo + hi) / 2;
            if (oracle.query(slice(rest, lo, mid))) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        found.push_back(rest[lo]);
        rest.erase(rest.begin(), rest.begin() + lo + 1);
    }
    if (found.size() > k) {
        throw CgtViolation("cgt_solve: more than k positives");
    }
    if (verify && !rest.empty() && oracle.query(rest)) {
        throw CgtViolation("cgt_solve: positives remain after k were found");
    }
    return found;
}

}  // namespace

std::string_view cgt_kind_name(CgtKind kind) {
    for (const auto &[k, name] : kCgtNames) {
        if (k == kind) {
            return name;
        }
    }
    throw std::invalid_argument("cgt_kind_name: unknown kind");
}

CgtKind parse_cgt_kind(std::string_view name) {
    for (const auto &[k, kname] : kCgtNames) {
        if (kname == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown CGT backend: " + std::string(name));
}

uint64_t quantum_cgt_charge(const CgtBackend &backend, uint64_t k) {
    if (!(backend.c > 0)) {
        throw std::invalid_argument("CgtBackend: cost constant must be positive");
    }
    double kd = static_cast<double>(k);
    double cost = backend.c * std::sqrt(kd);
    if (backend.kind == CgtKind::quantum_time_efficient) {
        cost *= std::log2(kd + 1) * std::log2(std::log2(kd + 3));
    }
    return std::max<uint64_t>(1, static_cast<uint64_t>(std::ceil(cost - 1e-9)));
}

std::vector<uint32_t> cgt_solve(const CgtBackend &backend, GroupTestOracle &oracle,
                                const CgtOptions &options) {
    const auto &k = options.k;
    std::vector<uint32_t> found;
    if (backend.kind == CgtKind::classical_adaptive) {
        if (k) {
            found = splitting(oracle, *k, options.verify);
        } else {
            std::vector<uint32_t> all(oracle.size());
            for (uint32_t i = 0; i < all.size(); i++) {
                all[i] = i;
            }
            halving(oracle, all, options.known_nonempty, found);
        }
    } else {
        found = oracle.peek_positives();
        if (k && found.size() > *k) {
            throw CgtViolation("cgt_solve: more than k positives");
        }
        oracle.charge_quantum(quantum_cgt_charge(backend, k ? *k : found.size()));
    }
    std::sort(found.begin(), found.end());
    return found;
}

BitVector NonadaptiveDesign::outcomes(const std::vector<uint32_t> &positives) const {
    std::vector<bool> hit(n, false);
    for (uint32_t p : positives) {
        hit.at(p) = true;
    }
    BitVector out(tests.size());
    for (size_t j = 0; j < tests.size(); j++) {
        for (uint32_t i : tests[j]) {
            if (hit[i]) {
                out.set(j);
                break;
            }
        }
    }
    return out;
}

size_t random_design_test_count(uint32_t n, uint32_t d, double c) {
    return static_cast<size_t>(std::ceil(c * d * d * std::log(static_cast<double>(n) + 1) - 1e-9));
}

namespace {

constexpr size_t kMaxDecodeCombinations = 200000;

std::vector<BitVector> membership(const NonadaptiveDesign &design) {
    std::vector<BitVector> rows(design.n, BitVector(design.tests.size()));
    for (size_t j = 0; j < design.tests.size(); j++) {
        for (uint32_t i : design.tests[j]) {
            rows.at(i).set(j);
        }
    }
    return rows;
}

double binomial(size_t n, size_t r) {
    double out = 1;
    for (size_t i = 0; i < r; i++) {
        out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return out;
}

std::optional<std::vector<uint32_t>> decode_with(const NonadaptiveDesign &design,
                                                 const std::vector<BitVector> &rows,
                                                 const BitVector &outcomes) {
    if (outcomes.size() != design.tests.size()) {
        throw std::invalid_argument("decode_nonadaptive: one outcome bit per test expected");
    }
    std::vector<uint32_t> cover;
    BitVector explained(outcomes.size());
    for (uint32_t i = 0; i < design.n; i++) {
        if ((rows[i] & outcomes) == rows[i]) {
            cover.push_back(i);
            explained |= rows[i];
        }
    }
    if (explained != outcomes) {
        return std::nullopt;
    }
    if (cover.size() <= design.d) {
        return cover;
    }
    // Search subsets of the cover of size <= d for a unique explanation.
    double combos = 0;
    for (size_t r = 0; r <= design.d; r++) {
        combos += binomial(cover.size(), r);
    }
    if (combos > kMaxDecodeCombinations) {
        return std::nullopt;
    }
    std::optional<std::vector<uint32_t>> answer;
    int solutions = 0;
    std::vector<uint32_t> chosen;
    std::function<void(size_t, const BitVector &)> search = [&](size_t start, const BitVector &acc) {
        if (solutions > 1) {
            return;
        }
        if (acc == outcomes) {
            solutions++;
            answer = chosen;
            return;
        }
        if (chosen.size() == design.d) {
            return;
        }
        for (size_t i = start; i < cover.size(); i++) {
            chosen.push_back(cover[i]);
            search(i + 1, acc | rows[cover[i]]);
            chosen.pop_back();
        }
    };
    search(0, BitVector(outcomes.size()));
    if (solutions != 1) {
        return std::nullopt;
    }
    return answer;
}

bool decodes(const NonadaptiveDesign &design, const std::vector<BitVector> &rows,
             const std::vector<uint32_t> &support) {
    auto got = decode_with(design, rows, design.outcomes(support));
    return got && *got == support;
}

bool verify_design(const NonadaptiveDesign &design, Rng &rng) {
    auto rows = membership(design);
    constexpr uint32_t kExhaustiveLimit = 20;
    constexpr int kSpotChecks = 10000;
    if (design.n <= kExhaustiveLimit) {
        std::vector<uint32_t> support;
        std::function<bool(uint32_t)> walk = [&](uint32_t start) {
            if (!decodes(design, rows, support)) {
                return false;
            }
            if (support.size() == design.d) {
                return true;
            }
            for (uint32_t i = start; i < design.n; i++) {
                support.push_back(i);
                bool ok = walk(i + 1);
                support.pop_back();
                if (!ok) {
                    return false;
                }
            }
            return true;
        };
        return walk(0);
    }
    for (int t = 0; t < kSpotChecks; t++) {
        uint32_t size = static_cast<uint32_t>(uniform_below(rng, std::min(design.d, design.n) + 1));
        if (!decodes(design, rows, random_subset(design.n, size, rng))) {
            return false;
        }
    }
    return true;
}

}  // namespace

NonadaptiveDesign build_nonadaptive_design(uint32_t n, uint32_t d, Rng &rng, double c) {
    if (n < 1 || d < 1) {
        throw std::invalid_argument("build_nonadaptive_design: need n >= 1 and d >= 1");
    }
    if (!(c > 0)) {
        throw std::invalid_argument("build_nonadaptive_design: c must be positive");
    }
    NonadaptiveDesign design;
    design.n = n;
    design.d = d;
    if (d == 1) {
        design.kind = "binary_index";
        uint32_t bits = 0;
        while ((uint64_t{1} << bits) <= n) {
            bits++;
        }
        design.tests.assign(bits, {});
        for (uint32_t i = 0; i < n; i++) {
            for (uint32_t j = 0; j < bits; j++) {
                if (((i + 1) >> j) & 1) {
                    design.tests[j].push_back(i);
                }
            }
        }
        design.verified = verify_design(design, rng);
        if (!design.verified) {
            throw std::logic_error("build_nonadaptive_design: binary-index family failed to decode");
        }
        return design;
    }
    design.kind = "random";
    constexpr int kRetries = 50;
    size_t count = random_design_test_count(n, d, c);
    double p = 1.0 / (d + 1);
    for (int attempt = 0; attempt < kRetries; attempt++) {
        design.tests.assign(count, {});
        for (auto &test : design.tests) {
            for (uint32_t i = 0; i < n; i++) {
                if (bernoulli(rng, p)) {
                    test.push_back(i);
                }
            }
        }
        if (verify_design(design, rng)) {
            design.verified = true;
            return design;
        }
    }
    throw std::runtime_error("build_nonadaptive_design: no decodable design within the retry cap");
}

std::optional<std::vector<uint32_t>> decode_nonadaptive(const NonadaptiveDesign &design,
                                                        const BitVector &outcomes) {
    return decode_with(design, membership(design), outcomes);
}

std::string design_to_json(const NonadaptiveDesign &design) {
    nlohmann::ordered_json j;
    j["n"] = design.n;
    j["d"] = design.d;
    j["kind"] = design.kind;
    j["tests"] = design.tests;
    j["verified"] = design.verified;
    return j.dump();
}

NonadaptiveDesign design_from_json(std::string_view text) {
    auto j = nlohmann::json::parse(text);
    NonadaptiveDesign design;
    design.n = j.at("n").get<uint32_t>();
    design.d = j.at("d").get<uint32_t>();
    design.kind = j.value("kind", std::string("random"));
    design.tests = j.at("tests").get<std::vector<std::vector<uint32_t>>>();
    design.verified = j.value("verified", false);
    for (const auto &test : design.tests) {
        for (uint32_t i : test) {
            if (i >= design.n) {
                throw std::invalid_argument("design_from_json: item out of range");
            }
        }
    }
    return design;
}

}  // namespace gql
