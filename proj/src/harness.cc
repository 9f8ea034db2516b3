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

#include "gql/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "gql/boolean_function.h"
#include "gql/fourier_learners.h"
#include "gql/or_learners.h"
#include "gql/parity_learners.h"

namespace gql {

namespace {

using json = nlohmann::ordered_json;

constexpr std::pair<LearnerId, std::string_view> kLearnerNames[] = {
    {LearnerId::family, "family"},
    {LearnerId::bounded_degree, "bounded_degree"},
    {LearnerId::bounded_edges_parity, "bounded_edges_parity"},
    {LearnerId::arbitrary_parity, "arbitrary_parity"},
    {LearnerId::subgraph_of, "subgraph_of"},
    {LearnerId::graph_or, "graph_or"},
    {LearnerId::star_or, "star_or"},
    {LearnerId::clique_or, "clique_or"},
    {LearnerId::star_graphstate, "star_graphstate"},
    {LearnerId::clique_graphstate, "clique_graphstate"},
    {LearnerId::symmetric_junta, "symmetric_junta"},
    {LearnerId::high_influence_junta, "high_influence_junta"},
};

constexpr std::pair<Metric, std::string_view> kMetricNames[] = {
    {Metric::or_queries, "or_queries"},
    {Metric::parity_queries, "parity_queries"},
    {Metric::copies, "copies"},
    {Metric::charged_quantum, "charged_quantum"},
    {Metric::or_plus_charged, "or_plus_charged"},
};

const std::set<std::string> kConfigKeys = {
    "name",    "learner", "family",  "function",     "k",        "grid",   "backend",
    "trials",  "seed",    "output",  "slack",        "phase2_slack", "design_c", "m_known",
    "delta",   "epsilon", "level",   "metric",       "driver",   "min_success", "slope",
};

const std::set<std::string> kFunctions = {"majority", "exact_half", "parity", "and",
                                          "random_min_influence"};

const std::set<std::string> kDrivers = {"n", "m", "d", "support", "k"};

std::vector<Edge> edges_from_json(const json &j) {
    std::vector<Edge> edges;
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2) {
            throw ConfigError("config: edges must be [u, v] pairs");
        }
        edges.push_back(make_edge(e[0].get<uint32_t>(), e[1].get<uint32_t>()));
    }
    return edges;
}

json edges_to_json(const std::vector<Edge> &edges) {
    json out = json::array();
    for (const auto &[u, v] : edges) {
        out.push_back({u, v});
    }
    return out;
}

size_t point_count(const ExperimentConfig &config) {
    return std::max<size_t>(1, config.grid.size());
}

TruthTable junta_function(const ExperimentConfig &config, uint32_t k, Rng &rng) {
    const std::string &f = config.function;
    if (f == "majority") return majority_function(k);
    if (f == "exact_half") return exact_half_function(k);
    if (f == "parity") return parity_function(k);
    if (f == "and") return and_function(k);
    constexpr int kMaxDraws = 100000;
    for (int i = 0; i < kMaxDraws; i++) {
        TruthTable g = TruthTable::random(k, rng);
        if (influence_profile(g).min() >= config.epsilon) {
            return g;
        }
    }
    throw ConfigError("config: no random function reaches the influence floor");
}

uint32_t default_level(const std::string &function, uint32_t k) {
    if (function == "majority") return (k + 1) / 2;
    if (function == "exact_half") return k / 2;
    return k;
}

bool run_graph_learner(const ExperimentConfig &config, const FamilySpec &spec, const Graph &g,
                       OracleHandle &h, Rng &rng) {
    switch (config.learner) {
        case LearnerId::family: {
            FamilyOptions options;
            options.slack = config.slack.value_or(options.slack);
            return learn_from_family(h, all_subgraphs(*spec.base), options) == g;
        }
        case LearnerId::bounded_degree: {
            BoundedDegreeOptions options;
            if (spec.m > 0) {
                options.m_hint = spec.m;
            }
            options.slack = config.slack.value_or(options.slack);
            options.phase2_slack = config.phase2_slack.value_or(options.phase2_slack);
            BoundedDegreeResult r = learn_bounded_degree(h, spec.d, options);
            return !r.ambiguous() && r.over_degree().empty() && r.graph() == g;
        }
        case LearnerId::bounded_edges_parity: {
            BoundedEdgesOptions options;
            options.slack = config.slack.value_or(options.slack);
            options.phase2_slack = config.phase2_slack.value_or(options.phase2_slack);
            return learn_bounded_edges_parity(h, spec.m, options) == g;
        }
        case LearnerId::arbitrary_parity:
            return learn_arbitrary_parity(h) == g;
        case LearnerId::subgraph_of: {
            SubgraphOptions options;
            options.slack = config.slack.value_or(options.slack);
            return learn_subgraph_of(h, *spec.base, spec.base->max_degree(), options) == g;
        }
        case LearnerId::graph_or: {
            GraphOrOptions options;
            if (config.m_known) {
                options.m_hint = g.m();
            }
            return learn_graph_or(h, config.backend, rng, options) == g;
        }
        case LearnerId::star_or:
            return learn_star_or(h, config.backend).graph(g.n()) == g;
        case LearnerId::clique_or:
            return learn_clique_or(h, spec.support, config.backend, rng) == g.non_isolated();
        case LearnerId::star_graphstate:
            return learn_star_graphstate(h).graph(g.n()) == g;
        case LearnerId::clique_graphstate:
            return learn_clique_graphstate(h) == g.non_isolated();
        default:
            throw ConfigError("config: learner does not take a graph");
    }
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

double median(std::vector<double> v) {
    if (v.empty()) {
        return 0;
    }
    std::sort(v.begin(), v.end());
    size_t mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

std::string_view learner_name(LearnerId id) {
    for (const auto &[k, name] : kLearnerNames) {
        if (k == id) return name;
    }
    throw std::invalid_argument("learner_name: unknown learner");
}

LearnerId parse_learner(std::string_view name) {
    for (const auto &[k, kname] : kLearnerNames) {
        if (kname == name) return k;
    }
    throw ConfigError("unknown learner: " + std::string(name));
}

bool is_junta_learner(LearnerId id) {
    return id == LearnerId::symmetric_junta || id == LearnerId::high_influence_junta;
}

std::string_view metric_name(Metric metric) {
    for (const auto &[k, name] : kMetricNames) {
        if (k == metric) return name;
    }
    throw std::invalid_argument("metric_name: unknown metric");
}

Metric parse_metric(std::string_view name) {
    for (const auto &[k, kname] : kMetricNames) {
        if (kname == name) return k;
    }
    throw ConfigError("unknown metric: " + std::string(name));
}

FamilySpec point_spec(const ExperimentConfig &config, size_t index) {
    FamilySpec spec = config.family;
    if (config.grid.empty()) {
        return spec;
    }
    const GridPoint &p = config.grid.at(index);
    if (p.n) spec.n = *p.n;
    if (p.m) spec.m = *p.m;
    if (p.d) spec.d = *p.d;
    if (p.support) spec.support = *p.support;
    return spec;
}

uint32_t point_arity(const ExperimentConfig &config, size_t index) {
    if (!config.grid.empty() && config.grid.at(index).k) {
        return *config.grid[index].k;
    }
    return config.k;
}

double driver_value(const ExperimentConfig &config, size_t index) {
    FamilySpec spec = point_spec(config, index);
    const std::string &d = config.driver;
    if (d == "n") return spec.n;
    if (d == "m") return static_cast<double>(spec.m);
    if (d == "d") return spec.d;
    if (d == "support") return spec.support;
    return point_arity(config, index);
}

void ExperimentConfig::validate() const {
    if (!kDrivers.count(driver)) {
        throw ConfigError("config: unknown driver " + driver);
    }
    if (backend.c <= 0) {
        throw ConfigError("config: cost constant must be positive");
    }
    if (slope_range && slope_range->first > slope_range->second) {
        throw ConfigError("config: empty slope interval");
    }
    for (size_t i = 0; i < point_count(*this); i++) {
        if (is_junta_learner(learner)) {
            uint32_t k = point_arity(*this, i);
            FamilySpec spec = point_spec(*this, i);
            if (!kFunctions.count(function)) {
                throw ConfigError("config: unknown junta function " + function);
            }
            if (k == 0 || k > spec.n || k > kMaxFourierArity) {
                throw ConfigError("config: junta arity must lie in 1..min(n, 20)");
            }
            if (function == "majority" && k % 2 == 0) {
                throw ConfigError("config: majority needs odd k");
            }
            if (function == "exact_half" && k % 2 != 0) {
                throw ConfigError("config: exact_half needs even k");
            }
            if (learner == LearnerId::symmetric_junta && function == "random_min_influence") {
                throw ConfigError("config: symmetric_junta needs a symmetric function");
            }
            continue;
        }
        FamilySpec spec = point_spec(*this, i);
        try {
            spec.validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
        auto need = [&](FamilyKind kind) {
            if (spec.kind != kind) {
                throw ConfigError(std::string("config: learner ") +
                                  std::string(learner_name(learner)) + " needs family " +
                                  std::string(family_kind_name(kind)));
            }
        };
        switch (learner) {
            case LearnerId::star_or:
            case LearnerId::star_graphstate:
                need(FamilyKind::star);
                break;
            case LearnerId::clique_or:
            case LearnerId::clique_graphstate:
                need(FamilyKind::clique);
                break;
            case LearnerId::family:
                need(FamilyKind::subgraph_of);
                if (spec.base->m() > 20) {
                    throw ConfigError("config: family learner enumerates at most 20 base edges");
                }
                break;
            case LearnerId::subgraph_of:
                need(FamilyKind::subgraph_of);
                break;
            case LearnerId::bounded_degree:
                need(FamilyKind::bounded_degree);
                break;
            case LearnerId::bounded_edges_parity:
                need(FamilyKind::fixed_edge_count);
                break;
            default:
                break;
        }
    }
}

ExperimentConfig config_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config: top level must be an object");
    }
    for (const auto &item : j.items()) {
        if (!kConfigKeys.count(item.key())) {
            throw ConfigError("config: unknown key " + item.key());
        }
    }
    ExperimentConfig c;
    try {
        c.name = j.value("name", "");
        c.learner = parse_learner(j.at("learner").get<std::string>());
        if (j.contains("family")) {
            const json &f = j["family"];
            c.family.kind = parse_family_kind(f.value("kind", "fixed_edge_count"));
            c.family.n = f.value("n", 0u);
            c.family.support = f.value("support", 0u);
            c.family.d = f.value("d", 0u);
            c.family.m = f.value("m", size_t{0});
            if (f.contains("base")) {
                c.family.base = Graph(c.family.n, edges_from_json(f["base"]));
            }
        }
        c.function = j.value("function", c.function);
        c.k = j.value("k", 0u);
        if (j.contains("grid")) {
            for (const auto &p : j["grid"]) {
                GridPoint g;
                if (p.contains("n")) g.n = p["n"].get<uint32_t>();
                if (p.contains("m")) g.m = p["m"].get<uint64_t>();
                if (p.contains("d")) g.d = p["d"].get<uint32_t>();
                if (p.contains("support")) g.support = p["support"].get<uint32_t>();
                if (p.contains("k")) g.k = p["k"].get<uint32_t>();
                c.grid.push_back(g);
            }
        }
        if (j.contains("backend")) {
            c.backend.kind = parse_cgt_kind(j["backend"].value("kind", "classical_adaptive"));
            c.backend.c = j["backend"].value("c", 1.0);
        }
        c.trials = j.value("trials", uint64_t{0});
        c.seed = j.value("seed", uint64_t{0});
        c.output = j.value("output", "");
        if (j.contains("slack")) {
            c.slack = j.at("slack").get<uint32_t>();
        }
        if (j.contains("phase2_slack")) {
            c.phase2_slack = j.at("phase2_slack").get<uint32_t>();
        }
        c.design_c = j.value("design_c", 8.0);
        c.m_known = j.value("m_known", true);
        c.delta = j.value("delta", 0.01);
        c.epsilon = j.value("epsilon", 0.3);
        if (j.contains("level")) c.level = j["level"].get<uint32_t>();
        c.metric = parse_metric(j.value("metric", "or_queries"));
        c.driver = j.value("driver", "m");
        if (j.contains("min_success")) c.min_success = j["min_success"].get<double>();
        if (j.contains("slope")) {
            c.slope_range = std::make_pair(j["slope"].at(0).get<double>(),
                                           j["slope"].at(1).get<double>());
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

std::string config_to_json(const ExperimentConfig &c) {
    json j;
    j["name"] = c.name;
    j["learner"] = learner_name(c.learner);
    json f;
    f["kind"] = family_kind_name(c.family.kind);
    f["n"] = c.family.n;
    f["support"] = c.family.support;
    f["d"] = c.family.d;
    f["m"] = c.family.m;
    if (c.family.base) {
        f["base"] = edges_to_json(c.family.base->edges());
    }
    j["family"] = f;
    j["function"] = c.function;
    j["k"] = c.k;
    json grid = json::array();
    for (const auto &p : c.grid) {
        json g = json::object();
        if (p.n) g["n"] = *p.n;
        if (p.m) g["m"] = *p.m;
        if (p.d) g["d"] = *p.d;
        if (p.support) g["support"] = *p.support;
        if (p.k) g["k"] = *p.k;
        grid.push_back(g);
    }
    j["grid"] = grid;
    j["backend"] = {{"kind", cgt_kind_name(c.backend.kind)}, {"c", c.backend.c}};
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["output"] = c.output;
    if (c.slack) {
        j["slack"] = *c.slack;
    }
    if (c.phase2_slack) {
        j["phase2_slack"] = *c.phase2_slack;
    }
    j["design_c"] = c.design_c;
    j["m_known"] = c.m_known;
    j["delta"] = c.delta;
    j["epsilon"] = c.epsilon;
    if (c.level) j["level"] = *c.level;
    j["metric"] = metric_name(c.metric);
    j["driver"] = c.driver;
    if (c.min_success) j["min_success"] = *c.min_success;
    if (c.slope_range) j["slope"] = {c.slope_range->first, c.slope_range->second};
    return j.dump(2);
}

uint64_t metric_value(const TrialRecord &r, Metric metric) {
    switch (metric) {
        case Metric::or_queries:
            return r.ledger.or_query;
        case Metric::parity_queries:
            return r.ledger.parity_query;
        case Metric::copies:
            return r.ledger.graph_state_copy;
        case Metric::charged_quantum:
            return r.ledger.charged_quantum + r.ledger.junta_query;
        case Metric::or_plus_charged:
            return r.ledger.or_query + r.ledger.charged_quantum;
    }
    return 0;
}

TrialRecord run_trial(const ExperimentConfig &config, size_t point, uint64_t seed,
                      bool record_time) {
    auto start = std::chrono::steady_clock::now();
    Rng instance_rng = make_rng(derive_seed(seed, 1));
    const uint64_t oracle_seed = derive_seed(seed, 2);
    Rng learner_rng = make_rng(derive_seed(seed, 3));
    FamilySpec spec = point_spec(config, point);
    TrialRecord record;
    record.seed = seed;
    record.n = spec.n;
    if (is_junta_learner(config.learner)) {
        uint32_t k = point_arity(config, point);
        record.k = k;
        TruthTable g = junta_function(config, k, instance_rng);
        std::vector<uint32_t> vars = random_subset(spec.n, k, instance_rng);
        shuffle(vars, instance_rng);
        Junta hidden{spec.n, g, vars};
        VertexSet truth = hidden.support();
        OracleHandle h(std::move(hidden), oracle_seed);
        try {
            VertexSet found;
            if (config.learner == LearnerId::symmetric_junta) {
                found = learn_symmetric_junta(h, g, config.level.value_or(default_level(config.function, k)),
                                              config.delta);
            } else {
                double eps = config.function == "random_min_influence" ? config.epsilon
                                                                       : influence_profile(g).min();
                found = learn_high_influence_junta(h, g, eps, config.delta);
            }
            record.success = found == truth;
        } catch (const LearningFailure &) {
            record.success = false;
        }
        record.ledger = h.ledger();
    } else {
        Graph g = generate(spec, instance_rng);
        record.m = g.m();
        record.d = spec.d != 0 ? spec.d : g.max_degree();
        record.k = spec.support;
        OracleHandle h(g, oracle_seed);
        try {
            record.success = run_graph_learner(config, spec, g, h, learner_rng);
        } catch (const LearningFailure &) {
            record.success = false;
        }
        record.ledger = h.ledger();
    }
    if (record_time) {
        std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        record.ms = elapsed.count();
    }
    return record;
}

double fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_loglog_slope: need at least two paired points");
    }
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        if (x[i] <= 0 || y[i] <= 0) {
            throw std::invalid_argument("fit_loglog_slope: values must be positive");
        }
        double lx = std::log(x[i]);
        double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) {
        throw std::invalid_argument("fit_loglog_slope: abscissae are all equal");
    }
    return (n * sxy - sx * sy) / denom;
}

unsigned resolve_threads(unsigned requested) {
    if (const char *env = std::getenv("GQL_THREADS")) {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, requested);
}

RunResult run(const ExperimentConfig &config, const RunOptions &options) {
    config.validate();
    RunResult result;
    if (config.trials == 0) {
        return result;
    }
    const size_t points = point_count(config);
    const size_t total = points * config.trials;
    result.records.resize(total);
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (size_t i = next++; i < total; i = next++) {
            try {
                size_t point = i / config.trials;
                uint64_t seed = derive_seed(config.seed, point, i % config.trials);
                result.records[i] = run_trial(config, point, seed, options.record_time);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };
    unsigned threads = std::min<size_t>(std::max(1u, options.threads), total);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Summary &s = result.summary;
    std::vector<double> xs, ys;
    for (size_t p = 0; p < points; p++) {
        PointSummary ps;
        ps.driver = driver_value(config, p);
        ps.trials = config.trials;
        std::vector<double> costs;
        uint64_t ok = 0;
        for (size_t t = 0; t < config.trials; t++) {
            const TrialRecord &r = result.records[p * config.trials + t];
            ok += r.success;
            costs.push_back(static_cast<double>(metric_value(r, config.metric)));
        }
        ps.success_rate = static_cast<double>(ok) / static_cast<double>(config.trials);
        ps.median = median(costs);
        double sum = 0;
        for (double c : costs) sum += c;
        ps.mean = sum / static_cast<double>(costs.size());
        if (config.min_success && ps.success_rate < *config.min_success) {
            s.thresholds_met = false;
            s.violations.push_back("success rate " + std::to_string(ps.success_rate) +
                                   " below " + std::to_string(*config.min_success) +
                                   " at driver " + std::to_string(ps.driver));
        }
        xs.push_back(ps.driver);
        ys.push_back(ps.mean);
        s.points.push_back(ps);
    }
    bool fit_ok = points >= 2 &&
                  std::all_of(xs.begin(), xs.end(), [](double v) { return v > 0; }) &&
                  std::all_of(ys.begin(), ys.end(), [](double v) { return v > 0; }) &&
                  std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) != xs.end();
    if (fit_ok) {
        s.slope = fit_loglog_slope(xs, ys);
    }
    if (config.slope_range) {
        if (!s.slope) {
            s.thresholds_met = false;
            s.violations.push_back("slope requested but the grid cannot be fitted");
        } else if (*s.slope < config.slope_range->first || *s.slope > config.slope_range->second) {
            s.thresholds_met = false;
            s.violations.push_back("slope " + std::to_string(*s.slope) + " outside [" +
                                   std::to_string(config.slope_range->first) + ", " +
                                   std::to_string(config.slope_range->second) + "]");
        }
    }
    return result;
}

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw ConfigError("unknown output format: " + std::string(name));
}

std::string records_to_csv(const std::vector<TrialRecord> &records) {
    std::ostringstream out;
    out << "seed,n,m,d,k,or_queries,parity_queries,copies,charged_quantum,success,ms\n";
    for (const auto &r : records) {
        out << r.seed << ',' << r.n << ',' << r.m << ',' << r.d << ',' << r.k << ','
            << r.ledger.or_query << ',' << r.ledger.parity_query << ','
            << r.ledger.graph_state_copy << ',' << metric_value(r, Metric::charged_quantum) << ','
            << (r.success ? 1 : 0) << ',' << format_ms(r.ms) << '\n';
    }
    return out.str();
}

std::string records_to_json(const std::vector<TrialRecord> &records) {
    json arr = json::array();
    for (const auto &r : records) {
        json j;
        j["seed"] = r.seed;
        j["n"] = r.n;
        j["m"] = r.m;
        j["d"] = r.d;
        j["k"] = r.k;
        j["ledger"] = json::parse(ledger_to_json(r.ledger));
        j["success"] = r.success;
        j["ms"] = r.ms;
        arr.push_back(std::move(j));
    }
    return arr.dump(1) + "\n";
}

std::vector<TrialRecord> records_from_json(std::string_view text) {
    std::vector<TrialRecord> out;
    json arr = json::parse(text);
    for (const auto &j : arr) {
        TrialRecord r;
        r.seed = j.at("seed").get<uint64_t>();
        r.n = j.at("n").get<uint32_t>();
        r.m = j.at("m").get<uint64_t>();
        r.d = j.at("d").get<uint32_t>();
        r.k = j.at("k").get<uint32_t>();
        r.ledger = ledger_from_json(j.at("ledger").dump());
        r.success = j.at("success").get<bool>();
        r.ms = j.at("ms").get<double>();
        out.push_back(r);
    }
    return out;
}

std::string summary_to_json(const Summary &s) {
    json j;
    json points = json::array();
    for (const auto &p : s.points) {
        points.push_back({{"driver", p.driver},
                          {"trials", p.trials},
                          {"success_rate", p.success_rate},
                          {"median", p.median},
                          {"mean", p.mean}});
    }
    j["points"] = points;
    j["slope"] = s.slope ? json(*s.slope) : json(nullptr);
    j["thresholds_met"] = s.thresholds_met;
    j["violations"] = s.violations;
    return j.dump(2);
}

void emit(const std::vector<TrialRecord> &records, OutputFormat format, const std::string &path,
          bool allow_empty) {
    if (records.empty() && !allow_empty) {
        throw std::invalid_argument("emit: no records");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("emit: cannot open " + path);
    }
    out << (format == OutputFormat::csv ? records_to_csv(records) : records_to_json(records));
    if (!out) {
        throw std::runtime_error("emit: write failed for " + path);
    }
}

}  // namespace gql
