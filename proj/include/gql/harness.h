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

#ifndef GQL_HARNESS_H
#define GQL_HARNESS_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gql/cgt.h"
#include "gql/graph.h"
#include "gql/oracle.h"

namespace gql {

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

enum class LearnerId {
    family,
    bounded_degree,
    bounded_edges_parity,
    arbitrary_parity,
    subgraph_of,
    graph_or,
    star_or,
    clique_or,
    star_graphstate,
    clique_graphstate,
    symmetric_junta,
    high_influence_junta,
};

std::string_view learner_name(LearnerId id);
LearnerId parse_learner(std::string_view name);
bool is_junta_learner(LearnerId id);

/// Overrides applied to the base family at one grid point.
struct GridPoint {
    std::optional<uint32_t> n;
    std::optional<uint64_t> m;
    std::optional<uint32_t> d;
    std::optional<uint32_t> support;
    std::optional<uint32_t> k;
};

/// Cost columns a summary or slope can be computed over.
enum class Metric { or_queries, parity_queries, copies, charged_quantum, or_plus_charged };

std::string_view metric_name(Metric metric);
Metric parse_metric(std::string_view name);

struct ExperimentConfig {
    std::string name;
    LearnerId learner = LearnerId::graph_or;
    FamilySpec family;
    /// Junta learners: majority | exact_half | parity | and | random_min_influence.
    std::string function = "majority";
    /// Junta arity when the grid does not set it.
    uint32_t k = 0;
    std::vector<GridPoint> grid;
    CgtBackend backend;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::string output;
    /// Absent values keep each learner's own default.
    std::optional<uint32_t> slack;
    std::optional<uint32_t> phase2_slack;
    double design_c = 8.0;
    bool m_known = true;
    double delta = 0.01;
    double epsilon = 0.3;
    std::optional<uint32_t> level;
    Metric metric = Metric::or_queries;
    /// Grid parameter used as the regression abscissa: n, m, d, support or k.
    std::string driver = "m";
    std::optional<double> min_success;
    std::optional<std::pair<double, double>> slope_range;

    void validate() const;
};

ExperimentConfig config_from_json(std::string_view text);
std::string config_to_json(const ExperimentConfig &config);

struct TrialRecord {
    uint64_t seed = 0;
    uint32_t n = 0;
    uint64_t m = 0;
    uint32_t d = 0;
    uint32_t k = 0;
    QueryLedger ledger;
    bool success = false;
    double ms = 0;

    bool operator==(const TrialRecord &) const = default;
};

uint64_t metric_value(const TrialRecord &record, Metric metric);

struct PointSummary {
    double driver = 0;
    uint64_t trials = 0;
    double success_rate = 0;
    double median = 0;
    double mean = 0;
};

struct Summary {
    std::vector<PointSummary> points;
    std::optional<double> slope;
    bool thresholds_met = true;
    std::vector<std::string> violations;
};

struct RunOptions {
    unsigned threads = 1;
    bool record_time = false;
};

struct RunResult {
    std::vector<TrialRecord> records;
    Summary summary;
};

/// The family spec of grid point `index` (base family with overrides).
FamilySpec point_spec(const ExperimentConfig &config, size_t index);
double driver_value(const ExperimentConfig &config, size_t index);
uint32_t point_arity(const ExperimentConfig &config, size_t index);

TrialRecord run_trial(const ExperimentConfig &config, size_t point, uint64_t seed,
                      bool record_time = false);
RunResult run(const ExperimentConfig &config, const RunOptions &options = {});

/// Least-squares slope of log y against log x.
double fit_loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

/// GQL_THREADS when set, otherwise `requested`; at least 1.
unsigned resolve_threads(unsigned requested);

enum class OutputFormat { csv, json };
OutputFormat parse_format(std::string_view name);

std::string records_to_csv(const std::vector<TrialRecord> &records);
std::string records_to_json(const std::vector<TrialRecord> &records);
std::vector<TrialRecord> records_from_json(std::string_view text);
std::string summary_to_json(const Summary &summary);

/// Writes the records to `path`. Throws std::runtime_error on I/O failure and
/// std::invalid_argument for an empty record list unless allowed.
void emit(const std::vector<TrialRecord> &records, OutputFormat format, const std::string &path,
          bool allow_empty = false);

}  // namespace gql

#endif  // GQL_HARNESS_H
