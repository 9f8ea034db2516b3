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
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gql/harness.h"

namespace gql {
namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

size_t line_count(const std::string &text) {
    return static_cast<size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("gql_harness_" + name)).string();
}

ExperimentConfig star_config() {
    return config_from_json(R"({
        "name": "star",
        "learner": "star_or",
        "family": {"kind": "star", "n": 64},
        "grid": [{"m": 4}, {"m": 16}],
        "backend": {"kind": "quantum_ideal", "c": 1.0},
        "trials": 5,
        "seed": 17,
        "metric": "or_plus_charged",
        "driver": "m",
        "min_success": 0.9
    })");
}

TEST(Config, RoundTrip) {
    ExperimentConfig c = star_config();
    ExperimentConfig back = config_from_json(config_to_json(c));
    EXPECT_EQ(config_to_json(back), config_to_json(c));
    EXPECT_EQ(back.learner, LearnerId::star_or);
    EXPECT_EQ(back.grid.size(), 2u);
}

TEST(Config, Rejections) {
    EXPECT_THROW(config_from_json("{"), ConfigError);
    EXPECT_THROW(config_from_json(R"({"learner": "nope"})"), ConfigError);
    EXPECT_THROW(config_from_json(R"({"learner": "graph_or", "bogus": 1})"), ConfigError);
    EXPECT_THROW(config_from_json(R"({"learner": "star_or", "family": {"kind": "clique", "n": 8, "support": 3}})"),
                 ConfigError);
    EXPECT_THROW(config_from_json(R"({"learner": "symmetric_junta", "function": "majority", "k": 4,
                                      "family": {"n": 10}})"),
                 ConfigError);
}

TEST(Run, ZeroTrialsEmpty) {
    ExperimentConfig c = star_config();
    c.trials = 0;
    RunResult r = run(c);
    EXPECT_TRUE(r.records.empty());
    EXPECT_TRUE(r.summary.points.empty());
    EXPECT_FALSE(r.summary.slope);
}

TEST(Run, DeterministicAcrossThreads) {
    ExperimentConfig c = star_config();
    RunResult serial = run(c, {1, false});
    RunResult parallel = run(c, {4, false});
    EXPECT_EQ(records_to_csv(serial.records), records_to_csv(parallel.records));
    EXPECT_EQ(serial.records.size(), 10u);
    EXPECT_TRUE(serial.summary.thresholds_met);
    ASSERT_TRUE(serial.summary.slope);
    for (const auto &r : serial.records) EXPECT_TRUE(r.success);
}

TEST(Run, JuntaLearner) {
    ExperimentConfig c = config_from_json(R"({
        "learner": "symmetric_junta", "function": "majority",
        "family": {"n": 32}, "grid": [{"k": 5}, {"k": 9}],
        "trials": 10, "seed": 3, "metric": "charged_quantum", "driver": "k"
    })");
    RunResult r = run(c);
    ASSERT_EQ(r.records.size(), 20u);
    for (const auto &rec : r.records) {
        EXPECT_TRUE(rec.success);
        EXPECT_GT(rec.ledger.junta_query, 0u);
    }
    EXPECT_EQ(r.summary.points[1].driver, 9.0);
}

TEST(Run, SlopeViolationReported) {
    ExperimentConfig c = star_config();
    c.slope_range = std::make_pair(5.0, 6.0);
    RunResult r = run(c);
    EXPECT_FALSE(r.summary.thresholds_met);
    EXPECT_FALSE(r.summary.violations.empty());
}

TEST(Slope, ExactPowerLaw) {
    EXPECT_NEAR(fit_loglog_slope({1, 2, 4, 8}, {3, 3 * std::sqrt(2.0), 6, 6 * std::sqrt(2.0)}), 0.5,
                1e-12);
    EXPECT_THROW(fit_loglog_slope({1}, {1}), std::invalid_argument);
}

TEST(Threads, EnvironmentOverride) {
    unsetenv("GQL_THREADS");
    EXPECT_EQ(resolve_threads(3), 3u);
    EXPECT_EQ(resolve_threads(0), 1u);
    setenv("GQL_THREADS", "5", 1);
    EXPECT_EQ(resolve_threads(3), 5u);
    unsetenv("GQL_THREADS");
}

TrialRecord sample_record(uint64_t i) {
    TrialRecord r;
    r.seed = 1000 + i;
    r.n = 64;
    r.m = i % 7;
    r.d = 2;
    r.k = 0;
    r.ledger.or_query = i;
    r.ledger.parity_query = 2 * i;
    r.ledger.charged_quantum = 3;
    r.success = i % 2 == 0;
    return r;
}

TEST(Emit, OneRecordCsv) {
    std::string path = temp_path("one.csv");
    emit({sample_record(4)}, OutputFormat::csv, path);
    std::string text = read_file(path);
    EXPECT_EQ(text,
              "seed,n,m,d,k,or_queries,parity_queries,copies,charged_quantum,success,ms\n"
              "1004,64,4,2,0,4,8,0,3,1,0.000\n");
    std::filesystem::remove(path);
}

TEST(Emit, JsonRoundTrip) {
    std::vector<TrialRecord> records;
    for (uint64_t i = 0; i < 20; i++) records.push_back(sample_record(i));
    records[3].ms = 1.25;
    EXPECT_EQ(records_from_json(records_to_json(records)), records);
}

TEST(Emit, ManyRows) {
    std::vector<TrialRecord> records;
    for (uint64_t i = 0; i < 10000; i++) records.push_back(sample_record(i));
    std::string path = temp_path("many.csv");
    emit(records, OutputFormat::csv, path);
    EXPECT_EQ(line_count(read_file(path)), 10001u);
    std::filesystem::remove(path);
}

TEST(Emit, EmptyNeedsFlag) {
    std::string path = temp_path("empty.csv");
    EXPECT_THROW(emit({}, OutputFormat::csv, path), std::invalid_argument);
    emit({}, OutputFormat::csv, path, true);
    EXPECT_EQ(line_count(read_file(path)), 1u);
    std::filesystem::remove(path);
    EXPECT_THROW(emit({sample_record(1)}, OutputFormat::csv, "/nonexistent/dir/x.csv"),
                 std::runtime_error);
}

}  // namespace
}  // namespace gql
