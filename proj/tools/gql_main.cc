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

// Command-line experiment runner.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gql/harness.h"

namespace {

constexpr int kThresholdViolation = 1;
constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gql: seeded query-complexity experiments"};
    app.require_subcommand(1);
    CLI::App *run_cmd = app.add_subcommand("run", "run an experiment config");

    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::optional<uint64_t> seed;
    std::optional<uint64_t> trials;
    unsigned threads = 1;
    bool record_time = false;
    std::string summary_path;
    run_cmd->add_option("--config", config_path, "experiment config (JSON)")->required();
    run_cmd->add_option("--out", out_path, "output file; defaults to the config's output");
    run_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run_cmd->add_option("--seed", seed, "master seed override");
    run_cmd->add_option("--trials", trials, "trials per grid point override");
    run_cmd->add_option("--threads", threads, "worker threads (GQL_THREADS overrides)");
    run_cmd->add_flag("--record-time", record_time, "fill the ms column with wall time");
    run_cmd->add_option("--summary", summary_path, "also write the summary JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kUsageError;
    }

    gql::ExperimentConfig config;
    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot read config " << config_path << "\n";
            return kUsageError;
        }
        std::stringstream text;
        text << in.rdbuf();
        config = gql::config_from_json(text.str());
        if (seed) config.seed = *seed;
        if (trials) config.trials = *trials;
        if (!out_path.empty()) config.output = out_path;
        if (config.output.empty()) {
            std::cerr << "no output path: pass --out or set \"output\" in the config\n";
            return kUsageError;
        }
        config.validate();
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    }

    gql::RunOptions options;
    options.threads = gql::resolve_threads(threads);
    options.record_time = record_time;
    try {
        gql::RunResult result = gql::run(config, options);
        gql::emit(result.records, gql::parse_format(format), config.output, true);
        std::string summary = gql::summary_to_json(result.summary);
        std::cout << summary << "\n";
        if (!summary_path.empty()) {
            std::ofstream(summary_path) << summary << "\n";
        }
        for (const auto &v : result.summary.violations) {
            std::cerr << "threshold violation: " << v << "\n";
        }
        return result.summary.thresholds_met ? 0 : kThresholdViolation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kThresholdViolation;
    }
}
