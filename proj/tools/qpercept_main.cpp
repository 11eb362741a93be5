// Copyright 2026 The qpercept Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpercept/config.hpp"
#include "qpercept/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    CLI::App app{"Teacher-student experiments for quantum perceptron architectures"};
    std::string config_path;
    std::string out_dir;
    int seeds = 0;
    int threads = 0;
    bool print_only = false;
    app.add_option("--config", config_path, "Experiment config file (key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "Output directory (overrides the config's output key)");
    app.add_option("--seeds", seeds, "Override n_seeds")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads for independent seeds")->check(CLI::PositiveNumber);
    app.add_flag("--print-config", print_only, "Print the fully resolved config and exit");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version exit 0; every usage error exits 2.
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::ifstream in(config_path);
    std::stringstream text;
    text << in.rdbuf();

    qpercept::ExperimentConfig config;
    try {
        config = qpercept::parse_config(text.str());
    } catch (const std::exception& e) {
        std::cerr << config_path << ": " << e.what() << "\n";
        return 2;
    }
    if (!out_dir.empty()) {
        config.output = out_dir;
    }
    if (seeds > 0) {
        config.n_seeds = seeds;
    }
    if (threads > 0) {
        config.threads = threads;
    }
    if (print_only) {
        std::cout << qpercept::print_config(config);
        return 0;
    }
    return qpercept::run(config, std::cerr);
}
