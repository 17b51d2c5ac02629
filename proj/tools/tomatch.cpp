// Copyright 2026 The tom Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// tomatch: decide a third-order matching problem read from a file.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "tom/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decide third-order matching problems."};
  std::string path;
  tom::RunConfig config;
  int enumerate_k = 0;
  int max_depth = -1;

  const std::map<std::string, tom::Engine> engines = {
      {"brute", tom::Engine::kBrute},
      {"huet", tom::Engine::kHuet},
      {"both", tom::Engine::kBoth}};
  app.add_option("problem", path, "Problem file, or - for stdin")->required();
  app.add_option("--engine", config.engine, "Decision engine")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  auto* enumerate =
      app.add_option("--enumerate", enumerate_k,
                     "Print up to K solutions from a complete set")
          ->check(CLI::PositiveNumber);
  app.add_option("--node-limit", config.node_limit,
                 "Search nodes --enumerate may expand");
  auto* depth = app.add_option("--max-depth", max_depth,
                               "Override the proved depth bound")
                    ->check(CLI::NonNegativeNumber);
  app.add_flag("--stats", config.stats, "Print search statistics");
  app.add_flag("--json", config.json, "Machine-readable output");
  auto* proofkit =
      app.add_flag("--proofkit", "Run the proof constructions and sweeps");
  app.add_option("--threads", config.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  enumerate->excludes(proofkit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : tom::kExitError;
  }

  if (*enumerate) {
    config.mode = tom::Mode::kEnumerate;
    config.enumerate_k = enumerate_k;
  }
  if (*proofkit) config.mode = tom::Mode::kProofkit;
  if (*depth) config.max_depth = max_depth;

  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return tom::kExitError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  tom::RunOutput r = tom::run_text(config, text);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
