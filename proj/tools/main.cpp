// Copyright 2026 The hidcorr Authors
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
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using hidcorr::cli::AnalysisRequest;

  CLI::App app{"Hidden correlations in single-qudit states and single-variable distributions"};
  app.set_version_flag("--version", hidcorr::cli::kToolVersion);
  app.require_subcommand(1);

  AnalysisRequest req;
  const auto add_common = [&req](CLI::App* sub) {
    sub->add_option("--seed", req.seed, "Random seed recorded in the report");
    sub->add_option("--out", req.out, "Write the report here instead of stdout");
  };

  auto* prob = app.add_subcommand("analyze-prob", "Analyze a probability vector");
  prob->add_option("--input", req.input, "Probability vector (JSON array or CSV)")->required();
  prob->add_option("--dims", req.dims, "Factorization, e.g. 2,2")->required();
  prob->add_option("--split", req.split, "Split point s (leading block = axes 1..s)");
  prob->add_option("--q", req.qs, "Tsallis parameter (repeatable)");
  prob->add_option("--given", req.given, "Condition on AXIS=VALUE (repeatable)");
  add_common(prob);

  auto* dm = app.add_subcommand("analyze-dm", "Analyze a density matrix");
  dm->add_option("--input", req.input, "Density matrix JSON")->required();
  dm->add_option("--dims", req.dims, "Factorization, e.g. 2,2")->required();
  dm->add_option("--split", req.split, "Split point s");
  dm->add_option("--q", req.qs, "Tsallis parameter for qutrit inequalities (repeatable)");
  add_common(dm);

  auto* sweep = app.add_subcommand("tomogram-sweep", "Spin tomograms over a direction grid");
  sweep->add_option("--input", req.input, "Density matrix JSON (N = 2j+1)")->required();
  sweep->add_option("--dims", req.dims, "Two-factor partition, e.g. 2,2")->required();
  sweep->add_option("--grid", req.grid, "Direction grid JSON")->required();
  sweep->add_option("--q", req.qs, "Tsallis parameter (repeatable)");
  add_common(sweep);

  auto* demo = app.add_subcommand("demo-four-level", "Four-level atom / spin-3/2 example");
  add_common(demo);

  auto* fuzz = app.add_subcommand("fuzz", "Randomized check of every inequality");
  fuzz->add_option("--count", req.count, "Samples per inequality");
  add_common(fuzz);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  req.subcommand = app.get_subcommands().front()->get_name();
  const auto result = hidcorr::cli::run(req);
  if (result.exit_code == 2) {
    std::cerr << "error: " << result.error << "\n";
    return 2;
  }
  if (req.out.empty()) {
    std::cout << result.output;
  } else {
    try {
      hidcorr::io::write_text(req.out, result.output);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  return result.exit_code;
}
