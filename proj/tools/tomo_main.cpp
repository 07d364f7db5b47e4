// Copyright 2026 The Tomo Authors
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


// tomo: command-line front end over the C API.
//   tomo <subcommand> <scenario.json> [--out PATH] [--format csv|json] [--set key=value]...

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tomo/tomo.h"

namespace {

const char* const kSubcommands[][2] = {
    {"spin-tomogram", "Spin tomogram of a state on the sphere quadrature"},
    {"spin-reconstruct", "Density matrix from a spin tomogram"},
    {"evolve", "Quantum and classical trajectories of a linear system"},
    {"energies", "Spectrum and normal-mode frequencies of a Hamiltonian"},
    {"transform", "Apply a linear canonical transformation to a spinor"},
    {"cv-tomogram", "Symplectic tomogram of a continuous-variable state"},
    {"wigner", "Wigner function of a continuous-variable state"},
    {"verify", "Run the built-in invariant checks"},
};

struct Options {
  std::string scenario;
  std::string out;
  std::string format;
  std::vector<std::string> overrides;
};

int report(tomo_status status) {
  std::fprintf(stderr, "tomo: error: %s\n", tomo_last_error());
  return tomo_exit_code(status);
}

int run(const std::string& command, const Options& opt) {
  tomo_scenario* s = nullptr;
  tomo_status st = tomo_scenario_load(opt.scenario.c_str(), &s);
  if (st != TOMO_OK) return report(st);

  int code = 0;
  if (command != tomo_scenario_kind(s)) {
    std::fprintf(stderr, "tomo: error: scenario kind '%s' does not match subcommand '%s'\n", tomo_scenario_kind(s),
                 command.c_str());
    code = tomo_exit_code(TOMO_ERR_PARSE);
  }
  for (const auto& kv : opt.overrides) {
    if (code != 0) break;
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "tomo: error: --set expects key=value, got '%s'\n", kv.c_str());
      code = tomo_exit_code(TOMO_ERR_PARSE);
      break;
    }
    st = tomo_scenario_set(s, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (st != TOMO_OK) code = report(st);
  }
  if (code == 0 && (!opt.out.empty() || !opt.format.empty())) {
    st = tomo_scenario_set_output(s, opt.out.c_str(), opt.format.c_str());
    if (st != TOMO_OK) code = report(st);
  }
  if (code == 0) {
    char summary[1024];
    st = tomo_scenario_execute(s, &code, summary, sizeof summary);
    if (st != TOMO_OK) {
      code = report(st);
    } else {
      std::printf("%s\n", summary);
    }
  }
  tomo_scenario_free(s);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tomographic maps between classical linear systems, spin states and phase-space distributions"};
  app.set_version_flag("--version", tomo_version());
  app.require_subcommand(1);

  Options opt;
  for (const auto& sub : kSubcommands) {
    CLI::App* cmd = app.add_subcommand(sub[0], sub[1]);
    cmd->add_option("scenario", opt.scenario, "Scenario JSON file")->required();
    cmd->add_option("--out", opt.out, "Override the output path");
    cmd->add_option("--format", opt.format, "Override the output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--set", opt.overrides, "Override a scalar parameter (key=value)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return run(app.get_subcommands().front()->get_name(), opt);
}
