// Copyright 2026 The PauliPolar Authors
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

// Command line front end. Everything goes through the C API of the shared
// library; this file only parses arguments, shuttles strings and maps status
// codes to exit codes (0 ok, 1 usage or input error, 2 failed check).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "paulipolar.h"

namespace {

int status_to_exit(paulipolar_status status) {
  switch (status) {
    case PAULIPOLAR_OK:
      return 0;
    case PAULIPOLAR_ERR_INVALID_ARGUMENT:
    case PAULIPOLAR_ERR_PARSE:
      return 1;
    case PAULIPOLAR_ERR_CHECK_FAILED:
    case PAULIPOLAR_ERR_INTERNAL:
      return 2;
  }
  return 2;
}

int finish(paulipolar_status status, char* out) {
  if (status != PAULIPOLAR_OK) {
    std::cerr << "error: " << paulipolar_last_error() << "\n";
    return status_to_exit(status);
  }
  const std::string text = out == nullptr ? "" : out;
  paulipolar_string_free(out);
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << "\n";
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SpaceHandle {
  paulipolar_space* space = nullptr;
  ~SpaceHandle() { paulipolar_space_free(space); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-geometry toolkit for Pauli groups, contextuality and "
               "SLOCC classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(paulipolar_version()));

  int exit_code = 0;
  int n_qubits = 2;
  bool dot = false, census = false, verify = false, list = false, symmetric = false;
  int planes = -1;  // -1 auto
  int threads = 0, samples = 20, k_secant = 2, repeats = 20;
  unsigned long long seed = 0;
  double epsilon = 0;
  std::string file, format_csv = "2,2,2", chart_csv, within_file;

  // ---- space ----
  auto* space_cmd = app.add_subcommand("space", "W(2N-1,2) builds and censuses");
  space_cmd->require_subcommand(1);

  auto* space_build = space_cmd->add_subcommand("build", "materialize a polar space");
  space_build->add_option("-n,--qubits", n_qubits, "number of qubits (1..6)")->required();
  space_build->add_flag("--dot", dot, "emit a DOT incidence graph");
  auto* planes_opt = space_build->add_flag("--planes", "force plane materialization");
  auto* no_planes_opt = space_build->add_flag("--no-planes", "skip plane materialization");
  space_build->callback([&] {
    if (planes_opt->count()) planes = 1;
    if (no_planes_opt->count()) planes = 0;
    SpaceHandle h;
    paulipolar_status status = paulipolar_space_build(n_qubits, planes, &h.space);
    if (status != PAULIPOLAR_OK) {
      std::cerr << "error: " << paulipolar_last_error() << "\n";
      exit_code = status_to_exit(status);
      return;
    }
    char* out = nullptr;
    status = dot ? paulipolar_space_dot(h.space, &out)
                 : paulipolar_space_json(h.space, &out);
    exit_code = finish(status, out);
  });

  auto* space_hyper = space_cmd->add_subcommand("hyperplanes",
                                                "perp sets and quadrics of the space");
  space_hyper->add_option("-n,--qubits", n_qubits, "number of qubits (2..3 for lists)")
      ->required();
  space_hyper->add_flag("--census", census, "counts only");
  space_hyper->callback([&] {
    SpaceHandle h;
    paulipolar_status status = paulipolar_space_build(n_qubits, 0, &h.space);
    if (status != PAULIPOLAR_OK) {
      std::cerr << "error: " << paulipolar_last_error() << "\n";
      exit_code = status_to_exit(status);
      return;
    }
    char* out = nullptr;
    status = census ? paulipolar_hyperplane_census_json(h.space, &out)
                    : paulipolar_hyperplane_list_json(h.space, &out);
    exit_code = finish(status, out);
  });

  auto* space_veldkamp =
      space_cmd->add_subcommand("veldkamp", "Veldkamp line census by type");
  space_veldkamp->add_option("-n,--qubits", n_qubits, "number of qubits (2..4)")
      ->required();
  space_veldkamp->callback([&] {
    SpaceHandle h;
    paulipolar_status status = paulipolar_space_build(n_qubits, 0, &h.space);
    if (status != PAULIPOLAR_OK) {
      std::cerr << "error: " << paulipolar_last_error() << "\n";
      exit_code = status_to_exit(status);
      return;
    }
    char* out = nullptr;
    status = paulipolar_veldkamp_census_json(h.space, &out);
    exit_code = finish(status, out);
  });

  auto* space_grid = space_cmd->add_subcommand("grid", "hyperplanes of the grid GQ(2,1)");
  space_grid->callback([&] {
    char* out = nullptr;
    const paulipolar_status status = paulipolar_grid_census_json(&out);
    exit_code = finish(status, out);
  });

  // ---- magic ----
  auto* magic_cmd = app.add_subcommand("magic", "contextual configurations");
  magic_cmd->require_subcommand(1);

  auto* magic_square = magic_cmd->add_subcommand("square", "the canonical Mermin-Peres square");
  magic_square->add_flag("--verify", verify, "re-check signs with the matrix oracle");
  magic_square->add_flag("--dot", dot, "emit DOT instead of JSON");
  magic_square->callback([&] {
    char* out = nullptr;
    paulipolar_status status = paulipolar_mermin_square_json(verify ? 1 : 0, &out);
    if (status == PAULIPOLAR_OK && dot) {
      char* graph = nullptr;
      status = paulipolar_configuration_dot(out, &graph);
      paulipolar_string_free(out);
      out = graph;
    }
    exit_code = finish(status, out);
  });

  auto* magic_pentagram =
      magic_cmd->add_subcommand("pentagram", "the canonical Mermin pentagram");
  magic_pentagram->add_flag("--verify", verify, "re-check signs with the matrix oracle");
  magic_pentagram->add_flag("--dot", dot, "emit DOT instead of JSON");
  magic_pentagram->callback([&] {
    char* out = nullptr;
    paulipolar_status status = paulipolar_mermin_pentagram_json(verify ? 1 : 0, &out);
    if (status == PAULIPOLAR_OK && dot) {
      char* graph = nullptr;
      status = paulipolar_configuration_dot(out, &graph);
      paulipolar_string_free(out);
      out = graph;
    }
    exit_code = finish(status, out);
  });

  auto* magic_grids =
      magic_cmd->add_subcommand("enumerate-grids", "all Mermin-Peres grids of the doily");
  magic_grids->add_flag("--verify", verify, "re-check signs with the matrix oracle");
  magic_grids->callback([&] {
    char* out = nullptr;
    const paulipolar_status status = paulipolar_enumerate_grids_json(verify ? 1 : 0, &out);
    exit_code = finish(status, out);
  });

  auto* magic_pentagrams = magic_cmd->add_subcommand(
      "enumerate-pentagrams", "all Mermin pentagrams of the 3-qubit Pauli group");
  magic_pentagrams->add_option("--within", within_file,
                               "JSON file of operator strings restricting the points");
  magic_pentagrams->add_flag("--list", list, "embed the configurations");
  magic_pentagrams->add_option("--threads", threads, "worker threads (0 = auto)");
  magic_pentagrams->callback([&] {
    std::string within;
    if (!within_file.empty()) within = read_file(within_file);
    char* out = nullptr;
    const paulipolar_status status = paulipolar_enumerate_pentagrams_json(
        within_file.empty() ? nullptr : within.c_str(), list ? 1 : 0, threads, &out);
    exit_code = finish(status, out);
  });

  auto* magic_game =
      magic_cmd->add_subcommand("game-value", "classical value of the square game");
  magic_game->add_option("file", file, "configuration JSON")->required();
  magic_game->callback([&] {
    const std::string config = read_file(file);
    char* out = nullptr;
    const paulipolar_status status = paulipolar_game_value_json(config.c_str(), &out);
    exit_code = finish(status, out);
  });

  // ---- magicline ----
  auto* line_cmd = app.add_subcommand("magicline", "the magic Veldkamp line of W(5,2)");
  line_cmd->require_subcommand(1);

  auto* line_show = line_cmd->add_subcommand("show", "hyperplanes, core and partition");
  line_show->callback([&] {
    char* out = nullptr;
    const paulipolar_status status = paulipolar_magic_line_json(&out);
    exit_code = finish(status, out);
  });

  auto* line_weights =
      line_cmd->add_subcommand("weights", "weight diagram of the core doily");
  line_weights->add_flag("--dot", dot, "emit DOT instead of JSON");
  line_weights->callback([&] {
    char* out = nullptr;
    const paulipolar_status status = dot ? paulipolar_weight_diagram_dot(&out)
                                         : paulipolar_weight_diagram_json(&out);
    exit_code = finish(status, out);
  });

  auto* line_pfaffian =
      line_cmd->add_subcommand("pfaffian-check", "Tr(Omega^3) against Pf(A)");
  line_pfaffian->add_option("--samples", samples, "random coefficient draws");
  line_pfaffian->add_option("--seed", seed, "RNG seed");
  line_pfaffian->callback([&] {
    char* out = nullptr;
    const paulipolar_status status = paulipolar_pfaffian_check_json(samples, seed, &out);
    exit_code = finish(status, out);
  });

  // ---- slocc ----
  auto* slocc_cmd = app.add_subcommand("slocc", "pure-state SLOCC classification");
  slocc_cmd->require_subcommand(1);

  auto* slocc_classify = slocc_cmd->add_subcommand("classify", "3-qubit SLOCC class");
  slocc_classify->add_option("file", file, "state JSON")->required();
  slocc_classify->add_option("--epsilon", epsilon, "rank/vanishing tolerance");
  slocc_classify->callback([&] {
    const std::string state = read_file(file);
    char* out = nullptr;
    const paulipolar_status status = paulipolar_slocc_classify_json(state.c_str(), epsilon, &out);
    exit_code = finish(status, out);
  });

  auto* slocc_secant =
      slocc_cmd->add_subcommand("secant-dim", "Terracini secant dimension estimate");
  slocc_secant->add_option("--format", format_csv, "factor dimensions, e.g. 2,2,2");
  slocc_secant->add_option("-k", k_secant, "secant order")->required();
  slocc_secant->add_option("--repeats", repeats, "independent random repetitions");
  slocc_secant->add_option("--seed", seed, "RNG seed");
  slocc_secant->add_flag("--symmetric", symmetric, "Veronese (bosonic) variant");
  slocc_secant->callback([&] {
    char* out = nullptr;
    const paulipolar_status status = paulipolar_secant_dimension_json(
        format_csv.c_str(), k_secant, repeats, seed, symmetric ? 1 : 0, &out);
    exit_code = finish(status, out);
  });

  auto* slocc_singularity =
      slocc_cmd->add_subcommand("singularity", "hyperplane-section singularity analysis");
  slocc_singularity->add_option("file", file, "state JSON")->required();
  slocc_singularity->add_option("--chart", chart_csv, "fixed coordinate per factor")
      ->required();
  slocc_singularity->callback([&] {
    const std::string state = read_file(file);
    char* out = nullptr;
    const paulipolar_status status =
        paulipolar_singularity_json(state.c_str(), chart_csv.c_str(), &out);
    exit_code = finish(status, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return exit_code;
}
