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

#include "paulipolar.h"

#include <array>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "paulipolar/contextuality.hpp"
#include "paulipolar/dense_matrix.hpp"
#include "paulipolar/entanglement.hpp"
#include "paulipolar/json_io.hpp"
#include "paulipolar/magic_line.hpp"
#include "paulipolar/pfaffian.hpp"
#include "paulipolar/polar_space.hpp"

struct paulipolar_space {
  paulipolar::PolarSpace space;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
paulipolar_status guarded(Fn&& fn) {
  try {
    fn();
    return PAULIPOLAR_OK;
  } catch (const paulipolar::ParseError& e) {
    g_last_error = e.what();
    return PAULIPOLAR_ERR_PARSE;
  } catch (const CheckFailure& e) {
    g_last_error = e.what();
    return PAULIPOLAR_ERR_CHECK_FAILED;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return PAULIPOLAR_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return PAULIPOLAR_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PAULIPOLAR_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PAULIPOLAR_ERR_INTERNAL;
  }
}

const paulipolar::PolarSpace& space_of(const paulipolar_space* handle) {
  if (handle == nullptr) throw std::invalid_argument("null space handle");
  return handle->space;
}

std::vector<int> parse_csv_ints(const char* text) {
  if (text == nullptr) throw std::invalid_argument("null csv argument");
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    const int v = std::stoi(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) {
      ++used;
    }
    if (used != item.size()) throw std::invalid_argument("malformed csv integer");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty csv argument");
  return out;
}

std::string required(const char* text, const char* what) {
  if (text == nullptr) throw std::invalid_argument(std::string("null ") + what);
  return text;
}

}  // namespace

extern "C" {

const char* paulipolar_version(void) { return "0.1.0"; }

const char* paulipolar_status_name(paulipolar_status status) {
  switch (status) {
    case PAULIPOLAR_OK:
      return "ok";
    case PAULIPOLAR_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PAULIPOLAR_ERR_PARSE:
      return "parse error";
    case PAULIPOLAR_ERR_CHECK_FAILED:
      return "check failed";
    case PAULIPOLAR_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* paulipolar_last_error(void) { return g_last_error.c_str(); }

void paulipolar_string_free(char* s) { std::free(s); }

paulipolar_status paulipolar_pauli_json(const char* op_text, char** out) {
  return guarded([&] {
    auto op = paulipolar::parse_pauli(required(op_text, "operator"));
    *out = copy_out(paulipolar::jsonio::pauli_json(op));
  });
}

paulipolar_status paulipolar_pauli_multiply_json(const char* a_text, const char* b_text,
                                                 char** out) {
  return guarded([&] {
    auto a = paulipolar::parse_pauli(required(a_text, "operator"));
    auto b = paulipolar::parse_pauli(required(b_text, "operator"));
    *out = copy_out(paulipolar::jsonio::pauli_product_json(a, b));
  });
}

paulipolar_status paulipolar_space_build(int n_qubits, int with_planes,
                                         paulipolar_space** out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output pointer");
    paulipolar::PolarSpace::Options options;
    options.with_planes = with_planes;
    auto* handle = new paulipolar_space{paulipolar::PolarSpace::build(n_qubits, options)};
    *out = handle;
  });
}

void paulipolar_space_free(paulipolar_space* space) { delete space; }

int paulipolar_space_point_count(const paulipolar_space* space) {
  return space == nullptr ? -1 : static_cast<int>(space->space.point_count());
}

int paulipolar_space_line_count(const paulipolar_space* space) {
  return space == nullptr ? -1 : static_cast<int>(space->space.lines().size());
}

int paulipolar_space_plane_count(const paulipolar_space* space) {
  if (space == nullptr) return -1;
  if (!space->space.planes_materialized()) return -1;
  return static_cast<int>(space->space.planes().size());
}

paulipolar_status paulipolar_space_json(const paulipolar_space* space, char** out) {
  return guarded([&] { *out = copy_out(paulipolar::jsonio::space_json(space_of(space))); });
}

paulipolar_status paulipolar_space_dot(const paulipolar_space* space, char** out) {
  return guarded([&] { *out = copy_out(paulipolar::jsonio::space_dot(space_of(space))); });
}

paulipolar_status paulipolar_hyperplane_census_json(const paulipolar_space* space,
                                                    char** out) {
  return guarded([&] {
    *out = copy_out(paulipolar::jsonio::hyperplane_census_json(space_of(space)));
  });
}

paulipolar_status paulipolar_hyperplane_list_json(const paulipolar_space* space,
                                                  char** out) {
  return guarded([&] {
    const auto& s = space_of(space);
    if (s.n_qubits() > 3) {
      throw std::invalid_argument("hyperplane listing supported up to 3 qubits");
    }
    *out = copy_out(paulipolar::jsonio::hyperplane_list_json(s));
  });
}

paulipolar_status paulipolar_grid_census_json(char** out) {
  return guarded([&] { *out = copy_out(paulipolar::jsonio::grid_gq21_census_json()); });
}

paulipolar_status paulipolar_veldkamp_census_json(const paulipolar_space* space,
                                                  char** out) {
  return guarded([&] {
    const auto& s = space_of(space);
    if (s.n_qubits() < 2 || s.n_qubits() > 4) {
      throw std::invalid_argument("veldkamp census supported for 2 to 4 qubits");
    }
    *out = copy_out(paulipolar::jsonio::veldkamp_census_json(s));
  });
}

namespace {

void emit_configuration(const paulipolar::Configuration& config, int verify, char** out) {
  std::optional<bool> verified;
  if (verify != 0) {
    verified = config.verify_signs_with_matrix_oracle();
    if (!*verified) throw CheckFailure("matrix oracle rejected a context sign");
  }
  *out = copy_out(paulipolar::jsonio::configuration_json(config, verified));
}

}  // namespace

paulipolar_status paulipolar_mermin_square_json(int verify, char** out) {
  return guarded(
      [&] { emit_configuration(paulipolar::mermin_square_canonical(), verify, out); });
}

paulipolar_status paulipolar_mermin_pentagram_json(int verify, char** out) {
  return guarded(
      [&] { emit_configuration(paulipolar::mermin_pentagram_canonical(), verify, out); });
}

paulipolar_status paulipolar_configuration_dot(const char* config_json, char** out) {
  return guarded([&] {
    auto config =
        paulipolar::jsonio::configuration_from_json(required(config_json, "configuration"));
    *out = copy_out(paulipolar::jsonio::configuration_dot(config));
  });
}

paulipolar_status paulipolar_enumerate_grids_json(int verify, char** out) {
  return guarded([&] {
    auto w32 = paulipolar::PolarSpace::build(2);
    auto grids = paulipolar::enumerate_grids(w32);
    std::optional<bool> verified;
    if (verify != 0) {
      bool ok = true;
      for (const auto& g : grids) ok = ok && g.verify_signs_with_matrix_oracle();
      verified = ok;
      if (!ok) throw CheckFailure("matrix oracle rejected a grid context sign");
    }
    if (grids.size() != 10) throw CheckFailure("doily grid census is not 10");
    *out = copy_out(paulipolar::jsonio::grids_json(grids, verified));
  });
}

paulipolar_status paulipolar_enumerate_pentagrams_json(const char* within_json, int list,
                                                       int threads, char** out) {
  return guarded([&] {
    auto w52 = paulipolar::PolarSpace::build(3);
    paulipolar::PentagramOptions options;
    options.collect = (list != 0);
    options.threads = threads;
    if (within_json != nullptr) {
      options.within = paulipolar::jsonio::point_set_from_json(w52, within_json);
    }
    auto census = paulipolar::enumerate_pentagrams(w52, options);
    if (!census.all_magic) throw CheckFailure("a pentagram failed the magic test");
    if (within_json == nullptr && census.count != 12096) {
      throw CheckFailure("pentagram census is not 12096");
    }
    *out = copy_out(paulipolar::jsonio::pentagram_census_json(census));
  });
}

paulipolar_status paulipolar_game_value_json(const char* config_json, char** out) {
  return guarded([&] {
    auto config =
        paulipolar::jsonio::configuration_from_json(required(config_json, "configuration"));
    auto value = paulipolar::classical_game_value(config);
    *out = copy_out(paulipolar::jsonio::game_value_json(value, paulipolar::is_magic(config)));
  });
}

paulipolar_status paulipolar_magic_line_json(char** out) {
  return guarded([&] {
    auto w52 = paulipolar::PolarSpace::build(3);
    auto line = paulipolar::magic_veldkamp_line(w52);
    auto [doily_part, rest_part] = paulipolar::partition_35(w52);
    const bool is_doily = paulipolar::core_is_doily(w52, line.core);
    const uint64_t in_rest = paulipolar::pentagrams_within(w52, rest_part);
    *out = copy_out(paulipolar::jsonio::magic_line_json(w52, line, is_doily, doily_part,
                                                        rest_part, in_rest));
  });
}

namespace {

paulipolar::WeightDiagram build_weight_diagram(const paulipolar::PolarSpace& w52,
                                               std::array<uint32_t, 5>& roots_out) {
  auto line = paulipolar::magic_veldkamp_line(w52);
  const uint32_t ziz = w52.point_from_str("ZIZ");
  roots_out = paulipolar::find_root_quintuple(w52, line.core, ziz);
  return paulipolar::weight_orbit(w52, roots_out, ziz, line.core);
}

}  // namespace

paulipolar_status paulipolar_weight_diagram_json(char** out) {
  return guarded([&] {
    auto w52 = paulipolar::PolarSpace::build(3);
    std::array<uint32_t, 5> roots{};
    auto diagram = build_weight_diagram(w52, roots);
    *out = copy_out(paulipolar::jsonio::weight_diagram_json(w52, roots, diagram));
  });
}

paulipolar_status paulipolar_weight_diagram_dot(char** out) {
  return guarded([&] {
    auto w52 = paulipolar::PolarSpace::build(3);
    std::array<uint32_t, 5> roots{};
    auto diagram = build_weight_diagram(w52, roots);
    *out = copy_out(paulipolar::jsonio::weight_diagram_dot(w52, roots, diagram));
  });
}

paulipolar_status paulipolar_pfaffian_check_json(int samples, unsigned long long seed,
                                                 char** out) {
  return guarded([&] {
    auto w52 = paulipolar::PolarSpace::build(3);
    auto line = paulipolar::magic_veldkamp_line(w52);
    auto labeling = paulipolar::find_duad_labeling(w52, line.core);
    paulipolar::PfaffianCheck check;
    try {
      check = paulipolar::trace_cube_pfaffian_check(labeling, samples, seed);
    } catch (const std::runtime_error& e) {
      throw CheckFailure(e.what());
    }

    // Independent cross-check: Pf(A)^2 = det(A) on random skew matrices.
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    double max_rel = 0;
    for (int it = 0; it < std::max(1, samples); ++it) {
      paulipolar::ComplexMatrix a(6, 6);
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
          const double x = coeff(rng);
          a.at(i, j) = x;
          a.at(j, i) = -x;
        }
      }
      const auto pf = paulipolar::pfaffian(a);
      const auto det = paulipolar::determinant(a);
      max_rel = std::max(max_rel,
                         std::abs(pf * pf - det) / std::max(1e-300, std::abs(det)));
    }
    if (max_rel > 1e-9) throw CheckFailure("Pf(A)^2 drifted from det(A)");
    *out = copy_out(paulipolar::jsonio::pfaffian_check_json(check, max_rel));
  });
}

paulipolar_status paulipolar_slocc_classify_json(const char* state_json, double epsilon,
                                                 char** out) {
  return guarded([&] {
    auto t = paulipolar::jsonio::state_tensor_from_json(required(state_json, "state"));
    const double eps = epsilon > 0 ? epsilon : paulipolar::kDefaultEps;
    auto result = paulipolar::classify_3qubit(t, eps);
    *out = copy_out(paulipolar::jsonio::classification_json(result));
  });
}

paulipolar_status paulipolar_secant_dimension_json(const char* format_csv, int k,
                                                   int repeats, unsigned long long seed,
                                                   int symmetric, char** out) {
  return guarded([&] {
    const std::vector<int> format = parse_csv_ints(format_csv);
    paulipolar::SecantOptions options;
    options.repeats = repeats > 0 ? repeats : 20;
    options.seed = seed;
    options.symmetric = (symmetric != 0);
    const int affine = paulipolar::secant_dimension_estimate(format, k, options);
    std::optional<paulipolar::ZakReport> zak;
    if (k == 2) zak = paulipolar::zak_dichotomy(format, options);
    *out = copy_out(paulipolar::jsonio::secant_json(format, k, options, affine, zak));
  });
}

paulipolar_status paulipolar_singularity_json(const char* state_json,
                                              const char* chart_csv, char** out) {
  return guarded([&] {
    auto t = paulipolar::jsonio::state_tensor_from_json(required(state_json, "state"));
    const std::vector<int> chart = parse_csv_ints(chart_csv);
    auto germ = paulipolar::chart_localize(t, chart);
    auto analysis = paulipolar::singular_point_analysis(germ);
    std::optional<paulipolar::SingularityType> type;
    if (analysis.isolated) type = paulipolar::singularity_type(germ, analysis);
    *out = copy_out(paulipolar::jsonio::singularity_json(germ, analysis, type));
  });
}

}  // extern "C"
