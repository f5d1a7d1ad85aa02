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

#ifndef PAULIPOLAR_JSON_IO_HPP
#define PAULIPOLAR_JSON_IO_HPP

#include <optional>
#include <string>

#include "paulipolar/contextuality.hpp"
#include "paulipolar/entanglement.hpp"
#include "paulipolar/magic_line.hpp"
#include "paulipolar/pfaffian.hpp"
#include "paulipolar/polar_space.hpp"

// Serialization of the library structures to machine-readable JSON and DOT.
// Key order is fixed, so identical inputs always print identical bytes.
namespace paulipolar::jsonio {

// {"op": text, "phase_exponent": lambda, "bits": [mu1, nu1, ...]}.
std::string pauli_json(const PauliOperator& op);
// Accepts the same object (the "op" text wins when both encodings appear).
PauliOperator pauli_from_json(const std::string& text);
// Product a*b in the operator JSON form plus a "commute" flag.
std::string pauli_product_json(const PauliOperator& a, const PauliOperator& b);

std::string space_json(const PolarSpace& space);
std::string space_dot(const PolarSpace& space);

std::string hyperplane_census_json(const PolarSpace& space);
std::string hyperplane_list_json(const PolarSpace& space);
std::string grid_gq21_census_json();
std::string veldkamp_census_json(const PolarSpace& space);

std::string configuration_json(const Configuration& config,
                               std::optional<bool> oracle_verified);
std::string configuration_dot(const Configuration& config);
Configuration configuration_from_json(const std::string& text);

std::string grids_json(const std::vector<Configuration>& grids,
                       std::optional<bool> oracle_verified);
std::string pentagram_census_json(const PentagramCensus& census);
PointSet point_set_from_json(const PolarSpace& space, const std::string& text);
std::string game_value_json(const GameValue& value, bool magic);

std::string magic_line_json(const PolarSpace& w52, const MagicVeldkampLine& line,
                            bool is_doily, const PointSet& doily_part,
                            const PointSet& rest_part, uint64_t pentagrams_in_rest);
std::string weight_diagram_json(const PolarSpace& w52,
                                std::span<const uint32_t> roots,
                                const WeightDiagram& diagram);
std::string weight_diagram_dot(const PolarSpace& w52,
                               std::span<const uint32_t> roots,
                               const WeightDiagram& diagram);
std::string pfaffian_check_json(const PfaffianCheck& check, double pf_det_rel_err);

StateTensor state_tensor_from_json(const std::string& text);
std::string classification_json(const SloccClassification& result);
std::string secant_json(std::span<const int> format, int k, const SecantOptions& options,
                        int affine_dimension, const std::optional<ZakReport>& zak);
std::string singularity_json(const LocalGerm& germ, const SingularityAnalysis& analysis,
                             std::optional<SingularityType> type);

}  // namespace paulipolar::jsonio

#endif
