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

#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  paulipolar_string_free(s);
  return out;
}


}  // namespace

TEST_CASE("space handles and censuses through the C API") {
  paulipolar_space* space = nullptr;
  REQUIRE(paulipolar_space_build(2, -1, &space) == PAULIPOLAR_OK);
  CHECK(paulipolar_space_point_count(space) == 15);
  CHECK(paulipolar_space_line_count(space) == 15);
  CHECK(paulipolar_space_plane_count(space) == -1);  // no planes at N = 2

  char* out = nullptr;
  REQUIRE(paulipolar_hyperplane_census_json(space, &out) == PAULIPOLAR_OK);
  json census = json::parse(out);
  paulipolar_string_free(out);
  CHECK(census["perp"] == 15);
  CHECK(census["hyperbolic"] == 10);
  CHECK(census["elliptic"] == 6);
  CHECK(census["total"] == 31);

  REQUIRE(paulipolar_veldkamp_census_json(space, &out) == PAULIPOLAR_OK);
  json veldkamp = json::parse(out);
  paulipolar_string_free(out);
  CHECK(veldkamp["lines"] == 155);
  CHECK(veldkamp["types"].size() == 5);

  paulipolar_space_free(space);
}

TEST_CASE("invalid space arguments set the error message") {
  paulipolar_space* space = nullptr;
  CHECK(paulipolar_space_build(9, -1, &space) == PAULIPOLAR_ERR_INVALID_ARGUMENT);
  CHECK(std::string(paulipolar_last_error()).find("qubits") != std::string::npos);
}

TEST_CASE("canonical configurations via the C API") {
  char* out = nullptr;
  REQUIRE(paulipolar_mermin_square_json(1, &out) == PAULIPOLAR_OK);
  json square = json::parse(out);
  paulipolar_string_free(out);
  CHECK(square["magic"] == true);
  CHECK(square["oracle_verified"] == true);
  CHECK(square["points"].size() == 9);
  CHECK(square["contexts"].size() == 6);

  // The square JSON round-trips into the game evaluator.
  REQUIRE(paulipolar_game_value_json(square.dump().c_str(), &out) == PAULIPOLAR_OK);
  json game = json::parse(out);
  paulipolar_string_free(out);
  CHECK(game["value"] == "8/9");
  CHECK(game["magic"] == true);

  REQUIRE(paulipolar_mermin_pentagram_json(1, &out) == PAULIPOLAR_OK);
  json pentagram = json::parse(out);
  paulipolar_string_free(out);
  CHECK(pentagram["magic"] == true);
  CHECK(pentagram["points"].size() == 10);

  REQUIRE(paulipolar_configuration_dot(pentagram.dump().c_str(), &out) == PAULIPOLAR_OK);
  std::string graph = take(out);
  CHECK(graph.find("graph configuration") != std::string::npos);
  CHECK(graph.find("XXX") != std::string::npos);
}

TEST_CASE("pentagram enumeration through the C API") {
  char* out = nullptr;
  REQUIRE(paulipolar_enumerate_pentagrams_json(nullptr, 0, 2, &out) == PAULIPOLAR_OK);
  json census = json::parse(out);
  paulipolar_string_free(out);
  CHECK(census["count"] == 12096);
  CHECK(census["all_magic"] == true);

  // Restriction to the 20 symmetric operators off the core doily.
  REQUIRE(paulipolar_magic_line_json(&out) == PAULIPOLAR_OK);
  json line = json::parse(out);
  paulipolar_string_free(out);
  CHECK(line["core"].size() == 15);
  CHECK(line["core_is_doily"] == true);
  CHECK(line["pentagrams_in_complement"] == 12);

  const std::string within = line["partition"]["complement"].dump();
  REQUIRE(paulipolar_enumerate_pentagrams_json(within.c_str(), 1, 0, &out) ==
          PAULIPOLAR_OK);
  json inner = json::parse(out);
  paulipolar_string_free(out);
  CHECK(inner["count"] == 12);
  CHECK(inner["configurations"].size() == 12);
}

TEST_CASE("weight diagram and pfaffian check through the C API") {
  char* out = nullptr;
  REQUIRE(paulipolar_weight_diagram_json(&out) == PAULIPOLAR_OK);
  json diagram = json::parse(out);
  paulipolar_string_free(out);
  CHECK(diagram["highest"] == "ZIZ");
  CHECK(diagram["roots"].size() == 5);
  CHECK(diagram["nodes"].size() == 15);
  CHECK(diagram["edges"].size() == 20);

  REQUIRE(paulipolar_pfaffian_check_json(20, 0, &out) == PAULIPOLAR_OK);
  json check = json::parse(out);
  paulipolar_string_free(out);
  CHECK(check["samples"] == 20);
  CHECK(check["relative_spread"].get<double>() <= 1e-9);
  CHECK(std::abs(std::abs(check["constant_re"].get<double>()) - 48.0) <= 1e-6);
  CHECK(check["pf_squared_vs_det_rel_err"].get<double>() <= 1e-9);
}

TEST_CASE("slocc classification through the C API") {
  const std::string ghz =
      R"({"format":[2,2,2],"re":[0.70710678118654752,0,0,0,0,0,0,0.70710678118654752]})";
  char* out = nullptr;
  REQUIRE(paulipolar_slocc_classify_json(ghz.c_str(), 0, &out) == PAULIPOLAR_OK);
  json result = json::parse(out);
  paulipolar_string_free(out);
  CHECK(result["class"] == "GHZ");
  CHECK(std::abs(result["hyperdet_abs_normalized"].get<double>() - 0.25) <= 1e-9);

  CHECK(paulipolar_slocc_classify_json("{\"format\":[2,2,2]}", 0, &out) ==
        PAULIPOLAR_ERR_INVALID_ARGUMENT);
  CHECK(paulipolar_slocc_classify_json("not json", 0, &out) != PAULIPOLAR_OK);
}

TEST_CASE("secant dimension and singularity through the C API") {
  char* out = nullptr;
  REQUIRE(paulipolar_secant_dimension_json("2,2,2", 2, 20, 0, 0, &out) == PAULIPOLAR_OK);
  json secant = json::parse(out);
  paulipolar_string_free(out);
  CHECK(secant["affine_dimension"] == 8);
  CHECK(secant["zak"]["tau_equals_sigma2"] == false);

  REQUIRE(paulipolar_secant_dimension_json("2,2", 2, 20, 0, 0, &out) == PAULIPOLAR_OK);
  json plane = json::parse(out);
  paulipolar_string_free(out);
  CHECK(plane["affine_dimension"] == 4);
  CHECK(plane["zak"]["tau_equals_sigma2"] == true);

  const std::string d4 =
      R"({"format":[2,2,2,2],"re":[1,0,0,0,0,0,0,0,0,0,0,1,0,1,1,0]})";
  REQUIRE(paulipolar_singularity_json(d4.c_str(), "0,1,1,1", &out) == PAULIPOLAR_OK);
  json sing = json::parse(out);
  paulipolar_string_free(out);
  CHECK(sing["hessian_corank"] == 2);
  CHECK(sing["milnor_number"] == 4);
  CHECK(sing["type"] == "D4");

  CHECK(paulipolar_singularity_json(d4.c_str(), "0,1,1", &out) ==
        PAULIPOLAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pauli arithmetic through the C API") {
  char* out = nullptr;
  REQUIRE(paulipolar_pauli_json("-iYI", &out) == PAULIPOLAR_OK);
  json op = json::parse(take(out));
  CHECK(op["op"] == "-iYI");
  CHECK(op["phase_exponent"] == 2);
  CHECK(op["bits"] == json::array({1, 1, 0, 0}));

  REQUIRE(paulipolar_pauli_multiply_json("X", "Z", &out) == PAULIPOLAR_OK);
  json prod = json::parse(take(out));
  CHECK(prod["product"] == "-iY");
  CHECK(prod["commute"] == false);

  REQUIRE(paulipolar_pauli_multiply_json("XX", "ZZ", &out) == PAULIPOLAR_OK);
  json prod2 = json::parse(take(out));
  CHECK(prod2["product"] == "-YY");
  CHECK(prod2["commute"] == true);

  CHECK(paulipolar_pauli_json("XQ", &out) == PAULIPOLAR_ERR_PARSE);
  CHECK(paulipolar_pauli_multiply_json("X", "XX", &out) ==
        PAULIPOLAR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("status names cover the enum") {
  CHECK(std::string(paulipolar_status_name(PAULIPOLAR_OK)) == "ok");
  CHECK(std::string(paulipolar_status_name(PAULIPOLAR_ERR_PARSE)) == "parse error");
  CHECK(std::string(paulipolar_version()).size() > 0);
}
