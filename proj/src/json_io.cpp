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

#include "paulipolar/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace paulipolar::jsonio {

using json = nlohmann::ordered_json;

namespace {

// nlohmann's exceptions do not derive from std::invalid_argument; rethrow so
// the C boundary reports malformed input as such.
json parse_json_input(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

template <typename Fn>
auto with_json_errors(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw std::invalid_argument(e.what());
  }
}

json point_strings(const PolarSpace& space, const std::vector<uint32_t>& pts) {
  json out = json::array();
  for (uint32_t v : pts) out.push_back(space.point_str(v));
  return out;
}

json hyperplane_json_obj(const PolarSpace& space, const Hyperplane& h) {
  json out;
  out["type"] = hyperplane_type_name(h.type);
  out["q"] = h.q == 0 ? std::string(space.n_qubits(), 'I') : space.point_str(h.q);
  out["size"] = h.points.count();
  out["points"] = point_strings(space, h.points.values());
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string pauli_json(const PauliOperator& op) {
  json out;
  out["op"] = op.str();
  out["phase_exponent"] = op.phase().exponent();
  json bits = json::array();
  for (uint32_t j = 0; j < op.width(); ++j) {
    bits.push_back(op.vector().mu(j));
    bits.push_back(op.vector().nu(j));
  }
  out["bits"] = bits;
  return out.dump();
}

PauliOperator pauli_from_json(const std::string& text) {
  return with_json_errors([&] {
    json in = parse_json_input(text);
    if (in.is_string()) return parse_pauli(in.get<std::string>());
    if (in.contains("op")) return parse_pauli(in.at("op").get<std::string>());
    const auto bits = in.at("bits").get<std::vector<int>>();
    if (bits.size() % 2 != 0 || bits.empty()) {
      throw std::invalid_argument("bits array must hold 2N entries");
    }
    uint32_t packed = 0;
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != 0 && bits[i] != 1) {
        throw std::invalid_argument("bits entries must be 0 or 1");
      }
      packed |= static_cast<uint32_t>(bits[i]) << i;
    }
    const int lambda = in.contains("phase_exponent")
                           ? in.at("phase_exponent").get<int>()
                           : 0;
    return PauliOperator(Phase(lambda),
                         SymplecticVector(static_cast<uint32_t>(bits.size() / 2), packed));
  });
}

std::string pauli_product_json(const PauliOperator& a, const PauliOperator& b) {
  const PauliOperator product = a * b;
  json out;
  out["a"] = a.str();
  out["b"] = b.str();
  out["product"] = product.str();
  out["phase_exponent"] = product.phase().exponent();
  json bits = json::array();
  for (uint32_t j = 0; j < product.width(); ++j) {
    bits.push_back(product.vector().mu(j));
    bits.push_back(product.vector().nu(j));
  }
  out["bits"] = bits;
  out["commute"] = symplectic_form(a.vector(), b.vector()) == 0;
  return out.dump();
}

std::string space_json(const PolarSpace& space) {
  json out;
  out["n"] = space.n_qubits();
  out["point_count"] = space.point_count();
  out["line_count"] = space.lines().size();
  if (space.planes_materialized()) {
    out["plane_count"] = space.planes().size();
  } else {
    out["plane_count"] = nullptr;
  }
  out["points"] = point_strings(space, space.points());
  json lines = json::array();
  for (const auto& [a, b, c] : space.lines()) {
    lines.push_back({space.point_str(a), space.point_str(b), space.point_str(c)});
  }
  out["lines"] = lines;
  if (space.planes_materialized()) {
    json planes = json::array();
    for (const auto& plane : space.planes()) {
      json p = json::array();
      for (uint32_t v : plane) p.push_back(space.point_str(v));
      planes.push_back(p);
    }
    out["planes"] = planes;
  }
  return out.dump();
}

std::string space_dot(const PolarSpace& space) {
  std::ostringstream os;
  os << "graph polar_space {\n  node [shape=ellipse];\n";
  for (uint32_t v : space.points()) {
    os << "  " << quoted(space.point_str(v)) << ";\n";
  }
  size_t i = 0;
  for (const auto& [a, b, c] : space.lines()) {
    const std::string ln = "line" + std::to_string(i++);
    os << "  " << ln << " [shape=point,label=\"\"];\n";
    for (uint32_t v : {a, b, c}) {
      os << "  " << ln << " -- " << quoted(space.point_str(v)) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string hyperplane_census_json(const PolarSpace& space) {
  HyperplaneCensus census = hyperplane_census(space);
  json out;
  out["perp"] = census.perp;
  out["hyperbolic"] = census.hyperbolic;
  out["elliptic"] = census.elliptic;
  out["total"] = census.total();
  return out.dump();
}

std::string hyperplane_list_json(const PolarSpace& space) {
  json out = json::array();
  for (const Hyperplane& h : all_hyperplanes(space)) {
    // Skips the empty elliptic zero set of the degenerate N = 1 space.
    if (!is_hyperplane(space, h.points)) continue;
    out.push_back(hyperplane_json_obj(space, h));
  }
  return out.dump();
}

std::string grid_gq21_census_json() {
  PointLineGeometry grid = grid_gq21();
  auto hyperplanes = enumerate_hyperplanes_subsets(grid);
  int with_line = 0, ovoids = 0;
  for (const auto& subset : hyperplanes) {
    (subset_contains_line(grid, subset) ? with_line : ovoids) += 1;
  }
  json out;
  out["perp"] = with_line;
  out["ovoid"] = ovoids;
  out["total"] = hyperplanes.size();
  return out.dump();
}

std::string veldkamp_census_json(const PolarSpace& space) {
  VeldkampCensus census = veldkamp_lines(space);
  json out;
  out["hyperplanes"] = census.hyperplanes;
  out["lines"] = census.total;
  json types;
  for (const auto& [type, count] : census.counts) {
    types[veldkamp_line_type_name(type)] = count;
  }
  out["types"] = types;
  return out.dump();
}

namespace {

json configuration_obj(const Configuration& config, std::optional<bool> oracle_verified) {
  json out;
  json points = json::array();
  for (const auto& op : config.points) points.push_back(op.str());
  out["points"] = points;
  json contexts = json::array();
  for (const auto& ctx : config.contexts) {
    json c;
    json ops = json::array();
    for (uint32_t id : ctx.point_ids) ops.push_back(config.points[id].str());
    c["operators"] = ops;
    c["sign"] = ctx.sign;
    contexts.push_back(c);
  }
  out["contexts"] = contexts;
  out["magic"] = is_magic(config);
  if (oracle_verified.has_value()) out["oracle_verified"] = *oracle_verified;
  return out;
}

}  // namespace

std::string configuration_json(const Configuration& config,
                               std::optional<bool> oracle_verified) {
  return configuration_obj(config, oracle_verified).dump();
}

std::string configuration_dot(const Configuration& config) {
  std::ostringstream os;
  os << "graph configuration {\n  node [shape=ellipse];\n";
  for (const auto& op : config.points) {
    os << "  " << quoted(op.str()) << ";\n";
  }
  for (size_t i = 0; i < config.contexts.size(); ++i) {
    const auto& ctx = config.contexts[i];
    const std::string cn = "ctx" + std::to_string(i);
    os << "  " << cn << " [shape=box,label=\"" << (ctx.sign > 0 ? "+" : "-")
       << "\"];\n";
    for (uint32_t id : ctx.point_ids) {
      os << "  " << cn << " -- " << quoted(config.points[id].str()) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Configuration configuration_from_json(const std::string& text) {
  return with_json_errors([&] {
  json in = parse_json_input(text);
  Configuration config;
  std::vector<std::string> point_labels;
  auto id_of = [&](const std::string& label) -> uint32_t {
    PauliOperator op = parse_pauli(label);
    for (uint32_t i = 0; i < config.points.size(); ++i) {
      if (config.points[i] == op) return i;
    }
    config.points.push_back(op);
    return static_cast<uint32_t>(config.points.size() - 1);
  };
  if (in.contains("points")) {
    for (const auto& p : in.at("points")) id_of(p.get<std::string>());
  }
  if (!in.contains("contexts")) {
    throw std::invalid_argument("configuration JSON needs a contexts array");
  }
  for (const auto& c : in.at("contexts")) {
    Configuration::ContextRef ref;
    std::vector<PauliOperator> ops;
    for (const auto& label : c.at("operators")) {
      const uint32_t id = id_of(label.get<std::string>());
      ref.point_ids.push_back(id);
      ops.push_back(config.points[id]);
    }
    ref.sign = c.contains("sign") ? c.at("sign").get<int>() : context_sign(ops);
    config.contexts.push_back(std::move(ref));
  }
  config.validate();
  return config;
  });
}

std::string grids_json(const std::vector<Configuration>& grids,
                       std::optional<bool> oracle_verified) {
  json out;
  out["count"] = grids.size();
  bool all_magic = true;
  for (const auto& g : grids) all_magic = all_magic && is_magic(g);
  out["all_magic"] = all_magic;
  if (oracle_verified.has_value()) out["oracle_verified"] = *oracle_verified;
  json list = json::array();
  for (const auto& g : grids) list.push_back(configuration_obj(g, std::nullopt));
  out["grids"] = list;
  return out.dump();
}

std::string pentagram_census_json(const PentagramCensus& census) {
  json out;
  out["count"] = census.count;
  out["all_magic"] = census.all_magic;
  if (!census.configurations.empty()) {
    json list = json::array();
    for (const auto& config : census.configurations) {
      list.push_back(configuration_obj(config, std::nullopt));
    }
    out["configurations"] = list;
  }
  return out.dump();
}

PointSet point_set_from_json(const PolarSpace& space, const std::string& text) {
  return with_json_errors([&] {
    json in = parse_json_input(text);
    const json& arr = in.is_array() ? in : in.at("points");
    PointSet out = space.empty_set();
    for (const auto& label : arr) {
      out.set(space.point_from_str(label.get<std::string>()));
    }
    return out;
  });
}

std::string game_value_json(const GameValue& value, bool magic) {
  json out;
  out["value"] = value.str();
  out["best_wins"] = value.best_wins;
  out["queries"] = value.queries;
  out["magic"] = magic;
  return out.dump();
}

std::string magic_line_json(const PolarSpace& w52, const MagicVeldkampLine& line,
                            bool is_doily, const PointSet& doily_part,
                            const PointSet& rest_part, uint64_t pentagrams_in_rest) {
  json out;
  out["perp"] = hyperplane_json_obj(w52, line.perp);
  out["elliptic"] = hyperplane_json_obj(w52, line.elliptic);
  out["hyperbolic"] = hyperplane_json_obj(w52, line.hyperbolic);
  out["core"] = point_strings(w52, line.core);
  out["core_is_doily"] = is_doily;
  json partition;
  partition["doily"] = point_strings(w52, doily_part.values());
  partition["complement"] = point_strings(w52, rest_part.values());
  out["partition"] = partition;
  out["pentagrams_in_complement"] = pentagrams_in_rest;
  return out.dump();
}

std::string weight_diagram_json(const PolarSpace& w52, std::span<const uint32_t> roots,
                                const WeightDiagram& diagram) {
  json out;
  out["highest"] = w52.point_str(diagram.highest);
  json rs = json::array();
  for (uint32_t r : roots) rs.push_back(w52.point_str(r));
  out["roots"] = rs;
  const auto& duads = all_duads();
  json nodes = json::array();
  for (int d = 0; d < 15; ++d) {
    json node;
    node["duad"] = {duads[d].a, duads[d].b};
    node["operator"] = w52.point_str(diagram.node_for_duad[d]);
    nodes.push_back(node);
  }
  out["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : diagram.edges) {
    json edge;
    edge["from"] = {duads[e.from_duad].a, duads[e.from_duad].b};
    edge["to"] = {duads[e.to_duad].a, duads[e.to_duad].b};
    edge["root"] = e.root;
    edges.push_back(edge);
  }
  out["edges"] = edges;
  return out.dump();
}

std::string weight_diagram_dot(const PolarSpace& w52, std::span<const uint32_t> roots,
                               const WeightDiagram& diagram) {
  std::ostringstream os;
  os << "digraph weight_diagram {\n  rankdir=TB;\n  node [shape=ellipse];\n";
  for (uint32_t v : diagram.node_for_duad) {
    os << "  " << quoted(w52.point_str(v)) << ";\n";
  }
  for (const auto& e : diagram.edges) {
    os << "  " << quoted(w52.point_str(diagram.node_for_duad[e.from_duad])) << " -> "
       << quoted(w52.point_str(diagram.node_for_duad[e.to_duad])) << " [label=\"a"
       << int(e.root) << " (" << w52.point_str(roots[e.root - 1]) << ")\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string pfaffian_check_json(const PfaffianCheck& check, double pf_det_rel_err) {
  json out;
  out["samples"] = check.samples;
  out["constant_re"] = check.constant.real();
  out["constant_im"] = check.constant.imag();
  out["relative_spread"] = check.relative_spread;
  out["pf_squared_vs_det_rel_err"] = pf_det_rel_err;
  return out.dump();
}

StateTensor state_tensor_from_json(const std::string& text) {
  return with_json_errors([&] {
  json in = parse_json_input(text);
  if (!in.contains("format")) {
    throw std::invalid_argument("state JSON needs a format array");
  }
  std::vector<int> format = in.at("format").get<std::vector<int>>();
  StateTensor t = StateTensor::zeros(format);
  const auto re = in.at("re").get<std::vector<double>>();
  if (re.size() != t.amplitudes.size()) {
    throw std::invalid_argument("re length does not match the format");
  }
  std::vector<double> im(t.amplitudes.size(), 0.0);
  if (in.contains("im")) {
    im = in.at("im").get<std::vector<double>>();
    if (im.size() != t.amplitudes.size()) {
      throw std::invalid_argument("im length does not match the format");
    }
  }
  for (size_t i = 0; i < t.amplitudes.size(); ++i) {
    t.amplitudes[i] = {re[i], im[i]};
  }
  return t;
  });
}

std::string classification_json(const SloccClassification& result) {
  json out;
  out["class"] = slocc_class_name(result.slocc_class);
  out["hyperdet_abs"] = result.hyperdet_abs;
  out["hyperdet_abs_normalized"] = result.hyperdet_abs_normalized;
  out["flattening_ranks"] = result.ranks;
  out["norm"] = result.norm;
  return out.dump();
}

std::string secant_json(std::span<const int> format, int k, const SecantOptions& options,
                        int affine_dimension, const std::optional<ZakReport>& zak) {
  json out;
  out["format"] = std::vector<int>(format.begin(), format.end());
  out["k"] = k;
  out["symmetric"] = options.symmetric;
  out["repeats"] = options.repeats;
  out["seed"] = options.seed;
  out["affine_dimension"] = affine_dimension;
  out["projective_dimension"] = affine_dimension - 1;
  if (zak.has_value()) {
    json z;
    z["x_dimension"] = zak->x_dimension;
    z["expected_projective"] = zak->expected_projective;
    z["actual_projective"] = zak->actual_projective;
    z["ambient_projective"] = zak->ambient_projective;
    z["tau_equals_sigma2"] = zak->tau_equals_sigma2;
    out["zak"] = z;
  }
  return out.dump();
}

std::string singularity_json(const LocalGerm& germ, const SingularityAnalysis& analysis,
                             std::optional<SingularityType> type) {
  json out;
  out["variables"] = germ.variables;
  out["polynomial"] = germ.poly.str(germ.variables);
  out["is_singular"] = analysis.is_singular;
  out["isolated"] = analysis.isolated;
  out["hessian_corank"] = analysis.hessian_corank;
  out["milnor_number"] = analysis.milnor_number;
  out["truncation_used"] = analysis.truncation_used;
  if (type.has_value()) {
    out["type"] = singularity_type_name(*type);
  } else {
    out["type"] = nullptr;
  }
  return out.dump();
}

}  // namespace paulipolar::jsonio
