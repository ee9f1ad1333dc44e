// Copyright 2026 The zxcliff Authors
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

#include "zxcliff/diagram_json.hpp"

#include "zxcliff/errors.hpp"

namespace zxcliff {

using nlohmann::json;

namespace {

const char* kind_tag(VertexType t) {
  switch (t) {
    case VertexType::Z:
      return "Z";
    case VertexType::X:
      return "X";
    case VertexType::H:
      return "H";
    case VertexType::Boundary:
      return "B";
  }
  return "?";
}

VertexKind kind_from_json(const json& v) {
  const std::string tag = v.at("kind").get<std::string>();
  if (tag == "B") return VertexKind::boundary();
  if (tag == "H") return VertexKind::h();
  int phase = v.contains("phase") ? v.at("phase").get<int>() : 0;
  if (phase < 0 || phase > 3) {
    throw InvalidDiagramError("phase out of range: " + std::to_string(phase));
  }
  if (tag == "Z") return VertexKind::z(Phase(phase));
  if (tag == "X") return VertexKind::x(Phase(phase));
  throw InvalidDiagramError("unknown vertex kind '" + tag + "'");
}

}  // namespace

json diagram_to_json(const Diagram& d) {
  json vertices = json::array();
  for (VertexId v : d.vertex_ids()) {
    const VertexKind& k = d.kind(v);
    json entry = {{"id", v}, {"kind", kind_tag(k.type)}};
    if (k.is_spider()) entry["phase"] = k.phase.quarter_turns();
    vertices.push_back(std::move(entry));
  }
  json edges = json::array();
  for (const auto& [a, b] : d.edges()) edges.push_back({a, b});
  return json{{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"inputs", d.inputs()},
              {"outputs", d.outputs()}};
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  try {
    for (const auto& v : j.at("vertices")) {
      d.add_vertex_with_id(v.at("id").get<VertexId>(), kind_from_json(v));
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidDiagramError("edge must be a pair of ids");
      }
      d.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    d.set_inputs(j.at("inputs").get<std::vector<VertexId>>());
    d.set_outputs(j.at("outputs").get<std::vector<VertexId>>());
  } catch (const json::exception& ex) {
    throw InvalidDiagramError(std::string("malformed diagram JSON: ") + ex.what());
  }
  d.validate();
  return d;
}

std::string dump_diagram(const Diagram& d) { return diagram_to_json(d).dump(); }

Diagram parse_diagram(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw InvalidDiagramError(std::string("invalid JSON: ") + ex.what());
  }
  return diagram_from_json(j);
}

}  // namespace zxcliff
