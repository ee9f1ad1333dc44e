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

#include "zxcliff/flow.hpp"

#include <algorithm>
#include <set>

#include "zxcliff/diagram_json.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/passes.hpp"

namespace zxcliff {

namespace {

bool has_multi_edges_or_loops(const Diagram& d) {
  for (VertexId v : d.vertex_ids()) {
    const auto& n = d.neighbours(v);
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (n[i] == v || (i > 0 && n[i] == n[i - 1])) return true;
    }
  }
  return false;
}

std::string id_list(const std::vector<VertexId>& ids) {
  std::string s;
  for (VertexId v : ids) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

/// Layer-by-layer flow search, working back from the outputs.
std::optional<CausalFlow> causal_flow(const Diagram& d, std::string* why) {
  CausalFlow flow;
  std::set<VertexId> processed(d.outputs().begin(), d.outputs().end());
  std::set<VertexId> correctors;
  for (VertexId o : d.outputs()) {
    flow.layer[o] = 0;
    if (!d.is_input(o)) correctors.insert(o);
  }
  for (std::size_t k = 1;; ++k) {
    std::set<VertexId> newly, spent;
    for (VertexId c : correctors) {
      std::optional<VertexId> only;
      std::size_t open = 0;
      for (VertexId u : d.neighbours(c)) {
        if (!processed.contains(u)) {
          ++open;
          only = u;
        }
      }
      if (open != 1) continue;
      spent.insert(c);
      if (flow.successor.contains(*only)) continue;
      flow.successor[*only] = c;
      flow.layer[*only] = k;
      newly.insert(*only);
    }
    if (newly.empty()) break;
    processed.insert(newly.begin(), newly.end());
    for (VertexId c : spent) correctors.erase(c);
    for (VertexId u : newly) {
      if (!d.is_input(u)) correctors.insert(u);
    }
  }
  if (processed.size() != d.num_vertices()) {
    if (why) {
      std::vector<VertexId> stranded;
      for (VertexId v : d.vertex_ids()) {
        if (!processed.contains(v)) stranded.push_back(v);
      }
      *why = "no causal flow; unresolved vertices " + id_list(stranded);
    }
    return std::nullopt;
  }
  return flow;
}

std::optional<PathCover> path_cover_impl(const Diagram& d, std::string* why) {
  if (d.num_inputs() != d.num_outputs()) {
    if (why) *why = "inputs and outputs differ in number";
    return std::nullopt;
  }
  if (has_multi_edges_or_loops(d)) {
    if (why) *why = "parallel edges or self-loops";
    return std::nullopt;
  }
  auto flow = causal_flow(d, why);
  if (!flow) return std::nullopt;
  if (auto bad = check_flow(d, *flow)) {
    if (why) *why = *bad;
    return std::nullopt;
  }
  PathCover pc;
  pc.flow = std::move(*flow);
  for (std::size_t q = 0; q < d.num_inputs(); ++q) {
    std::vector<VertexId> path{d.inputs()[q]};
    while (!d.is_output(path.back())) {
      auto it = pc.flow.successor.find(path.back());
      if (it == pc.flow.successor.end() || path.size() > d.num_vertices()) {
        if (why) *why = "path from input " + std::to_string(q) + " does not end";
        return std::nullopt;
      }
      path.push_back(it->second);
    }
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (!pc.position.emplace(path[i], PathPosition{q, i}).second) {
        if (why) *why = "paths share vertex " + std::to_string(path[i]);
        return std::nullopt;
      }
    }
    pc.paths.push_back(std::move(path));
  }
  if (pc.position.size() != d.num_vertices()) {
    if (why) {
      std::vector<VertexId> stranded;
      for (VertexId v : d.vertex_ids()) {
        if (!pc.on_path(v)) stranded.push_back(v);
      }
      *why = "vertices on no path: " + id_list(stranded);
    }
    return std::nullopt;
  }
  return pc;
}

}  // namespace

std::optional<std::string> check_flow(const Diagram& d, const CausalFlow& flow) {
  for (VertexId v : d.vertex_ids()) {
    if (!flow.layer.contains(v)) return "vertex " + std::to_string(v) + " has no layer";
  }
  for (const auto& [v, fv] : flow.successor) {
    if (d.edge_multiplicity(v, fv) == 0) {
      return "successor of " + std::to_string(v) + " is not a neighbour";
    }
    if (!flow.precedes(v, fv)) return "successor of " + std::to_string(v) + " does not follow it";
    for (VertexId u : d.neighbours(fv)) {
      if (u != v && !flow.precedes(v, u)) {
        return "neighbour " + std::to_string(u) + " of the successor of " + std::to_string(v) +
               " comes before it";
      }
    }
  }
  for (VertexId v : d.vertex_ids()) {
    if (!d.is_output(v) && !flow.successor.contains(v)) {
      return "vertex " + std::to_string(v) + " has no successor";
    }
  }
  return std::nullopt;
}

PathCover find_path_cover(const Diagram& d) {
  std::string why;
  auto pc = path_cover_impl(d, &why);
  if (!pc) throw NotACircuit(why);
  return std::move(*pc);
}

std::optional<PathCover> try_path_cover(const Diagram& d) {
  return path_cover_impl(d, nullptr);
}

bool is_circuit_like(const Diagram& d) {
  return is_simple(d) && try_path_cover(d).has_value();
}

namespace {

void emit_phase(std::vector<Gate>& out, const VertexKind& k, std::size_t q) {
  if (k.type == VertexType::H) {
    out.push_back(Gate::single(GateType::H, q));
    return;
  }
  const bool z = k.type == VertexType::Z;
  const GateType quarter = z ? GateType::S : GateType::V;
  const GateType half = z ? GateType::Z : GateType::X;
  switch (k.phase.quarter_turns()) {
    case 1:
      out.push_back(Gate::single(quarter, q));
      break;
    case 2:
      out.push_back(Gate::single(half, q));
      break;
    case 3:
      out.push_back(Gate::single(half, q));
      out.push_back(Gate::single(quarter, q));
      break;
    default:
      break;
  }
}

}  // namespace

Circuit extract_circuit(const Diagram& d, const PathCover& pc) {
  const std::size_t n = pc.paths.size();
  Circuit c;
  c.width = std::max<std::size_t>(n, 1);

  // cross edges per vertex; a cross edge is consumed when both ends are current
  std::map<VertexId, std::multiset<VertexId>> pending;
  for (const auto& [a, b] : d.edges()) {
    const auto& pa = pc.position.at(a);
    const auto& pb = pc.position.at(b);
    const bool consecutive = pa.qubit == pb.qubit &&
                             (pa.index + 1 == pb.index || pb.index + 1 == pa.index);
    if (consecutive) continue;
    if (pa.qubit == pb.qubit) {
      throw NotACircuit("edge " + std::to_string(a) + "-" + std::to_string(b) +
                        " joins two points of one path");
    }
    if (!d.kind(a).is_spider() || !d.kind(b).is_spider() || d.type(a) == d.type(b)) {
      throw CrossEdgeColourError("edge " + std::to_string(a) + "-" +
                                 std::to_string(b) + " cannot be read as a CNOT");
    }
    pending[a].insert(b);
    pending[b].insert(a);
  }

  // pointer into each path; index 0 is the input boundary
  std::vector<std::size_t> at(n, 0);
  auto current = [&](std::size_t q) { return pc.paths[q][at[q]]; };

  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t q = 0; q < n; ++q) {
      // step forward past finished vertices, emitting phases on arrival
      while (at[q] + 1 < pc.paths[q].size() && pending[current(q)].empty()) {
        ++at[q];
        VertexId v = current(q);
        if (!d.kind(v).is_boundary()) emit_phase(c.gates, d.kind(v), q);
        progress = true;
      }
      VertexId u = current(q);
      auto& mine = pending[u];
      for (auto it = mine.begin(); it != mine.end();) {
        VertexId w = *it;
        const std::size_t r = pc.position.at(w).qubit;
        if (current(r) != w) {
          ++it;
          continue;
        }
        const bool u_is_z = d.type(u) == VertexType::Z;
        c.gates.push_back(u_is_z ? Gate::cnot(q, r) : Gate::cnot(r, q));
        pending[w].erase(pending[w].find(u));
        it = mine.erase(it);
        progress = true;
      }
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (at[q] + 1 != pc.paths[q].size()) {
      throw NotACircuit("extraction deadlocked at vertex " + std::to_string(current(q)));
    }
  }

  // perm[q]: output slot reached by qubit q
  std::vector<std::size_t> perm(n);
  for (std::size_t q = 0; q < n; ++q) {
    const VertexId out = pc.paths[q].back();
    perm[q] = static_cast<std::size_t>(
        std::find(d.outputs().begin(), d.outputs().end(), out) - d.outputs().begin());
  }
  // holder[s]: qubit currently sitting on wire s
  std::vector<std::size_t> holder(n);
  for (std::size_t s = 0; s < n; ++s) holder[s] = s;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (perm[holder[t]] == s) {
        c.gates.push_back(Gate::swap(s, t));
        std::swap(holder[s], holder[t]);
        break;
      }
    }
  }
  return c;
}

const std::optional<PathCover>& PathCoverCache::get(const Diagram& d) {
  std::string key = dump_diagram(d);
  auto it = entries_.find(key);
  if (it == entries_.end()) it = entries_.emplace(std::move(key), try_path_cover(d)).first;
  return it->second;
}

}  // namespace zxcliff
