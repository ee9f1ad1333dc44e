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

#include "zxcliff/diagram.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "zxcliff/errors.hpp"

namespace zxcliff {

VertexType opposite_colour(VertexType t) {
  switch (t) {
    case VertexType::Z:
      return VertexType::X;
    case VertexType::X:
      return VertexType::Z;
    default:
      return t;
  }
}

std::string to_string(const VertexKind& kind) {
  switch (kind.type) {
    case VertexType::Z:
      return "Z(" + std::to_string(kind.phase.quarter_turns()) + ")";
    case VertexType::X:
      return "X(" + std::to_string(kind.phase.quarter_turns()) + ")";
    case VertexType::H:
      return "H";
    case VertexType::Boundary:
      return "B";
  }
  return "?";
}

Diagram Diagram::identity(std::size_t wires) {
  Diagram d;
  for (std::size_t i = 0; i < wires; ++i) d.add_input();
  for (std::size_t i = 0; i < wires; ++i) {
    VertexId out = d.add_output();
    d.add_edge(d.inputs()[i], out);
  }
  return d;
}

VertexId Diagram::next_id() const {
  return vertices_.empty() ? 0 : vertices_.rbegin()->first + 1;
}

VertexId Diagram::add_vertex(VertexKind kind) {
  VertexId id = next_id();
  add_vertex_with_id(id, kind);
  return id;
}

void Diagram::add_vertex_with_id(VertexId id, VertexKind kind) {
  if (vertices_.contains(id)) {
    throw InvalidDiagramError("duplicate vertex id " + std::to_string(id));
  }
  if (!kind.is_spider()) kind.phase = Phase{};
  vertices_.emplace(id, kind);
  adjacency_.emplace(id, std::vector<VertexId>{});
}

VertexId Diagram::add_input() {
  VertexId v = add_vertex(VertexKind::boundary());
  inputs_.push_back(v);
  return v;
}

VertexId Diagram::add_output() {
  VertexId v = add_vertex(VertexKind::boundary());
  outputs_.push_back(v);
  return v;
}

static void sorted_insert(std::vector<VertexId>& list, VertexId v) {
  list.insert(std::upper_bound(list.begin(), list.end(), v), v);
}

static bool sorted_erase_one(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

void Diagram::add_edge(VertexId a, VertexId b) {
  if (!contains(a) || !contains(b)) {
    throw InvalidDiagramError("edge endpoint is not a vertex");
  }
  sorted_insert(adjacency_[a], b);
  sorted_insert(adjacency_[b], a);
}

bool Diagram::remove_edge(VertexId a, VertexId b) {
  if (!contains(a) || !contains(b)) return false;
  if (a == b) {
    auto& list = adjacency_[a];
    if (std::count(list.begin(), list.end(), a) < 2) return false;
    sorted_erase_one(list, a);
    sorted_erase_one(list, a);
    return true;
  }
  if (!sorted_erase_one(adjacency_[a], b)) return false;
  sorted_erase_one(adjacency_[b], a);
  return true;
}

void Diagram::remove_vertex(VertexId v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) return;
  for (VertexId w : it->second) {
    if (w != v) sorted_erase_one(adjacency_[w], v);
  }
  adjacency_.erase(it);
  vertices_.erase(v);
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

void Diagram::set_phase(VertexId v, Phase p) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw InvalidDiagramError("no such vertex");
  if (it->second.is_spider()) it->second.phase = p;
}

void Diagram::set_kind(VertexId v, VertexKind kind) {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) throw InvalidDiagramError("no such vertex");
  if (!kind.is_spider()) kind.phase = Phase{};
  it->second = kind;
}

void Diagram::set_inputs(std::vector<VertexId> ids) { inputs_ = std::move(ids); }
void Diagram::set_outputs(std::vector<VertexId> ids) { outputs_ = std::move(ids); }

const VertexKind& Diagram::kind(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw InvalidDiagramError("no such vertex " + std::to_string(v));
  }
  return it->second;
}

const std::vector<VertexId>& Diagram::neighbours(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) {
    throw InvalidDiagramError("no such vertex " + std::to_string(v));
  }
  return it->second;
}

std::size_t Diagram::edge_multiplicity(VertexId a, VertexId b) const {
  const auto& list = neighbours(a);
  auto range = std::equal_range(list.begin(), list.end(), b);
  auto n = static_cast<std::size_t>(range.second - range.first);
  return a == b ? n / 2 : n;
}

std::vector<VertexId> Diagram::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(vertices_.size());
  for (const auto& [id, kind] : vertices_) ids.push_back(id);
  return ids;
}

std::vector<VertexId> Diagram::interior_ids() const {
  std::vector<VertexId> ids;
  for (const auto& [id, kind] : vertices_) {
    if (!kind.is_boundary()) ids.push_back(id);
  }
  return ids;
}

std::size_t Diagram::num_interior() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(),
                    [](const auto& entry) { return !entry.second.is_boundary(); }));
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> result;
  for (const auto& [u, list] : adjacency_) {
    bool skip_loop_twin = false;
    for (VertexId w : list) {
      if (w < u) continue;
      if (w == u) {
        // each loop appears twice in the list
        skip_loop_twin = !skip_loop_twin;
        if (!skip_loop_twin) continue;
      }
      result.emplace_back(u, w);
    }
  }
  return result;
}

std::size_t Diagram::num_edges() const {
  std::size_t total = 0;
  for (const auto& [u, list] : adjacency_) total += list.size();
  return total / 2;
}

bool Diagram::is_input(VertexId v) const {
  return std::find(inputs_.begin(), inputs_.end(), v) != inputs_.end();
}

bool Diagram::is_output(VertexId v) const {
  return std::find(outputs_.begin(), outputs_.end(), v) != outputs_.end();
}

void Diagram::validate() const {
  std::set<VertexId> io;
  for (VertexId v : inputs_) {
    if (!io.insert(v).second) throw InvalidDiagramError("boundary listed twice");
  }
  for (VertexId v : outputs_) {
    if (!io.insert(v).second) throw InvalidDiagramError("boundary listed twice");
  }
  for (const auto& [id, kind] : vertices_) {
    std::size_t deg = adjacency_.at(id).size();
    if (kind.is_boundary()) {
      if (!io.contains(id)) {
        throw InvalidDiagramError("boundary " + std::to_string(id) +
                                  " is neither input nor output");
      }
      if (deg != 1) {
        throw InvalidDiagramError("boundary " + std::to_string(id) +
                                  " has degree " + std::to_string(deg));
      }
    } else {
      if (io.contains(id)) {
        throw InvalidDiagramError("interior vertex listed as boundary");
      }
      if (kind.type == VertexType::H && deg != 2) {
        throw InvalidDiagramError("H vertex " + std::to_string(id) +
                                  " has degree " + std::to_string(deg));
      }
    }
  }
  for (VertexId v : io) {
    if (!vertices_.contains(v)) throw InvalidDiagramError("dangling boundary id");
  }
}

bool Diagram::is_valid() const {
  try {
    validate();
    return true;
  } catch (const InvalidDiagramError&) {
    return false;
  }
}

namespace {

/// Copies `src` into `dst` with ids shifted by `offset`; returns the id map.
std::map<VertexId, VertexId> append_shifted(Diagram& dst, const Diagram& src,
                                            VertexId offset) {
  std::map<VertexId, VertexId> map;
  for (VertexId v : src.vertex_ids()) {
    map[v] = v + offset;
    dst.add_vertex_with_id(v + offset, src.kind(v));
  }
  for (const auto& [a, b] : src.edges()) dst.add_edge(map[a], map[b]);
  return map;
}

}  // namespace

Diagram compose(const Diagram& first, const Diagram& second) {
  if (first.num_outputs() != second.num_inputs()) {
    throw CompositionArityError(
        "cannot compose " + std::to_string(first.num_outputs()) +
        " outputs with " + std::to_string(second.num_inputs()) + " inputs");
  }
  Diagram result;
  auto map1 = append_shifted(result, first, 0);
  auto map2 = append_shifted(result, second, first.next_id());

  std::vector<VertexId> junctions;
  for (std::size_t k = 0; k < first.num_outputs(); ++k) {
    VertexId o = map1[first.outputs()[k]];
    VertexId i = map2[second.inputs()[k]];
    result.add_edge(o, i);
    junctions.push_back(o);
    junctions.push_back(i);
  }
  std::vector<VertexId> ins, outs;
  for (VertexId v : first.inputs()) ins.push_back(map1[v]);
  for (VertexId v : second.outputs()) outs.push_back(map2[v]);

  // Each junction now has degree 2; splice it out of its wire.
  for (VertexId j : junctions) {
    std::vector<VertexId> nbrs = result.neighbours(j);
    result.remove_vertex(j);
    if (nbrs.size() == 2 && nbrs[0] != j) result.add_edge(nbrs[0], nbrs[1]);
    // a junction whose only edge is a self-loop closed a scalar circle
  }
  result.set_inputs(ins);
  result.set_outputs(outs);
  return result;
}

Diagram tensor(const Diagram& top, const Diagram& bottom) {
  Diagram result;
  auto map1 = append_shifted(result, top, 0);
  auto map2 = append_shifted(result, bottom, top.next_id());
  std::vector<VertexId> ins, outs;
  for (VertexId v : top.inputs()) ins.push_back(map1[v]);
  for (VertexId v : bottom.inputs()) ins.push_back(map2[v]);
  for (VertexId v : top.outputs()) outs.push_back(map1[v]);
  for (VertexId v : bottom.outputs()) outs.push_back(map2[v]);
  result.set_inputs(ins);
  result.set_outputs(outs);
  return result;
}

Diagram adjoint(const Diagram& d) {
  Diagram result = d;
  for (VertexId v : d.vertex_ids()) {
    if (d.kind(v).is_spider()) result.set_phase(v, -d.phase(v));
  }
  result.set_inputs(d.outputs());
  result.set_outputs(d.inputs());
  return result;
}

Diagram compact_ids(const Diagram& d) {
  std::map<VertexId, VertexId> map;
  Diagram result;
  for (VertexId v : d.vertex_ids()) {
    map[v] = result.add_vertex(d.kind(v));
  }
  for (const auto& [a, b] : d.edges()) result.add_edge(map[a], map[b]);
  std::vector<VertexId> ins, outs;
  for (VertexId v : d.inputs()) ins.push_back(map[v]);
  for (VertexId v : d.outputs()) outs.push_back(map[v]);
  result.set_inputs(ins);
  result.set_outputs(outs);
  return result;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Diagram& a, const Diagram& b) : a_(a), b_(b) {}

  std::optional<std::map<VertexId, VertexId>> run() {
    if (a_.num_vertices() != b_.num_vertices() ||
        a_.num_edges() != b_.num_edges() ||
        a_.num_inputs() != b_.num_inputs() ||
        a_.num_outputs() != b_.num_outputs()) {
      return std::nullopt;
    }
    if (invariant_profile(a_) != invariant_profile(b_)) return std::nullopt;
    for (std::size_t i = 0; i < a_.num_inputs(); ++i) {
      if (!try_assign(a_.inputs()[i], b_.inputs()[i])) return std::nullopt;
    }
    for (std::size_t i = 0; i < a_.num_outputs(); ++i) {
      if (!try_assign(a_.outputs()[i], b_.outputs()[i])) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    return map_;
  }

 private:
  static std::vector<std::tuple<VertexKind, std::size_t, std::size_t>>
  invariant_profile(const Diagram& d) {
    std::vector<std::tuple<VertexKind, std::size_t, std::size_t>> profile;
    for (VertexId v : d.vertex_ids()) {
      profile.emplace_back(d.kind(v), d.degree(v), d.self_loops(v));
    }
    std::sort(profile.begin(), profile.end());
    return profile;
  }

  bool compatible(VertexId va, VertexId vb) const {
    if (used_.contains(vb)) return false;
    if (a_.kind(va) != b_.kind(vb)) return false;
    if (a_.degree(va) != b_.degree(vb)) return false;
    if (a_.self_loops(va) != b_.self_loops(vb)) return false;
    for (const auto& [ma, mb] : map_) {
      if (a_.edge_multiplicity(va, ma) != b_.edge_multiplicity(vb, mb)) {
        return false;
      }
    }
    return true;
  }

  bool try_assign(VertexId va, VertexId vb) {
    if (map_.contains(va)) return map_[va] == vb;
    if (!compatible(va, vb)) return false;
    map_[va] = vb;
    used_.insert(vb);
    return true;
  }

  void unassign(VertexId va) {
    used_.erase(map_[va]);
    map_.erase(va);
  }

  bool search() {
    if (map_.size() == a_.num_vertices()) return true;
    // Prefer an unmapped vertex adjacent to the mapped region.
    std::optional<VertexId> next;
    std::optional<VertexId> anchor;
    for (const auto& [ma, mb] : map_) {
      for (VertexId n : a_.neighbours(ma)) {
        if (!map_.contains(n)) {
          next = n;
          anchor = ma;
          break;
        }
      }
      if (next) break;
    }
    std::vector<VertexId> candidates;
    if (next) {
      for (VertexId n : b_.neighbours(map_[*anchor])) {
        if (candidates.empty() || candidates.back() != n) candidates.push_back(n);
      }
    } else {
      for (VertexId v : a_.vertex_ids()) {
        if (!map_.contains(v)) {
          next = v;
          break;
        }
      }
      candidates = b_.vertex_ids();
    }
    for (VertexId vb : candidates) {
      if (!compatible(*next, vb)) continue;
      map_[*next] = vb;
      used_.insert(vb);
      if (search()) return true;
      unassign(*next);
    }
    return false;
  }

  const Diagram& a_;
  const Diagram& b_;
  std::map<VertexId, VertexId> map_;
  std::set<VertexId> used_;
};

}  // namespace

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Diagram& a,
                                                             const Diagram& b) {
  return IsoSearch(a, b).run();
}

bool iso_equal(const Diagram& a, const Diagram& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace zxcliff
