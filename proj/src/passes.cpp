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

#include "zxcliff/passes.hpp"

#include <algorithm>
#include <array>

#include "zxcliff/errors.hpp"

namespace zxcliff {

namespace {

constexpr std::array<std::string_view, 7> kPassNames = {
    "FuseSpiders", "RemoveIdentities", "RemoveSelfLoops", "HopfReduce",
    "HEulerExpand", "ColourChangeVertex", "PiCopy"};

void note(Affected affected, VertexId v) {
  if (affected) affected->push_back(v);
}

bool same_colour_spiders(const Diagram& d, VertexId a, VertexId b) {
  return d.kind(a).is_spider() && d.type(a) == d.type(b);
}

/// Moves every edge of `from` onto `into` and deletes `from`.
void merge_into(Diagram& d, VertexId into, VertexId from) {
  d.set_phase(into, d.phase(into) + d.phase(from));
  const std::vector<VertexId> legs = d.neighbours(from);
  bool used_fusion_edge = false;
  std::size_t loop_ends = 0;
  for (VertexId w : legs) {
    if (w == from) {
      // loop on `from`: both ends listed, becomes one loop on `into`
      if (++loop_ends % 2 == 0) d.add_edge(into, into);
    } else if (w == into) {
      if (!used_fusion_edge) {
        used_fusion_edge = true;
      } else {
        d.add_edge(into, into);
      }
    } else {
      d.add_edge(into, w);
    }
  }
  d.remove_vertex(from);
}

}  // namespace

std::string_view pass_name(PassKind k) { return kPassNames[static_cast<std::size_t>(k)]; }

std::optional<PassKind> pass_from_name(std::string_view name) {
  auto it = std::find(kPassNames.begin(), kPassNames.end(), name);
  if (it == kPassNames.end()) return std::nullopt;
  return static_cast<PassKind>(it - kPassNames.begin());
}

Diagram fuse_spiders(const Diagram& d, Affected affected) {
  Diagram out = d;
  for (bool merged = true; merged;) {
    merged = false;
    for (VertexId u : out.vertex_ids()) {
      if (!out.kind(u).is_spider()) continue;
      for (VertexId w : out.neighbours(u)) {
        if (w > u && same_colour_spiders(out, u, w)) {
          note(affected, u);
          note(affected, w);
          merge_into(out, u, w);
          merged = true;
          break;
        }
      }
      if (merged) break;
    }
  }
  return out;
}

Diagram remove_identities(const Diagram& d, Affected affected) {
  Diagram out = d;
  for (bool removed = true; removed;) {
    removed = false;
    for (VertexId v : out.interior_ids()) {
      const VertexKind& k = out.kind(v);
      if (!k.is_spider() || !k.phase.is_zero()) continue;
      if (out.degree(v) == 0) {
        note(affected, v);
        out.remove_vertex(v);
        removed = true;
        break;
      }
      if (out.degree(v) != 2) continue;
      const std::vector<VertexId> nbrs = out.neighbours(v);
      // loops and doubled edges are left to anti-loop, fusion and hopf
      if (nbrs[0] == nbrs[1]) continue;
      note(affected, v);
      out.remove_vertex(v);
      out.add_edge(nbrs[0], nbrs[1]);
      removed = true;
      break;
    }
  }
  return out;
}

Diagram remove_self_loops(const Diagram& d, Affected affected) {
  Diagram out = d;
  for (VertexId v : out.vertex_ids()) {
    if (!out.kind(v).is_spider() || out.self_loops(v) == 0) continue;
    note(affected, v);
    while (out.remove_edge(v, v)) {
    }
  }
  return out;
}

Diagram hopf_reduce(const Diagram& d, Affected affected) {
  Diagram out = d;
  for (VertexId u : out.vertex_ids()) {
    if (!out.kind(u).is_spider()) continue;
    std::vector<VertexId> partners = out.neighbours(u);
    partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
    for (VertexId w : partners) {
      if (w <= u || !out.kind(w).is_spider() || out.type(w) == out.type(u)) continue;
      std::size_t m = out.edge_multiplicity(u, w);
      if (m < 2) continue;
      note(affected, u);
      note(affected, w);
      for (std::size_t i = 0; i + 1 < m; i += 2) {
        out.remove_edge(u, w);
        out.remove_edge(u, w);
      }
    }
  }
  return out;
}

Diagram h_euler_expand(const Diagram& d, Affected affected) {
  Diagram out = d;
  for (VertexId h : d.vertex_ids()) {
    if (d.type(h) != VertexType::H) continue;
    note(affected, h);
    const std::vector<VertexId> nbrs = out.neighbours(h);
    out.remove_vertex(h);
    VertexId z1 = out.add_vertex(VertexKind::z(Phase(1)));
    VertexId x = out.add_vertex(VertexKind::x(Phase(1)));
    VertexId z2 = out.add_vertex(VertexKind::z(Phase(1)));
    out.add_edge(z1, x);
    out.add_edge(x, z2);
    if (nbrs[0] == h) {
      out.add_edge(z2, z1);
    } else {
      out.add_edge(nbrs[0], z1);
      out.add_edge(z2, nbrs[1]);
    }
  }
  return out;
}

Diagram colour_change_vertex(const Diagram& d, VertexId v, Affected affected) {
  if (!d.contains(v) || !d.kind(v).is_spider()) {
    throw TargetKindError("colour change needs a spider, got vertex " +
                          std::to_string(v));
  }
  Diagram out = d;
  out.set_kind(v, {opposite_colour(d.type(v)), d.phase(v)});
  note(affected, v);
  for (VertexId w : d.neighbours(v)) {
    if (w == v) continue;
    if (d.type(w) == VertexType::H) {
      if (!out.contains(w)) continue;
      const auto& hn = out.neighbours(w);
      VertexId other = hn[0] == v ? hn[1] : hn[0];
      out.remove_vertex(w);
      out.add_edge(v, other);
      note(affected, w);
    } else {
      out.remove_edge(v, w);
      VertexId h = out.add_vertex(VertexKind::h());
      out.add_edge(v, h);
      out.add_edge(h, w);
      note(affected, h);
    }
  }
  return out;
}

Diagram pi_copy(const Diagram& d, VertexId pauli, VertexId through, Affected affected) {
  if (!d.contains(pauli) || !d.contains(through) || !d.kind(pauli).is_spider() ||
      !d.phase(pauli).is_pauli() || d.degree(pauli) != 2) {
    throw TargetKindError("pi copy needs a degree-2 pi spider");
  }
  if (!d.kind(through).is_spider() || d.type(through) == d.type(pauli) ||
      d.edge_multiplicity(pauli, through) != 1) {
    throw TargetKindError("pi copy needs a singly attached spider of the other colour");
  }
  const VertexType colour = d.type(pauli);
  const auto& pn = d.neighbours(pauli);
  const VertexId beyond = pn[0] == through ? pn[1] : pn[0];

  Diagram out = d;
  note(affected, pauli);
  note(affected, through);
  out.remove_vertex(pauli);
  out.set_phase(through, -d.phase(through));
  const std::vector<VertexId> legs = out.neighbours(through);
  for (VertexId w : legs) {
    if (w == through) continue;
    out.remove_edge(through, w);
    VertexId p = out.add_vertex({colour, Phase::half()});
    out.add_edge(through, p);
    out.add_edge(p, w);
    note(affected, p);
  }
  out.add_edge(through, beyond);
  return out;
}

Diagram run_pass(PassKind k, const Diagram& d, const std::vector<VertexId>& args,
                 Affected affected) {
  switch (k) {
    case PassKind::FuseSpiders:
      return fuse_spiders(d, affected);
    case PassKind::RemoveIdentities:
      return remove_identities(d, affected);
    case PassKind::RemoveSelfLoops:
      return remove_self_loops(d, affected);
    case PassKind::HopfReduce:
      return hopf_reduce(d, affected);
    case PassKind::HEulerExpand:
      return h_euler_expand(d, affected);
    case PassKind::ColourChangeVertex:
      if (args.size() != 1) throw TargetKindError("colour change takes one vertex");
      return colour_change_vertex(d, args[0], affected);
    case PassKind::PiCopy:
      if (args.size() != 2) throw TargetKindError("pi copy takes two vertices");
      return pi_copy(d, args[0], args[1], affected);
  }
  return d;
}

Diagram structural_fixpoint(const Diagram& d) {
  return structural_fixpoint(d, [](PassKind, const std::vector<VertexId>&,
                                   const Diagram&) {});
}

Diagram simple_form(const Diagram& d) { return structural_fixpoint(h_euler_expand(d)); }

bool is_simple(const Diagram& d) {
  for (VertexId v : d.vertex_ids()) {
    const VertexKind& k = d.kind(v);
    if (k.type == VertexType::H) return false;
    if (k.is_boundary()) continue;
    if (k.phase.is_zero() && d.degree(v) == 2) return false;
    const auto& nbrs = d.neighbours(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v) return false;
      if (i > 0 && nbrs[i] == nbrs[i - 1]) return false;
      if (same_colour_spiders(d, v, nbrs[i])) return false;
    }
  }
  return true;
}

}  // namespace zxcliff
