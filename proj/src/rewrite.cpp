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

#include "zxcliff/rewrite.hpp"

#include <algorithm>
#include <set>

#include "zxcliff/errors.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff {

using nlohmann::json;

json Match::fingerprint() const {
  json map = json::array();
  for (const auto& [x, t] : vertex_map) map.push_back({x, t});
  json att = json::array();
  for (const auto& [b, e] : attach) att.push_back({b, e.first, e.second});
  return json{{"rule", rule_name}, {"map", std::move(map)}, {"attach", std::move(att)}};
}

/// Search order and boundary bookkeeping for one rule.
struct RulePlan {
  std::vector<VertexId> order;
  /// For order[i], an earlier LHS vertex adjacent to it, if any.
  std::vector<std::optional<VertexId>> anchor;
  /// LHS interior vertex -> its boundary neighbours, sorted.
  std::map<VertexId, std::vector<VertexId>> legs;
  /// Pairs of boundary legs whose exchange leaves the result unchanged.
  std::set<std::pair<VertexId, VertexId>> symmetric;
  KindDegreeProfile need;
};

namespace {

using Plan = RulePlan;

bool swap_is_invisible(const Rule& rule, VertexId b1, VertexId b2) {
  auto locate = [&](VertexId b) -> std::pair<bool, std::size_t> {
    const auto& in = rule.lhs.inputs();
    if (auto it = std::find(in.begin(), in.end(), b); it != in.end()) {
      return {true, static_cast<std::size_t>(it - in.begin())};
    }
    const auto& out = rule.lhs.outputs();
    return {false, static_cast<std::size_t>(std::find(out.begin(), out.end(), b) -
                                            out.begin())};
  };
  auto [in1, i1] = locate(b1);
  auto [in2, i2] = locate(b2);
  std::vector<VertexId> ins = rule.rhs.inputs();
  std::vector<VertexId> outs = rule.rhs.outputs();
  VertexId& slot1 = in1 ? ins[i1] : outs[i1];
  VertexId& slot2 = in2 ? ins[i2] : outs[i2];
  std::swap(slot1, slot2);
  Diagram swapped = rule.rhs;
  swapped.set_inputs(ins);
  swapped.set_outputs(outs);
  return iso_equal(swapped, rule.rhs);
}

Plan make_plan(const Rule& rule) {
  const Diagram& lhs = rule.lhs;
  Plan plan;
  plan.need = kind_degree_profile(lhs);
  std::vector<VertexId> interior = lhs.interior_ids();
  for (VertexId x : interior) {
    plan.legs[x];
    for (VertexId n : lhs.neighbours(x)) {
      if (lhs.kind(n).is_boundary()) plan.legs[x].push_back(n);
    }
  }
  for (VertexId b : lhs.vertex_ids()) {
    if (lhs.kind(b).is_boundary() && lhs.kind(lhs.neighbours(b)[0]).is_boundary()) {
      throw RuleFormatError("rule '" + rule.name + "' has a bare wire on its left side");
    }
  }
  // breadth-first from the highest-degree vertex of each component
  std::set<VertexId> placed;
  while (placed.size() < interior.size()) {
    VertexId root = 0;
    std::size_t best = 0;
    bool found = false;
    for (VertexId x : interior) {
      if (placed.contains(x)) continue;
      if (!found || lhs.degree(x) > best) {
        root = x;
        best = lhs.degree(x);
        found = true;
      }
    }
    std::vector<VertexId> queue{root};
    placed.insert(root);
    plan.order.push_back(root);
    plan.anchor.push_back(std::nullopt);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (VertexId n : lhs.neighbours(queue[qi])) {
        if (lhs.kind(n).is_boundary() || placed.contains(n)) continue;
        placed.insert(n);
        queue.push_back(n);
        plan.order.push_back(n);
        plan.anchor.push_back(queue[qi]);
      }
    }
  }
  for (const auto& [x, legs] : plan.legs) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
      for (std::size_t j = i + 1; j < legs.size(); ++j) {
        if (swap_is_invisible(rule, legs[i], legs[j])) {
          plan.symmetric.emplace(legs[i], legs[j]);
        }
      }
    }
  }
  return plan;
}

/// Smallest assignment reachable from `a` by invisible swaps.
std::vector<VertexId> canonical_assignment(const std::vector<VertexId>& legs,
                                           const std::vector<VertexId>& a,
                                           const Plan& plan) {
  std::set<std::vector<VertexId>> seen{a};
  std::vector<std::vector<VertexId>> queue{a};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (std::size_t i = 0; i < legs.size(); ++i) {
      for (std::size_t j = i + 1; j < legs.size(); ++j) {
        if (!plan.symmetric.contains({legs[i], legs[j]})) continue;
        std::vector<VertexId> next = queue[qi];
        std::swap(next[i], next[j]);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return *seen.begin();
}

class Matcher {
 public:
  Matcher(const Rule& rule, const Diagram& target, const Plan& plan)
      : rule_(rule), lhs_(rule.lhs), target_(target), plan_(plan) {}

  std::vector<Match> run(std::optional<std::pair<VertexId, VertexId>> pin) {
    pin_ = pin;
    if (plan_.order.empty()) return {};
    search(0);
    return std::move(found_);
  }

 private:
  bool compatible(VertexId x, VertexId t) const {
    if (used_.contains(t)) return false;
    if (pin_ && pin_->first == x && pin_->second != t) return false;
    if (target_.kind(t) != lhs_.kind(x)) return false;
    if (target_.degree(t) != lhs_.degree(x)) return false;
    if (target_.self_loops(t) != lhs_.self_loops(x)) return false;
    for (const auto& [x2, t2] : map_) {
      if (lhs_.edge_multiplicity(x, x2) != target_.edge_multiplicity(t, t2)) return false;
    }
    return true;
  }

  void search(std::size_t i) {
    if (i == plan_.order.size()) {
      emit();
      return;
    }
    const VertexId x = plan_.order[i];
    std::vector<VertexId> candidates;
    if (pin_ && pin_->first == x) {
      if (target_.contains(pin_->second)) candidates.push_back(pin_->second);
    } else if (plan_.anchor[i]) {
      for (VertexId n : target_.neighbours(map_.at(*plan_.anchor[i]))) {
        if (candidates.empty() || candidates.back() != n) candidates.push_back(n);
      }
    } else {
      candidates = target_.vertex_ids();
    }
    for (VertexId t : candidates) {
      if (!compatible(x, t)) continue;
      map_[x] = t;
      used_.insert(t);
      search(i + 1);
      used_.erase(t);
      map_.erase(x);
    }
  }

  void emit() {
    // per vertex, every distinct canonical ordering of its outside neighbours
    std::vector<std::pair<VertexId, std::vector<std::vector<VertexId>>>> options;
    for (const auto& [x, legs] : plan_.legs) {
      if (legs.empty()) continue;
      std::vector<VertexId> outside;
      for (VertexId n : target_.neighbours(map_.at(x))) {
        if (!used_.contains(n)) outside.push_back(n);
      }
      if (outside.size() != legs.size()) return;
      std::vector<std::vector<VertexId>> perms;
      do {
        if (canonical_assignment(legs, outside, plan_) == outside) perms.push_back(outside);
      } while (std::next_permutation(outside.begin(), outside.end()));
      options.emplace_back(x, std::move(perms));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      Match m;
      m.rule_name = rule_.name;
      m.vertex_map = map_;
      for (std::size_t k = 0; k < options.size(); ++k) {
        const auto& [x, perms] = options[k];
        const auto& legs = plan_.legs.at(x);
        for (std::size_t l = 0; l < legs.size(); ++l) {
          m.attach[legs[l]] = {map_.at(x), perms[pick[k]][l]};
        }
      }
      for (const auto& [a, b] : lhs_.edges()) {
        if (lhs_.kind(a).is_boundary() || lhs_.kind(b).is_boundary()) continue;
        VertexId ta = map_.at(a), tb = map_.at(b);
        m.edge_map.push_back({{a, b}, {std::min(ta, tb), std::max(ta, tb)}});
      }
      found_.push_back(std::move(m));
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == options[k].second.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
  }

  const Rule& rule_;
  const Diagram& lhs_;
  const Diagram& target_;
  const Plan& plan_;
  std::optional<std::pair<VertexId, VertexId>> pin_;
  std::map<VertexId, VertexId> map_;
  std::set<VertexId> used_;
  std::vector<Match> found_;
};

std::vector<VertexId> sorted_images(const Match& m) {
  std::vector<VertexId> im;
  for (const auto& [x, t] : m.vertex_map) im.push_back(t);
  std::sort(im.begin(), im.end());
  return im;
}

std::vector<Match> matches_impl(const Rule& rule, const Diagram& target,
                                std::optional<std::pair<VertexId, VertexId>> pin) {
  std::shared_ptr<const Plan> plan = rule.plan;
  if (!plan) plan = std::make_shared<const Plan>(make_plan(rule));
  std::vector<Match> found = Matcher(rule, target, *plan).run(pin);
  std::vector<std::pair<std::vector<VertexId>, std::size_t>> keyed;
  for (std::size_t i = 0; i < found.size(); ++i) keyed.emplace_back(sorted_images(found[i]), i);
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    const Match& ma = found[a.second];
    const Match& mb = found[b.second];
    if (ma.vertex_map != mb.vertex_map) return ma.vertex_map < mb.vertex_map;
    return ma.attach < mb.attach;
  });
  std::vector<Match> out;
  out.reserve(found.size());
  for (const auto& [key, i] : keyed) out.push_back(std::move(found[i]));
  return out;
}

void revalidate(const Diagram& target, const Rule& rule, const Match& m) {
  const Diagram& lhs = rule.lhs;
  auto stale = [&](const std::string& why) {
    throw StaleMatchError("match of '" + rule.name + "' is stale: " + why);
  };
  std::set<VertexId> image;
  for (VertexId x : lhs.interior_ids()) {
    auto it = m.vertex_map.find(x);
    if (it == m.vertex_map.end()) stale("unmapped vertex");
    if (!target.contains(it->second)) stale("vertex gone");
    if (!image.insert(it->second).second) stale("not injective");
    if (target.kind(it->second) != lhs.kind(x) || target.degree(it->second) != lhs.degree(x)) {
      stale("kind or degree changed");
    }
  }
  if (m.vertex_map.size() != lhs.num_interior()) stale("extra vertices");
  for (const auto& [x, t] : m.vertex_map) {
    for (const auto& [x2, t2] : m.vertex_map) {
      if (lhs.edge_multiplicity(x, x2) != target.edge_multiplicity(t, t2)) {
        stale("edge multiplicity changed");
      }
    }
  }
  std::map<VertexId, std::multiset<VertexId>> want;
  for (VertexId b : lhs.vertex_ids()) {
    if (!lhs.kind(b).is_boundary()) continue;
    auto it = m.attach.find(b);
    if (it == m.attach.end()) stale("unattached boundary");
    const VertexId inner = lhs.neighbours(b)[0];
    if (it->second.first != m.vertex_map.at(inner)) stale("attachment moved");
    if (image.contains(it->second.second) || !target.contains(it->second.second)) {
      stale("attachment endpoint invalid");
    }
    want[it->second.first].insert(it->second.second);
  }
  for (const auto& [t, ends] : want) {
    std::multiset<VertexId> have;
    for (VertexId n : target.neighbours(t)) {
      if (!image.contains(n)) have.insert(n);
    }
    if (have != ends) stale("boundary edges changed");
  }
}

}  // namespace

ProofStep rewrite_step(const Match& m) {
  ProofStep s;
  s.kind = StepKind::AxiomaticRewrite;
  s.name = m.rule_name;
  s.fingerprint = m.fingerprint();
  return s;
}

std::vector<Match> find_matches_at(const Rule& rule, const Diagram& target, VertexId anchor,
                                   VertexId image) {
  if (!rule.lhs.contains(anchor) || rule.lhs.kind(anchor).is_boundary()) {
    throw TargetKindError("anchor must be an interior vertex of the rule");
  }
  if (!target.contains(image)) return {};
  return matches_impl(rule, target, std::make_pair(anchor, image));
}

Rule make_rule(std::string name, Diagram lhs, Diagram rhs) {
  Rule r{std::move(name), std::move(lhs), std::move(rhs), nullptr};
  r.plan = std::make_shared<const Plan>(make_plan(r));
  return r;
}

KindDegreeProfile kind_degree_profile(const Diagram& d) {
  KindDegreeProfile p;
  for (VertexId v : d.interior_ids()) ++p[{d.kind(v), d.degree(v)}];
  return p;
}

bool may_match(const Rule& rule, const KindDegreeProfile& have) {
  KindDegreeProfile computed;
  if (!rule.plan) computed = kind_degree_profile(rule.lhs);
  const KindDegreeProfile& need = rule.plan ? rule.plan->need : computed;
  for (const auto& [kd, n] : need) {
    auto it = have.find(kd);
    if (it == have.end() || it->second < n) return false;
  }
  return true;
}

std::vector<Match> find_matches(const Rule& rule, const Diagram& target) {
  return matches_impl(rule, target, std::nullopt);
}

Diagram apply_match(const Diagram& target, const Rule& rule, const Match& m) {
  revalidate(target, rule, m);
  const Diagram& lhs = rule.lhs;
  const Diagram& rhs = rule.rhs;

  Diagram out = target;
  for (const auto& [x, t] : m.vertex_map) out.remove_vertex(t);

  std::map<VertexId, VertexId> fresh;
  for (VertexId r : rhs.interior_ids()) fresh[r] = out.add_vertex(rhs.kind(r));
  for (const auto& [a, b] : rhs.edges()) {
    if (rhs.kind(a).is_boundary() || rhs.kind(b).is_boundary()) continue;
    out.add_edge(fresh.at(a), fresh.at(b));
  }

  // outside endpoint for each rhs boundary, via the lhs boundary in the same slot
  std::map<VertexId, VertexId> outside;
  for (std::size_t i = 0; i < rhs.num_inputs(); ++i) {
    outside[rhs.inputs()[i]] = m.attach.at(lhs.inputs()[i]).second;
  }
  for (std::size_t i = 0; i < rhs.num_outputs(); ++i) {
    outside[rhs.outputs()[i]] = m.attach.at(lhs.outputs()[i]).second;
  }
  for (const auto& [rb, y] : outside) {
    const VertexId inner = rhs.neighbours(rb)[0];
    if (!rhs.kind(inner).is_boundary()) {
      out.add_edge(fresh.at(inner), y);
    } else if (rb < inner) {
      // bare wire in the rhs: join the two outside ends
      out.add_edge(y, outside.at(inner));
    }
  }
  out.validate();
  return out;
}

std::optional<Diagram> rewrite_first(const std::vector<Rule>& rules, const Diagram& d,
                                     ProofTrace* trace) {
  for (const Rule& r : rules) {
    auto ms = find_matches(r, d);
    if (ms.empty()) continue;
    Diagram next = apply_match(d, r, ms.front());
    if (trace) trace->record(rewrite_step(ms.front()), next);
    return next;
  }
  return std::nullopt;
}

std::optional<Diagram> rewrite_metric(const std::vector<Rule>& rules, const Diagram& d,
                                      const Metric& metric, ProofTrace* trace) {
  const std::int64_t current = metric(d);
  for (const Rule& r : rules) {
    for (const Match& m : find_matches(r, d)) {
      Diagram next = apply_match(d, r, m);
      if (metric(next) < current) {
        if (trace) trace->record(rewrite_step(m), next);
        return next;
      }
    }
  }
  return std::nullopt;
}

std::optional<Diagram> rewrite_targeted(const Rule& rule, VertexId anchor,
                                        const Diagram& d, const TargetFn& target_fn,
                                        ProofTrace* trace) {
  if (!rule.lhs.contains(anchor) || rule.lhs.kind(anchor).is_boundary()) {
    throw TargetKindError("anchor must be an interior vertex of the rule");
  }
  auto where = target_fn(d);
  if (!where) return std::nullopt;
  auto ms = matches_impl(rule, d, std::make_pair(anchor, *where));
  if (ms.empty()) return std::nullopt;
  Diagram next = apply_match(d, rule, ms.front());
  if (trace) trace->record(rewrite_step(ms.front()), next);
  return next;
}

ReduceResult reduce(const Strategy& strategy, const Diagram& d, ProofTrace* trace,
                    std::size_t max_steps) {
  ReduceResult res{d, 0, false};
  while (res.steps < max_steps) {
    auto next = strategy(res.diagram, trace);
    if (!next) {
      res.fixpoint = true;
      return res;
    }
    res.diagram = std::move(*next);
    ++res.steps;
  }
  return res;
}

Diagram replay(const ProofTrace& trace, const RuleLibrary& rules) {
  Diagram d = trace.initial();
  std::size_t index = 0;
  for (const ProofStep& step : trace.steps()) {
    const std::string where = "step " + std::to_string(index++) + " (" + step.name + ")";
    try {
      switch (step.kind) {
        case StepKind::AxiomaticRewrite: {
          auto it = rules.find(step.name);
          if (it == rules.end()) throw ReplayDivergence(where + ": unknown rule");
          bool applied = false;
          for (const Match& m : find_matches(it->second, d)) {
            if (m.fingerprint() == step.fingerprint) {
              d = apply_match(d, it->second, m);
              applied = true;
              break;
            }
          }
          if (!applied) throw ReplayDivergence(where + ": match not found");
          break;
        }
        case StepKind::StructuralPass: {
          auto kind = pass_from_name(step.name);
          if (!kind) throw ReplayDivergence(where + ": unknown pass");
          std::vector<VertexId> touched;
          d = run_pass(*kind, d, step.args, &touched);
          if (touched != step.affected) {
            throw ReplayDivergence(where + ": pass touched different vertices");
          }
          break;
        }
        case StepKind::SemanticNormalisation:
          d = apply_semantic_step(d, step);
          break;
      }
      d.validate();
    } catch (const ReplayDivergence&) {
      throw;
    } catch (const ZXCliffError& ex) {
      throw ReplayDivergence(where + ": " + ex.what());
    }
  }
  if (!iso_equal(d, trace.final_diagram())) {
    throw ReplayDivergence("replayed diagram differs from the recorded final diagram");
  }
  return d;
}

}  // namespace zxcliff
