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


#include "zxcliff/ruleset.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "zxcliff/circuit.hpp"
#include "zxcliff/diagram_json.hpp"
#include "zxcliff/errors.hpp"
#include "zxcliff/semantics.hpp"

#ifndef ZXCLIFF_RULESET_DIR
#define ZXCLIFF_RULESET_DIR "rules/v1"
#endif

namespace zxcliff {

using nlohmann::json;

std::vector<const Rule*> Ruleset::all() const {
  std::vector<const Rule*> out;
  for (const auto* group : {&init, &always, &euler, &pauli_commute, &cnot_commute, &c2}) {
    for (const Rule& r : *group) out.push_back(&r);
  }
  return out;
}

std::pair<std::size_t, std::size_t> reduction_weight(const Diagram& d) {
  std::size_t inner = 0;
  for (const auto& [a, b] : d.edges()) {
    if (!d.kind(a).is_boundary() && !d.kind(b).is_boundary()) ++inner;
  }
  return {circuit_size(d), inner};
}

const std::vector<std::string>& ruleset_groups() {
  static const std::vector<std::string> kGroups = {
      "init", "always", "euler", "pauli_commute", "cnot_commute", "c2"};
  return kGroups;
}

std::string_view rule_family(std::string_view name) {
  return name.substr(0, name.find(':'));
}

json rule_to_json(const Rule& r) {
  return json{{"name", r.name}, {"lhs", diagram_to_json(r.lhs)}, {"rhs", diagram_to_json(r.rhs)}};
}

Rule rule_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("lhs") || !j.contains("rhs") ||
      !j["name"].is_string()) {
    throw RuleFormatError("rule must be an object with name, lhs and rhs");
  }
  const std::string name = j["name"].get<std::string>();
  Diagram lhs, rhs;
  try {
    lhs = diagram_from_json(j["lhs"]);
    rhs = diagram_from_json(j["rhs"]);
  } catch (const InvalidDiagramError& ex) {
    throw RuleFormatError("rule '" + name + "': " + ex.what());
  }
  if (lhs.signature() != rhs.signature()) {
    throw RuleFormatError("rule '" + name + "': sides have different boundaries");
  }
  return make_rule(name, std::move(lhs), std::move(rhs));
}

Rule read_rule_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw RuleFormatError("cannot read " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& ex) {
    throw RuleFormatError(file.string() + ": " + ex.what());
  }
  return rule_from_json(j);
}

void write_rule_file(const std::filesystem::path& file, const Rule& r) {
  std::ofstream out(file);
  out << rule_to_json(r).dump() << "\n";
}

Rule colour_dual(const Rule& r) {
  auto swap = [](Diagram d) {
    for (VertexId v : d.vertex_ids()) {
      VertexKind k = d.kind(v);
      if (k.is_spider()) {
        k.type = opposite_colour(k.type);
        d.set_kind(v, k);
      }
    }
    return d;
  };
  return make_rule(r.name + ".dual", swap(r.lhs), swap(r.rhs));
}

void check_rule_sound(const Rule& r, double tol) {
  bool ok = false;
  try {
    ok = scalar_free_equal(interpret(r.lhs), interpret(r.rhs), tol);
  } catch (const ZXCliffError& ex) {
    throw UnsoundRuleError(r.name, std::string("cannot be interpreted: ") + ex.what());
  }
  if (!ok) throw UnsoundRuleError(r.name, "changes the interpretation");
}

namespace {

std::string shape_key(const Diagram& d) {
  std::vector<std::pair<VertexKind, std::size_t>> profile;
  for (VertexId v : d.interior_ids()) profile.emplace_back(d.kind(v), d.degree(v));
  std::sort(profile.begin(), profile.end());
  std::ostringstream os;
  os << d.num_inputs() << "/" << d.num_outputs();
  for (const auto& [k, deg] : profile) os << " " << to_string(k) << ":" << deg;
  return os.str();
}

class GroupBuilder {
 public:
  explicit GroupBuilder(std::vector<Rule>& out) : out_(out) {}

  bool add(Rule r) {
    auto& bucket = seen_[shape_key(r.lhs)];
    for (std::size_t i : bucket) {
      if (iso_equal(out_[i].lhs, r.lhs)) return false;
    }
    bucket.push_back(out_.size());
    out_.push_back(std::move(r));
    return true;
  }

 private:
  std::vector<Rule>& out_;
  std::map<std::string, std::vector<std::size_t>> seen_;
};

}  // namespace

Ruleset load_ruleset(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw RuleFormatError("no ruleset directory at " + dir.string());
  Ruleset rs;
  std::map<std::string, std::vector<Rule>*> groups = {
      {"init", &rs.init},           {"always", &rs.always},
      {"euler", &rs.euler},         {"pauli_commute", &rs.pauli_commute},
      {"cnot_commute", &rs.cnot_commute}, {"c2", &rs.c2}};
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory() && !groups.contains(entry.path().filename().string())) {
      throw RuleFormatError("unknown rule group " + entry.path().filename().string());
    }
  }
  for (const std::string& g : ruleset_groups()) {
    const fs::path sub = dir / g;
    if (!fs::is_directory(sub)) continue;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(sub)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<Rule> shipped;
    for (const fs::path& f : files) {
      Rule r = read_rule_file(f);
      check_rule_sound(r);
      shipped.push_back(std::move(r));
    }
    GroupBuilder builder(*groups.at(g));
    for (const Rule& r : shipped) builder.add(r);
    for (const Rule& r : shipped) {
      Rule dual = colour_dual(r);
      check_rule_sound(dual);
      builder.add(std::move(dual));
    }
  }
  for (const Rule* r : rs.all()) {
    if (!rs.library.emplace(r->name, *r).second) {
      throw RuleFormatError("duplicate rule name '" + r->name + "'");
    }
  }
  return rs;
}

std::filesystem::path default_ruleset_dir() {
  if (const char* env = std::getenv("ZXCLIFF_RULESET_DIR")) return env;
  return ZXCLIFF_RULESET_DIR;
}

const Ruleset& default_ruleset() {
  static const Ruleset rs = load_ruleset(default_ruleset_dir());
  return rs;
}

}  // namespace zxcliff
