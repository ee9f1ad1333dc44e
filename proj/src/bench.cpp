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


#include "zxcliff/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "zxcliff/errors.hpp"
#include "zxcliff/normal_forms.hpp"
#include "zxcliff/rewrite.hpp"
#include "zxcliff/semantics.hpp"

namespace zxcliff {

namespace {

constexpr std::size_t kVerifyWidth = 4;

BenchRun one_run(const BenchConfig& cfg, const Ruleset& rules, std::uint64_t seed) {
  BenchRun run;
  run.seed = seed;
  const Circuit c = random_clifford_circuit(cfg.width, cfg.depth, seed);
  try {
    const OptimiseResult res = optimise(c, cfg.optimiser, rules);
    run.input_size = res.stats.input_size;
    run.output_size = res.stats.output_size;
    run.rewrites = res.stats.rewrites;
    run.millis = res.stats.millis;
    if (cfg.width <= kVerifyWidth) {
      const ScalarFreeMatrix u = gate_matrix_product(c);
      run.verified = scalar_free_equal(u, gate_matrix_product(res.circuit)) &&
                     scalar_free_equal(u, interpret(res.diagram));
    }
    if (cfg.width == 1) run.in_normal_form = cc1_table().contains(res.diagram);
    if (cfg.width == 2) run.in_normal_form = cc2_contains(res.diagram);
    if (cfg.replay) {
      run.replayed = iso_equal(replay(res.trace, rules.library), res.diagram);
    }
  } catch (const ZXCliffError& ex) {
    run.error = ex.what();
  }
  return run;
}

}  // namespace

bool BenchReport::all_verified() const {
  for (const BenchRun& r : runs) {
    if (!r.verified || !r.error.empty()) return false;
  }
  return !runs.empty();
}

std::string BenchReport::csv_header() {
  return "width,depth,count,seed,mean_in,mean_out,ratio,steps,ms_mean,ms_sigma,verified";
}

std::string BenchReport::csv_row() const {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%llu,%.3f,%.3f,%.4f,%.2f,%.3f,%.3f,%.4f",
                config.width, config.depth, config.count,
                static_cast<unsigned long long>(config.seed), mean_in, mean_out, ratio,
                mean_steps, ms_mean, ms_sigma, verified);
  return buf;
}

std::string BenchReport::table() const {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%5s %5s %5s %9s %9s %7s %8s %16s %8s\n", "width", "depth",
                "count", "in size", "out size", "ratio", "steps", "time ms (sigma)",
                "verified");
  os << buf;
  std::snprintf(buf, sizeof buf, "%5zu %5zu %5zu %9.2f %9.2f %7.3f %8.1f %8.2f (%5.2f) %7.1f%%\n",
                config.width, config.depth, config.count, mean_in, mean_out, ratio, mean_steps,
                ms_mean, ms_sigma, 100.0 * verified);
  os << buf;
  return os.str();
}

BenchReport bench(const BenchConfig& cfg, const Ruleset& rules) {
  if (cfg.width == 0 || cfg.depth == 0 || cfg.count == 0) {
    throw std::invalid_argument("bench needs positive width, depth and count");
  }
  BenchReport rep;
  rep.config = cfg;
  rep.runs.resize(cfg.count);
  std::size_t jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, cfg.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cfg.count;) {
      rep.runs[i] = one_run(cfg, rules, cfg.seed + i);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const double n = static_cast<double>(cfg.count);
  std::size_t ok = 0;
  for (const BenchRun& r : rep.runs) {
    rep.mean_in += static_cast<double>(r.input_size) / n;
    rep.mean_out += static_cast<double>(r.output_size) / n;
    rep.mean_steps += static_cast<double>(r.rewrites) / n;
    rep.ms_mean += r.millis / n;
    if (r.verified && r.error.empty()) ++ok;
  }
  for (const BenchRun& r : rep.runs) {
    rep.ms_sigma += (r.millis - rep.ms_mean) * (r.millis - rep.ms_mean) / n;
  }
  rep.ms_sigma = std::sqrt(rep.ms_sigma);
  rep.ratio = rep.mean_in > 0 ? rep.mean_out / rep.mean_in : 0.0;
  rep.verified = static_cast<double>(ok) / n;
  return rep;
}

bool verify_circuits(const Circuit& a, const Circuit& b) {
  if (a.width != b.width) throw ShapeError("circuits have different widths");
  return scalar_free_equal(gate_matrix_product(a), gate_matrix_product(b));
}

}  // namespace zxcliff
