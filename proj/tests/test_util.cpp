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


#include "test_util.hpp"

namespace zxcliff::test {

bool same_map(const Diagram& a, const Diagram& b) {
  return scalar_free_equal(interpret(a), interpret(b));
}

Diagram random_graph(std::size_t wires, std::size_t spiders, std::size_t extra,
                     std::mt19937_64& rng) {
  Diagram d;
  std::vector<VertexId> ins, outs, inner;
  for (std::size_t w = 0; w < wires; ++w) ins.push_back(d.add_input());
  std::uniform_int_distribution<int> coin(0, 1), quarter(0, 3);
  for (std::size_t i = 0; i < spiders; ++i) {
    Phase p(quarter(rng));
    inner.push_back(d.add_vertex(coin(rng) ? VertexKind::z(p) : VertexKind::x(p)));
  }
  for (std::size_t w = 0; w < wires; ++w) outs.push_back(d.add_output());
  std::uniform_int_distribution<std::size_t> pick(0, inner.size() - 1);
  for (std::size_t i = 1; i < inner.size(); ++i) d.add_edge(inner[i - 1], inner[i]);
  for (VertexId b : ins) d.add_edge(b, inner[pick(rng)]);
  for (VertexId b : outs) d.add_edge(inner[pick(rng)], b);
  for (std::size_t i = 0; i < extra; ++i) d.add_edge(inner[pick(rng)], inner[pick(rng)]);
  return d;
}

std::vector<Circuit> circuit_sample(std::size_t count, std::size_t max_width,
                                    std::size_t max_depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> width(1, max_width), depth(0, max_depth);
  std::vector<Circuit> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_clifford_circuit(width(rng), depth(rng), rng()));
  }
  return out;
}

}  // namespace zxcliff::test
