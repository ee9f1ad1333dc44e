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

#pragma once

#include <string>

#include "json.hpp"
#include "zxcliff/diagram.hpp"

namespace zxcliff {

/**
 * Diagram <-> JSON.
 *
 * Layout: {"vertices":[{"id","kind","phase"}], "edges":[[a,b],...],
 * "inputs":[...], "outputs":[...]}. Vertices appear in id order and edges
 * in sorted order, so dumping is canonical for a given diagram.
 */
nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

std::string dump_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& text);

}  // namespace zxcliff
