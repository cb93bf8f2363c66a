/*
 * Copyright 2026 The maxlin authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "maxlin/dag.hpp"

namespace maxlin {

/// DOT text with one line per edge, sorted by (from, to); isolated nodes get
/// a bare node line so the render shows the full node set. `label(edge)`
/// returns the label text, or an empty string for no label.
template <typename LabelFn> std::string to_dot(const Dag &dag, LabelFn &&label) {
    std::string out = "digraph {\n";
    for (NodeId v = 1; v <= dag.node_count(); ++v)
        if (dag.parents(v).empty() && dag.children(v).empty())
            out += "  " + std::to_string(v) + ";\n";
    for (const Edge &e : dag.edges()) {
        out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to);
        const std::string text = label(e);
        if (!text.empty())
            out += " [label=\"" + text + "\"]";
        out += ";\n";
    }
    return out + "}\n";
}

inline std::string to_dot(const Dag &dag) {
    return to_dot(dag, [](const Edge &) { return std::string(); });
}

/// Plain edge list, one "from to" pair per line in (from, to) order.
inline std::string to_edge_list(const Dag &dag) {
    std::string out;
    for (const Edge &e : dag.edges())
        out += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
    return out;
}

} // namespace maxlin
