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

#include "maxlin/io/report_io.hpp"

#include <charconv>

namespace maxlin {

namespace {

NodeId parse_label(std::string_view text) {
    NodeId value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw_input("bad node label '" + std::string(text) + "'");
    return value;
}

} // namespace

NodeSet parse_node_list(std::string_view text, int universe) {
    NodeSet out(universe);
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view item = text.substr(start, end - start);
        start = end + 1;
        if (item.empty())
            continue;
        if (const auto dash = item.find('-'); dash != std::string_view::npos) {
            const NodeId lo = parse_label(item.substr(0, dash));
            const NodeId hi = parse_label(item.substr(dash + 1));
            if (lo > hi)
                throw_input("empty node range '" + std::string(item) + "'");
            for (NodeId v = lo; v <= hi; ++v)
                out.insert(v);
        } else {
            out.insert(parse_label(item));
        }
    }
    return out;
}

} // namespace maxlin
