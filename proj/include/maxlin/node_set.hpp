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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "maxlin/errors.hpp"

namespace maxlin {

/// Nodes are labeled 1..d everywhere the library is visible from; internal
/// zero-based indexing never leaks.
using NodeId = int;

/// Subset of the node universe {1..d}, packed into machine words. Empty
/// sets are legal; the conventions max over empty = 0 and min over empty =
/// +infinity are applied by the callers that reduce over a NodeSet.
class NodeSet {
  public:
    NodeSet() : d_(0) {}
    explicit NodeSet(int universe) : d_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0)
            throw_input("negative node-set universe");
    }

    static NodeSet of(int universe, std::initializer_list<NodeId> members) {
        NodeSet s(universe);
        for (NodeId id : members)
            s.insert(id);
        return s;
    }

    static NodeSet full(int universe) {
        NodeSet s(universe);
        for (NodeId id = 1; id <= universe; ++id)
            s.insert(id);
        return s;
    }

    int universe_size() const noexcept { return d_; }

    bool contains(NodeId id) const noexcept {
        if (id < 1 || id > d_)
            return false;
        const unsigned bit = unsigned(id - 1);
        return (words_[bit >> 6] >> (bit & 63)) & 1u;
    }

    void insert(NodeId id) {
        check_range(id);
        const unsigned bit = unsigned(id - 1);
        words_[bit >> 6] |= std::uint64_t(1) << (bit & 63);
    }

    void erase(NodeId id) {
        check_range(id);
        const unsigned bit = unsigned(id - 1);
        words_[bit >> 6] &= ~(std::uint64_t(1) << (bit & 63));
    }

    int size() const noexcept {
        int n = 0;
        for (std::uint64_t w : words_)
            n += __builtin_popcountll(w);
        return n;
    }

    bool empty() const noexcept { return size() == 0; }

    std::vector<NodeId> to_vector() const {
        std::vector<NodeId> out;
        out.reserve(std::size_t(size()));
        for (NodeId id = 1; id <= d_; ++id)
            if (contains(id))
                out.push_back(id);
        return out;
    }

    NodeSet operator&(const NodeSet &rhs) const {
        NodeSet out = combined(rhs);
        for (std::size_t w = 0; w < out.words_.size(); ++w)
            out.words_[w] = words_[w] & rhs.words_[w];
        return out;
    }

    NodeSet operator|(const NodeSet &rhs) const {
        NodeSet out = combined(rhs);
        for (std::size_t w = 0; w < out.words_.size(); ++w)
            out.words_[w] = words_[w] | rhs.words_[w];
        return out;
    }

    bool operator==(const NodeSet &rhs) const = default;

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (NodeId id : to_vector()) {
            if (!first)
                out += ", ";
            out += std::to_string(id);
            first = false;
        }
        return out + "}";
    }

  private:
    void check_range(NodeId id) const {
        if (id < 1 || id > d_)
            throw_graph("node " + std::to_string(id) + " outside universe 1.." +
                        std::to_string(d_));
    }

    NodeSet combined(const NodeSet &rhs) const {
        if (d_ != rhs.d_)
            throw_input("node-set operation across different universes");
        return NodeSet(d_);
    }

    int d_;
    std::vector<std::uint64_t> words_;
};

} // namespace maxlin
