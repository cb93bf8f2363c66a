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
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "maxlin/node_set.hpp"

namespace maxlin {

struct Edge {
    NodeId from = 0;
    NodeId to = 0;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Square 0/1 matrix packed into words; rows are sources. Entry (j, i) of a
/// reachability matrix is 1 iff j == i or the graph has a path j -> ... -> i.
class BoolMatrix {
  public:
    BoolMatrix() : n_(0), words_per_row_(0) {}
    explicit BoolMatrix(int n)
        : n_(n), words_per_row_((n + 63) / 64), bits_(std::size_t(n) * words_per_row_, 0) {}

    int size() const noexcept { return n_; }

    bool get(NodeId row, NodeId col) const {
        const unsigned bit = unsigned(col - 1);
        return (row_words(row)[bit >> 6] >> (bit & 63)) & 1u;
    }

    void set(NodeId row, NodeId col) {
        const unsigned bit = unsigned(col - 1);
        mutable_row_words(row)[bit >> 6] |= std::uint64_t(1) << (bit & 63);
    }

    std::span<const std::uint64_t> row_words(NodeId row) const {
        return {bits_.data() + std::size_t(row - 1) * words_per_row_, words_per_row_};
    }

    std::span<std::uint64_t> mutable_row_words(NodeId row) {
        return {bits_.data() + std::size_t(row - 1) * words_per_row_, words_per_row_};
    }

    bool operator==(const BoolMatrix &rhs) const = default;

  private:
    int n_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

/// True iff the matrix is the reachability matrix of some DAG: all-ones
/// diagonal, transitive, and with an antisymmetric off-diagonal part.
bool is_reachability_matrix(const BoolMatrix &s);

/// Immutable directed acyclic graph on nodes 1..d. Construction validates
/// the invariants (labels in range, no self-loops, unique edges, acyclic)
/// and rejects cycles with a witness in the message. Derived structure
/// (reachability, transitive reduction/closure) is memoized behind a lock,
/// so a Dag can be shared across threads freely.
class Dag {
  public:
    Dag(int node_count, std::vector<Edge> edges);

    // Copies and moves carry the structure but drop the memo cache; it is
    // rebuilt on demand.
    Dag(const Dag &other);
    Dag &operator=(const Dag &other);
    Dag(Dag &&other) noexcept;
    Dag &operator=(Dag &&other) noexcept;
    ~Dag() = default;

    int node_count() const noexcept { return d_; }

    /// Sorted by (from, to); the index of an edge in this vector is its
    /// stable identifier for weight storage.
    const std::vector<Edge> &edges() const noexcept { return edges_; }

    bool has_edge(NodeId from, NodeId to) const;
    /// Index into edges() for an existing edge.
    std::size_t edge_index(NodeId from, NodeId to) const;

    std::span<const NodeId> parents(NodeId node) const;
    std::span<const NodeId> children(NodeId node) const;

    NodeSet parent_set(NodeId node) const;
    NodeSet ancestors(NodeId node) const;            // an(i), strict
    NodeSet ancestors_and_self(NodeId node) const;   // An(i)
    NodeSet descendants(NodeId node) const;          // de(i), strict
    NodeSet descendants_and_self(NodeId node) const; // De(i)

    /// A well-order of the nodes: every parent precedes its child. Kahn's
    /// algorithm with a smallest-label-first tie break, so the result is
    /// deterministic.
    const std::vector<NodeId> &topological_order() const noexcept { return topo_; }

    const BoolMatrix &reachability() const;

    Dag transitive_reduction() const;
    Dag transitive_closure() const;

    /// True iff the undirected skeleton is a forest; on such graphs every
    /// path is the only one between its endpoints.
    bool is_polytree() const;

    bool is_subgraph_of(const Dag &super) const;

    bool operator==(const Dag &rhs) const { return d_ == rhs.d_ && edges_ == rhs.edges_; }

    void check_node(NodeId node) const;

  private:
    int d_ = 0;
    std::vector<Edge> edges_;
    std::vector<NodeId> topo_;
    // flattened adjacency, sorted per node
    std::vector<NodeId> children_flat_, parents_flat_;
    std::vector<std::size_t> children_offsets_, parents_offsets_;

    mutable std::mutex reach_mutex_;
    mutable std::unique_ptr<const BoolMatrix> reach_;
};

} // namespace maxlin
