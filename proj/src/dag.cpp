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

#include "maxlin/dag.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace maxlin {

namespace {

// Builds the error text for a rejected cyclic edge set. `leftover` marks the
// nodes Kahn's algorithm could not order; every leftover node has a leftover
// parent, so walking parents inside the leftover set must close a loop.
std::string cycle_witness(int d, const std::vector<Edge> &edges,
                          const std::vector<bool> &leftover) {
    std::vector<std::vector<NodeId>> pars(std::size_t(d) + 1);
    for (const Edge &e : edges)
        if (leftover[std::size_t(e.from)] && leftover[std::size_t(e.to)])
            pars[std::size_t(e.to)].push_back(e.from);

    NodeId start = 0;
    for (NodeId v = 1; v <= d; ++v)
        if (leftover[std::size_t(v)]) {
            start = v;
            break;
        }

    std::vector<NodeId> trail{start};
    std::vector<bool> seen(std::size_t(d) + 1, false);
    seen[std::size_t(start)] = true;
    NodeId cur = start;
    while (true) {
        const NodeId next = pars[std::size_t(cur)].front();
        if (seen[std::size_t(next)]) {
            // trail[j+1] -> trail[j] are edges, as is next -> trail.back();
            // walking the trail backwards down to `next` closes the loop
            auto loop_start = std::find(trail.begin(), trail.end(), next);
            std::string msg = std::to_string(next);
            for (auto walk = trail.end(); walk != loop_start;) {
                --walk;
                msg += " -> " + std::to_string(*walk);
            }
            return msg;
        }
        seen[std::size_t(next)] = true;
        trail.push_back(next);
        cur = next;
    }
}

} // namespace

Dag::Dag(int node_count, std::vector<Edge> edges) : d_(node_count), edges_(std::move(edges)) {
    if (d_ < 1)
        throw_graph("a DAG needs at least one node");
    for (const Edge &e : edges_) {
        if (e.from < 1 || e.from > d_ || e.to < 1 || e.to > d_)
            throw_graph("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                        ") outside node range 1.." + std::to_string(d_));
        if (e.from == e.to)
            throw_graph("self-loop at node " + std::to_string(e.from));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw_graph("duplicate edge (" + std::to_string(dup->from) + "," +
                    std::to_string(dup->to) + ")");

    std::vector<std::vector<NodeId>> kids(std::size_t(d_) + 1), pars(std::size_t(d_) + 1);
    for (const Edge &e : edges_) {
        kids[std::size_t(e.from)].push_back(e.to);
        pars[std::size_t(e.to)].push_back(e.from);
    }
    children_offsets_.assign(1, 0);
    parents_offsets_.assign(1, 0);
    for (NodeId v = 1; v <= d_; ++v) {
        std::sort(kids[std::size_t(v)].begin(), kids[std::size_t(v)].end());
        std::sort(pars[std::size_t(v)].begin(), pars[std::size_t(v)].end());
        children_flat_.insert(children_flat_.end(), kids[std::size_t(v)].begin(),
                              kids[std::size_t(v)].end());
        parents_flat_.insert(parents_flat_.end(), pars[std::size_t(v)].begin(),
                             pars[std::size_t(v)].end());
        children_offsets_.push_back(children_flat_.size());
        parents_offsets_.push_back(parents_flat_.size());
    }

    // Kahn with a min-heap: deterministic well-order plus cycle detection.
    std::vector<int> indegree(std::size_t(d_) + 1, 0);
    for (const Edge &e : edges_)
        ++indegree[std::size_t(e.to)];
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (NodeId v = 1; v <= d_; ++v)
        if (indegree[std::size_t(v)] == 0)
            ready.push(v);
    topo_.reserve(std::size_t(d_));
    while (!ready.empty()) {
        const NodeId v = ready.top();
        ready.pop();
        topo_.push_back(v);
        for (NodeId c : children(v))
            if (--indegree[std::size_t(c)] == 0)
                ready.push(c);
    }
    if (int(topo_.size()) != d_) {
        std::vector<bool> leftover(std::size_t(d_) + 1, true);
        for (NodeId v : topo_)
            leftover[std::size_t(v)] = false;
        throw_graph("edge set has a cycle: " + cycle_witness(d_, edges_, leftover));
    }
}

Dag::Dag(const Dag &other)
    : d_(other.d_), edges_(other.edges_), topo_(other.topo_),
      children_flat_(other.children_flat_), parents_flat_(other.parents_flat_),
      children_offsets_(other.children_offsets_), parents_offsets_(other.parents_offsets_) {}

Dag &Dag::operator=(const Dag &other) {
    if (this != &other) {
        Dag copy(other);
        *this = std::move(copy);
    }
    return *this;
}

Dag::Dag(Dag &&other) noexcept
    : d_(other.d_), edges_(std::move(other.edges_)), topo_(std::move(other.topo_)),
      children_flat_(std::move(other.children_flat_)),
      parents_flat_(std::move(other.parents_flat_)),
      children_offsets_(std::move(other.children_offsets_)),
      parents_offsets_(std::move(other.parents_offsets_)) {}

Dag &Dag::operator=(Dag &&other) noexcept {
    d_ = other.d_;
    edges_ = std::move(other.edges_);
    topo_ = std::move(other.topo_);
    children_flat_ = std::move(other.children_flat_);
    parents_flat_ = std::move(other.parents_flat_);
    children_offsets_ = std::move(other.children_offsets_);
    parents_offsets_ = std::move(other.parents_offsets_);
    reach_.reset();
    return *this;
}

void Dag::check_node(NodeId node) const {
    if (node < 1 || node > d_)
        throw_graph("node " + std::to_string(node) + " outside range 1.." + std::to_string(d_));
}

bool Dag::has_edge(NodeId from, NodeId to) const {
    const auto kids = children(from);
    return std::binary_search(kids.begin(), kids.end(), to);
}

std::size_t Dag::edge_index(NodeId from, NodeId to) const {
    const Edge probe{from, to};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it == edges_.end() || !(*it == probe))
        throw_graph("no edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
    return std::size_t(it - edges_.begin());
}

std::span<const NodeId> Dag::parents(NodeId node) const {
    check_node(node);
    return {parents_flat_.data() + parents_offsets_[std::size_t(node) - 1],
            parents_offsets_[std::size_t(node)] - parents_offsets_[std::size_t(node) - 1]};
}

std::span<const NodeId> Dag::children(NodeId node) const {
    check_node(node);
    return {children_flat_.data() + children_offsets_[std::size_t(node) - 1],
            children_offsets_[std::size_t(node)] - children_offsets_[std::size_t(node) - 1]};
}

NodeSet Dag::parent_set(NodeId node) const {
    NodeSet out(d_);
    for (NodeId p : parents(node))
        out.insert(p);
    return out;
}

const BoolMatrix &Dag::reachability() const {
    std::scoped_lock lock(reach_mutex_);
    if (!reach_) {
        auto reach = std::make_unique<BoolMatrix>(d_);
        // reverse topological order: a node's row is itself plus the union
        // of its children's rows
        for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
            const NodeId v = *it;
            reach->set(v, v);
            auto row = reach->mutable_row_words(v);
            for (NodeId c : children(v)) {
                const auto child_row = reach->row_words(c);
                for (std::size_t w = 0; w < row.size(); ++w)
                    row[w] |= child_row[w];
            }
        }
        reach_ = std::move(reach);
    }
    return *reach_;
}

NodeSet Dag::descendants_and_self(NodeId node) const {
    check_node(node);
    const BoolMatrix &r = reachability();
    NodeSet out(d_);
    for (NodeId i = 1; i <= d_; ++i)
        if (r.get(node, i))
            out.insert(i);
    return out;
}

NodeSet Dag::descendants(NodeId node) const {
    NodeSet out = descendants_and_self(node);
    out.erase(node);
    return out;
}

NodeSet Dag::ancestors_and_self(NodeId node) const {
    check_node(node);
    const BoolMatrix &r = reachability();
    NodeSet out(d_);
    for (NodeId j = 1; j <= d_; ++j)
        if (r.get(j, node))
            out.insert(j);
    return out;
}

NodeSet Dag::ancestors(NodeId node) const {
    NodeSet out = ancestors_and_self(node);
    out.erase(node);
    return out;
}

Dag Dag::transitive_reduction() const {
    // Delete an edge k -> i when some other child of k already reaches i;
    // for a finite DAG the result is unique, so scan order is irrelevant.
    const BoolMatrix &r = reachability();
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge &e : edges_) {
        bool bypassed = false;
        for (NodeId c : children(e.from)) {
            if (c != e.to && r.get(c, e.to)) {
                bypassed = true;
                break;
            }
        }
        if (!bypassed)
            kept.push_back(e);
    }
    return Dag(d_, std::move(kept));
}

Dag Dag::transitive_closure() const {
    const BoolMatrix &r = reachability();
    std::vector<Edge> closure;
    for (NodeId j = 1; j <= d_; ++j)
        for (NodeId i = 1; i <= d_; ++i)
            if (j != i && r.get(j, i))
                closure.push_back({j, i});
    return Dag(d_, std::move(closure));
}

bool Dag::is_polytree() const {
    // union-find over the undirected skeleton; a repeated root means a cycle
    std::vector<NodeId> root(std::size_t(d_) + 1);
    for (NodeId v = 1; v <= d_; ++v)
        root[std::size_t(v)] = v;
    const auto find = [&root](NodeId v) {
        while (root[std::size_t(v)] != v) {
            root[std::size_t(v)] = root[std::size_t(root[std::size_t(v)])];
            v = root[std::size_t(v)];
        }
        return v;
    };
    for (const Edge &e : edges_) {
        const NodeId a = find(e.from), b = find(e.to);
        if (a == b)
            return false;
        root[std::size_t(a)] = b;
    }
    return true;
}

bool Dag::is_subgraph_of(const Dag &super) const {
    if (d_ != super.d_)
        return false;
    return std::includes(super.edges_.begin(), super.edges_.end(), edges_.begin(), edges_.end());
}

bool is_reachability_matrix(const BoolMatrix &s) {
    const int n = s.size();
    for (NodeId v = 1; v <= n; ++v)
        if (!s.get(v, v))
            return false;
    for (NodeId j = 1; j <= n; ++j)
        for (NodeId i = 1; i <= n; ++i) {
            if (j == i || !s.get(j, i))
                continue;
            if (s.get(i, j))
                return false; // a two-way reach off the diagonal is a cycle
            // transitivity: everything i reaches, j must reach
            const auto row_j = s.row_words(j);
            const auto row_i = s.row_words(i);
            for (std::size_t w = 0; w < row_j.size(); ++w)
                if ((row_i[w] & ~row_j[w]) != 0)
                    return false;
        }
    return true;
}

} // namespace maxlin
