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

#include "maxlin/model.hpp"
#include "maxlin/tolerance.hpp"

namespace maxlin {

/// 0/1 pattern of a non-negative matrix; for a coefficient matrix this is
/// the reachability relation of the underlying DAG.
template <WeightScalar T> BoolMatrix sign_pattern(const Matrix<T> &m) {
    if (!m.is_square())
        throw_input("sign pattern of a non-square matrix");
    BoolMatrix s(int(m.rows()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (scalar_positive(m(r, c)))
                s.set(NodeId(r) + 1, NodeId(c) + 1);
    return s;
}

namespace detail {

template <WeightScalar T>
const T &coeff(const Matrix<T> &b, NodeId j, NodeId i) {
    return b(std::size_t(j) - 1, std::size_t(i) - 1);
}

template <WeightScalar T> void require_node(const Matrix<T> &b, NodeId node) {
    if (node < 1 || std::size_t(node) > b.rows())
        throw_graph("node " + std::to_string(node) + " outside range 1.." +
                    std::to_string(b.rows()));
}

template <WeightScalar T>
void require_ancestor(const Matrix<T> &b, NodeId j, NodeId i) {
    require_node(b, j);
    require_node(b, i);
    if (j == i || !scalar_positive(coeff(b, j, i)))
        throw_input("node " + std::to_string(j) + " is not an ancestor of node " +
                    std::to_string(i) + " under this coefficient matrix");
}

template <WeightScalar T> void require_positive_diagonal(const Matrix<T> &b) {
    if (!b.is_square())
        throw_input("coefficient matrix must be square");
    for (std::size_t k = 0; k < b.rows(); ++k)
        if (!scalar_positive(b(k, k)))
            throw_matrix("coefficient matrix has non-positive diagonal entry at node " +
                         std::to_string(k + 1));
}

} // namespace detail

/// True iff the path attains the coefficient b_{j,i} between its endpoints,
/// i.e. no other route from j to i carries more weight.
template <WeightScalar T>
bool is_max_weighted(const MaxLinModel<T> &model, const Matrix<T> &b, const Path &p,
                     const Tolerance &tol = {}) {
    const T weight = path_weight(model, p);
    return tol_equal(weight, detail::coeff(b, p.front(), p.back()), tol);
}

/// Whether some max-weighted path from j to i passes through a node of U.
/// Requires j to be an ancestor of i. Decided on the coefficient matrix
/// alone: the criterion is b_ji = max over k in De(j) n U n An(i) of
/// b_jk b_ki / b_kk, with the empty maximum reading as 0 (so U empty or
/// disjoint from every j-i route yields false).
template <WeightScalar T>
bool has_max_weighted_path_through(const Matrix<T> &b, NodeId j, NodeId i, const NodeSet &U,
                                   const Tolerance &tol = {}) {
    detail::require_positive_diagonal(b);
    detail::require_ancestor(b, j, i);
    const int d = int(b.rows());
    T best = scalar_zero<T>();
    for (NodeId k = 1; k <= d; ++k) {
        if (!U.contains(k))
            continue;
        if (!scalar_positive(detail::coeff(b, j, k)) || !scalar_positive(detail::coeff(b, k, i)))
            continue; // k not in De(j) n An(i)
        best = std::max(best, detail::coeff(b, j, k) * detail::coeff(b, k, i) /
                                  detail::coeff(b, k, k));
    }
    return tol_equal(best, detail::coeff(b, j, i), tol);
}

/// A polytree on An(i) holding, for every ancestor j of i, exactly one path
/// from j to i that is max-weighted in the full DAG. Each ancestor keeps a
/// single outgoing edge: the lowest-labeled child through which its best
/// weight to i is still attained. Ties between equally good children go to
/// the smaller label, making the result deterministic.
template <WeightScalar T>
Dag max_weighted_polytree(const MaxLinModel<T> &model, const Matrix<T> &b, NodeId i,
                          const Tolerance &tol = {}) {
    model.dag().check_node(i);
    const NodeSet an_i = model.dag().ancestors_and_self(i);
    std::vector<Edge> edges;
    for (NodeId j : an_i.to_vector()) {
        if (j == i)
            continue;
        const T target = detail::coeff(b, j, i);
        NodeId chosen = 0;
        for (NodeId k : model.dag().children(j)) {
            if (!an_i.contains(k))
                continue;
            // weight of [j -> k] extended by any max-weighted k-to-i path
            const T via_k = k == i ? model.noise_weight(j) * model.edge_weight(j, k)
                                   : model.noise_weight(j) * model.edge_weight(j, k) *
                                         detail::coeff(b, k, i) / model.noise_weight(k);
            if (tol_equal(via_k, target, tol)) {
                chosen = k;
                break; // children are sorted, so this is the smallest
            }
        }
        if (chosen == 0)
            throw_matrix("coefficient matrix is inconsistent with the model weights at node " +
                         std::to_string(j));
        edges.push_back({j, chosen});
    }
    return Dag(model.node_count(), std::move(edges));
}

/// The model restricted to a subgraph: same node set, same weights, edges
/// cut down to the subgraph's. Nodes outside the subgraph's reach simply
/// lose their incoming routes.
template <WeightScalar T>
MaxLinModel<T> induced_submodel(const MaxLinModel<T> &model, const Dag &subdag) {
    if (subdag.node_count() != model.node_count())
        throw_input("submodel DAG has a different node count");
    if (!subdag.is_subgraph_of(model.dag()))
        throw_input("DAG is not a subgraph of the model's DAG");
    std::vector<T> weights;
    weights.reserve(subdag.edges().size());
    for (const Edge &e : subdag.edges())
        weights.push_back(model.edge_weight(e.from, e.to));
    return MaxLinModel<T>(subdag, std::move(weights), model.noise_weights());
}

} // namespace maxlin
