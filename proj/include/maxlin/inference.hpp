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

#include <map>
#include <optional>

#include "maxlin/structure.hpp"

namespace maxlin {

/// Lowest max-weighted ancestors of i in U: the nodes of U that can tighten
/// the lower bound on X_i. For i in U that is i itself; otherwise the
/// ancestors j in U whose best route to i is not matched by any route
/// through a further node of U.
template <WeightScalar T>
NodeSet lowest_max_weighted_ancestors(const Matrix<T> &b, NodeId i, const NodeSet &U,
                                      const Tolerance &tol = {}) {
    detail::require_positive_diagonal(b);
    detail::require_node(b, i);
    const int d = int(b.rows());
    NodeSet out(d);
    if (U.contains(i)) {
        out.insert(i);
        return out;
    }
    for (NodeId j = 1; j <= d; ++j) {
        if (j == i || !U.contains(j) || !scalar_positive(detail::coeff(b, j, i)))
            continue;
        T best = scalar_zero<T>();
        for (NodeId k = 1; k <= d; ++k) { // k in de(j) n U n an(i)
            if (k == j || k == i || !U.contains(k))
                continue;
            if (!scalar_positive(detail::coeff(b, j, k)) ||
                !scalar_positive(detail::coeff(b, k, i)))
                continue;
            best = std::max(best, detail::coeff(b, j, k) * detail::coeff(b, k, i) /
                                      detail::coeff(b, k, k));
        }
        if (tol_greater(detail::coeff(b, j, i), best, tol))
            out.insert(j);
    }
    return out;
}

/// Mirror notion downstream: the descendants of i in U that can tighten the
/// upper bound on X_i.
template <WeightScalar T>
NodeSet highest_max_weighted_descendants(const Matrix<T> &b, NodeId i, const NodeSet &U,
                                         const Tolerance &tol = {}) {
    detail::require_positive_diagonal(b);
    detail::require_node(b, i);
    const int d = int(b.rows());
    NodeSet out(d);
    if (U.contains(i)) {
        out.insert(i);
        return out;
    }
    for (NodeId l = 1; l <= d; ++l) {
        if (l == i || !U.contains(l) || !scalar_positive(detail::coeff(b, i, l)))
            continue;
        T best = scalar_zero<T>();
        for (NodeId k = 1; k <= d; ++k) { // k in de(i) n U n an(l)
            if (k == i || k == l || !U.contains(k))
                continue;
            if (!scalar_positive(detail::coeff(b, i, k)) ||
                !scalar_positive(detail::coeff(b, k, l)))
                continue;
            best = std::max(best, detail::coeff(b, i, k) * detail::coeff(b, k, l) /
                                      detail::coeff(b, k, k));
        }
        if (tol_greater(detail::coeff(b, i, l), best, tol))
            out.insert(l);
    }
    return out;
}

/// Ancestors of i none of whose max-weighted routes to i touch U. Their
/// noise variables cannot be eliminated when i is expressed through X_U.
/// Note the inclusive index set: a node of U that is j itself or i counts
/// as touching.
template <WeightScalar T>
NodeSet non_max_weighted_ancestors(const Matrix<T> &b, NodeId i, const NodeSet &U,
                                   const Tolerance &tol = {}) {
    detail::require_positive_diagonal(b);
    detail::require_node(b, i);
    const int d = int(b.rows());
    NodeSet out(d);
    for (NodeId j = 1; j <= d; ++j) {
        if (j == i || !scalar_positive(detail::coeff(b, j, i)))
            continue;
        T best = scalar_zero<T>();
        for (NodeId k = 1; k <= d; ++k) { // k in De(j) n U n An(i), endpoints included
            if (!U.contains(k))
                continue;
            if (!scalar_positive(detail::coeff(b, j, k)) ||
                !scalar_positive(detail::coeff(b, k, i)))
                continue;
            best = std::max(best, detail::coeff(b, j, k) * detail::coeff(b, k, i) /
                                      detail::coeff(b, k, k));
        }
        if (tol_greater(detail::coeff(b, j, i), best, tol))
            out.insert(j);
    }
    return out;
}

/// Interval [lower, upper] with upper possibly +infinity (empty bound set).
template <WeightScalar T> struct Bounds {
    T lower{};
    std::optional<T> upper; // nullopt = +infinity
};

/// Tightest interval for X_i given observed components x over U:
///   max_{j in AnLow} (b_ji / b_jj) x_j <= X_i <= min_{l in DeHigh} (b_ii / b_il) x_l
/// with the conventions max over empty = 0, min over empty = +infinity.
/// Observations must be non-negative but are not checked for mutual
/// consistency (whether any noise vector could realize them); inconsistent
/// input yields an inconsistent interval.
template <WeightScalar T>
Bounds<T> bounds(const Matrix<T> &b, NodeId i, const NodeSet &U, const std::map<NodeId, T> &x,
                 const Tolerance &tol = {}) {
    for (const auto &[node, value] : x)
        if (!scalar_nonnegative(value))
            throw_input("negative observation at node " + std::to_string(node));
    const auto observed = [&x](NodeId node) -> const T & {
        const auto it = x.find(node);
        if (it == x.end())
            throw_input("no observed value for node " + std::to_string(node));
        return it->second;
    };

    Bounds<T> out;
    out.lower = scalar_zero<T>();
    for (NodeId j : lowest_max_weighted_ancestors(b, i, U, tol).to_vector())
        out.lower = std::max(out.lower, detail::coeff(b, j, i) / detail::coeff(b, j, j) *
                                            observed(j));
    for (NodeId l : highest_max_weighted_descendants(b, i, U, tol).to_vector()) {
        const T candidate = detail::coeff(b, i, i) / detail::coeff(b, i, l) * observed(l);
        if (!out.upper || candidate < *out.upper)
            out.upper = candidate;
    }
    return out;
}

/// Max-linear expression for one component in terms of others and noise:
/// X_i = max over node_terms (coeff_k X_k) v max over noise_terms
/// (coeff_j Z_j). Terms are sorted by node label.
template <WeightScalar T> struct Representation {
    std::vector<std::pair<NodeId, T>> node_terms;
    std::vector<std::pair<NodeId, T>> noise_terms;
};

/// The representation of X_i through X_U with the fewest observed components
/// and the fewest noise variables: observed terms over the lowest
/// max-weighted ancestors, noise terms over the ancestors (and i itself)
/// whose noise cannot reach i max-weightedly through U.
template <WeightScalar T>
Representation<T> minimal_representation(const Matrix<T> &b, NodeId i, const NodeSet &U,
                                         const Tolerance &tol = {}) {
    Representation<T> out;
    for (NodeId k : lowest_max_weighted_ancestors(b, i, U, tol).to_vector())
        out.node_terms.emplace_back(k, detail::coeff(b, k, i) / detail::coeff(b, k, k));
    NodeSet noise_nodes = non_max_weighted_ancestors(b, i, U, tol);
    noise_nodes.insert(i);
    for (NodeId j : noise_nodes.to_vector())
        if (!U.contains(j))
            out.noise_terms.emplace_back(j, detail::coeff(b, j, i));
    return out;
}

/// Minimal recursion for X_i over its minimum-DAG parents:
/// X_i = max_{k in pa_B(i)} (b_ki / b_kk) X_k v b_ii Z_i.
template <WeightScalar T>
Representation<T> parent_representation(const Matrix<T> &b, NodeId i, const Tolerance &tol = {}) {
    const Dag minimum = minimum_ml_dag(b, tol);
    minimum.check_node(i);
    Representation<T> out;
    for (NodeId k : minimum.parents(i))
        out.node_terms.emplace_back(k, detail::coeff(b, k, i) / detail::coeff(b, k, k));
    out.noise_terms.emplace_back(i, detail::coeff(b, i, i));
    return out;
}

/// Evaluates a representation against full sample vectors (1-based nodes).
template <WeightScalar T>
T evaluate_representation(const Representation<T> &rep, std::span<const T> x,
                          std::span<const T> z) {
    T value = scalar_zero<T>();
    for (const auto &[node, coeff] : rep.node_terms)
        value = std::max(value, coeff * x[std::size_t(node) - 1]);
    for (const auto &[node, coeff] : rep.noise_terms)
        value = std::max(value, coeff * z[std::size_t(node) - 1]);
    return value;
}

} // namespace maxlin
