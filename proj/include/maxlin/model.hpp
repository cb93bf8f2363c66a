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

#include <span>
#include <utility>
#include <vector>

#include "maxlin/dag.hpp"
#include "maxlin/semiring.hpp"

namespace maxlin {

/// A node sequence [k0, ..., kn] following edges of a Dag, n >= 1.
using Path = std::vector<NodeId>;

/// Recursive max-linear model: each component is the maximum of weighted
/// parent components and an own weighted noise term,
///   X_i = max_{k in pa(i)} c_ki * X_k  v  c_ii * Z_i.
/// Edge weights are stored in the order of dag.edges(); all weights must be
/// strictly positive. Instances are immutable and safe to share.
template <WeightScalar T> class MaxLinModel {
  public:
    MaxLinModel(Dag dag, std::vector<T> edge_weights, std::vector<T> noise_weights)
        : dag_(std::move(dag)), edge_weights_(std::move(edge_weights)),
          noise_weights_(std::move(noise_weights)) {
        if (edge_weights_.size() != dag_.edges().size())
            throw_input("model has " + std::to_string(edge_weights_.size()) +
                        " edge weights for " + std::to_string(dag_.edges().size()) + " edges");
        if (int(noise_weights_.size()) != dag_.node_count())
            throw_input("model has " + std::to_string(noise_weights_.size()) +
                        " noise weights for " + std::to_string(dag_.node_count()) + " nodes");
        for (std::size_t e = 0; e < edge_weights_.size(); ++e)
            if (!scalar_positive(edge_weights_[e]))
                throw_input("edge (" + std::to_string(dag_.edges()[e].from) + "," +
                            std::to_string(dag_.edges()[e].to) + ") needs a positive finite weight, got " +
                            format_scalar(edge_weights_[e]));
        for (int i = 0; i < dag_.node_count(); ++i)
            if (!scalar_positive(noise_weights_[std::size_t(i)]))
                throw_input("node " + std::to_string(i + 1) + " needs a positive finite noise weight, got " +
                            format_scalar(noise_weights_[std::size_t(i)]));
    }

    const Dag &dag() const noexcept { return dag_; }
    int node_count() const noexcept { return dag_.node_count(); }

    /// c_ki for an existing edge (k, i); throws otherwise.
    const T &edge_weight(NodeId k, NodeId i) const {
        return edge_weights_[dag_.edge_index(k, i)];
    }

    const T &edge_weight_at(std::size_t edge_index) const { return edge_weights_[edge_index]; }
    const std::vector<T> &edge_weights() const noexcept { return edge_weights_; }

    /// c_ii.
    const T &noise_weight(NodeId i) const {
        dag_.check_node(i);
        return noise_weights_[std::size_t(i) - 1];
    }

    const std::vector<T> &noise_weights() const noexcept { return noise_weights_; }

  private:
    Dag dag_;
    std::vector<T> edge_weights_;
    std::vector<T> noise_weights_;
};

/// Weighted adjacency matrix A0 with entry (k, i) = c_ki on edges, else 0.
template <WeightScalar T> Matrix<T> weighted_adjacency(const MaxLinModel<T> &model) {
    const int d = model.node_count();
    Matrix<T> a0{std::size_t(d), std::size_t(d)};
    for (std::size_t e = 0; e < model.dag().edges().size(); ++e) {
        const Edge edge = model.dag().edges()[e];
        a0(std::size_t(edge.from) - 1, std::size_t(edge.to) - 1) = model.edge_weight_at(e);
    }
    return a0;
}

/// ML coefficient matrix B of the model: b_ji is the maximum weight over all
/// paths from j to i (the path's edge product times c_jj), b_ii = c_ii, and
/// b_ji = 0 when j is not an ancestor of i. Computed by accumulating
/// max-times powers of the weighted adjacency matrix,
///   B = A v max_{k=0..d-2} (A1 o A0^k),
/// where A = diag(c_11..c_dd) and A1 scales each A0 row by its noise weight.
/// Paths in a d-node DAG have at most d-1 edges, and the running power is
/// dropped early once it hits the zero matrix.
template <WeightScalar T> Matrix<T> ml_coefficients(const MaxLinModel<T> &model) {
    const int d = model.node_count();
    Matrix<T> diag{std::size_t(d), std::size_t(d)};
    for (NodeId i = 1; i <= d; ++i)
        diag(std::size_t(i) - 1, std::size_t(i) - 1) = model.noise_weight(i);
    if (d == 1)
        return diag;

    const Matrix<T> a0 = weighted_adjacency(model);
    Matrix<T> term = a0; // becomes A1: row j scaled by c_jj
    for (NodeId j = 1; j <= d; ++j)
        for (std::size_t c = 0; c < std::size_t(d); ++c)
            term(std::size_t(j) - 1, c) = model.noise_weight(j) * term(std::size_t(j) - 1, c);

    Matrix<T> b = elementwise_max(diag, term);
    for (int k = 1; k <= d - 2; ++k) {
        term = max_times_product(term, a0);
        if (is_zero_matrix(term))
            break;
        b = elementwise_max(b, term);
    }
    return b;
}

/// Same matrix as ml_coefficients, computed in the log domain: products of
/// weights become sums of logs, so maxima over long sub-unit paths do not
/// underflow while being compared. Entries of the result that are smaller
/// than the smallest positive double still flush to zero on the way back.
inline Matrix<double> ml_coefficients_logdomain(const MaxLinModel<double> &model) {
    const int d = model.node_count();
    Matrix<double> diag{std::size_t(d), std::size_t(d)};
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::size_t(d); ++r)
        for (std::size_t c = 0; c < std::size_t(d); ++c)
            diag(r, c) = r == c ? std::log(model.noise_weight(NodeId(r) + 1)) : neg_inf;
    if (d == 1)
        return from_log_domain(diag);

    const Matrix<double> a0 = to_log_domain(weighted_adjacency(model));
    Matrix<double> term = a0;
    for (NodeId j = 1; j <= d; ++j)
        for (std::size_t c = 0; c < std::size_t(d); ++c)
            term(std::size_t(j) - 1, c) += std::log(model.noise_weight(j));

    Matrix<double> b = diag;
    const auto log_max = [](Matrix<double> &acc, const Matrix<double> &rhs) {
        for (std::size_t r = 0; r < acc.rows(); ++r)
            for (std::size_t c = 0; c < acc.cols(); ++c)
                acc(r, c) = std::max(acc(r, c), rhs(r, c));
    };
    log_max(b, term);
    for (int k = 1; k <= d - 2; ++k) {
        term = max_plus_product(term, a0);
        bool all_empty = true;
        for (std::size_t r = 0; r < term.rows() && all_empty; ++r)
            for (std::size_t c = 0; c < term.cols(); ++c)
                if (term(r, c) != neg_inf) {
                    all_empty = false;
                    break;
                }
        if (all_empty)
            break;
        log_max(b, term);
    }
    return from_log_domain(b);
}

/// Weight of a path p = [k0, ..., kn]: c_{k0,k0} * prod of edge weights.
/// Throws when the node sequence is not a path of the model's DAG.
template <WeightScalar T> T path_weight(const MaxLinModel<T> &model, const Path &p) {
    if (p.size() < 2)
        throw_input("a path needs at least one edge");
    std::vector<bool> used(std::size_t(model.node_count()) + 1, false);
    for (NodeId v : p) {
        model.dag().check_node(v);
        if (used[std::size_t(v)])
            throw_input("path repeats node " + std::to_string(v));
        used[std::size_t(v)] = true;
    }
    T weight = model.noise_weight(p.front());
    for (std::size_t s = 0; s + 1 < p.size(); ++s) {
        if (!model.dag().has_edge(p[s], p[s + 1]))
            throw_input("path step (" + std::to_string(p[s]) + "," + std::to_string(p[s + 1]) +
                        ") is not an edge");
        weight = weight * model.edge_weight(p[s], p[s + 1]);
    }
    return weight;
}

/// Reference route for the coefficient matrix: explicit enumeration of every
/// path between every ancestral pair. Exponential; guarded by a cap on the
/// number of enumerated paths and meant for desk-scale checking only.
template <WeightScalar T>
Matrix<T> ml_coefficients_by_enumeration(const MaxLinModel<T> &model,
                                         std::size_t path_cap = 1'000'000) {
    const int d = model.node_count();
    Matrix<T> b{std::size_t(d), std::size_t(d)};
    for (NodeId i = 1; i <= d; ++i)
        b(std::size_t(i) - 1, std::size_t(i) - 1) = model.noise_weight(i);

    std::size_t paths_seen = 0;
    // every enumerated path from j is an extension of its prefix, so one
    // depth-first sweep per source scores all of P_j*
    const auto walk = [&](auto &&self, NodeId source, NodeId at, const T &weight) -> void {
        for (NodeId next : model.dag().children(at)) {
            if (++paths_seen > path_cap)
                throw_input("path enumeration exceeded cap of " + std::to_string(path_cap));
            const T extended = weight * model.edge_weight(at, next);
            T &cell = b(std::size_t(source) - 1, std::size_t(next) - 1);
            cell = std::max(cell, extended);
            self(self, source, next, extended);
        }
    };
    for (NodeId j = 1; j <= d; ++j)
        walk(walk, j, j, model.noise_weight(j));
    return b;
}

/// X = Z o B for one noise row: x_i = max_j b_ji * z_j.
template <WeightScalar T>
std::vector<T> max_linear_eval(const Matrix<T> &b, std::span<const T> z) {
    if (!b.is_square() || z.size() != b.rows())
        throw_input("noise vector length " + std::to_string(z.size()) +
                    " does not match matrix of size " + std::to_string(b.rows()));
    for (const T &v : z)
        if (!scalar_nonnegative(v))
            throw_input("negative noise component");
    std::vector<T> x(z.size(), scalar_zero<T>());
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (z[j] == scalar_zero<T>())
            continue;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const T candidate = b(j, i) * z[j];
            x[i] = std::max(x[i], candidate);
        }
    }
    return x;
}

/// Evaluates the defining recursion directly in topological order. This is
/// a second, independent route to the same vector as max_linear_eval over
/// ml_coefficients; the two are checked against each other.
template <WeightScalar T>
std::vector<T> evaluate_recursive(const MaxLinModel<T> &model, std::span<const T> z) {
    const int d = model.node_count();
    if (int(z.size()) != d)
        throw_input("noise vector length does not match node count");
    for (const T &v : z)
        if (!scalar_nonnegative(v))
            throw_input("negative noise component");
    std::vector<T> x(std::size_t(d), scalar_zero<T>());
    for (NodeId i : model.dag().topological_order()) {
        T value = model.noise_weight(i) * z[std::size_t(i) - 1];
        for (NodeId k : model.dag().parents(i))
            value = std::max(value, model.edge_weight(k, i) * x[std::size_t(k) - 1]);
        x[std::size_t(i) - 1] = value;
    }
    return x;
}

} // namespace maxlin
