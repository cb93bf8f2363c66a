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

#include <optional>

#include "maxlin/paths.hpp"

namespace maxlin {

/// One failed equality of a fixed-point check: entry (j, i) should equal
/// rhs but holds lhs. Kept as values so fixtures can be debugged against
/// hand computation.
template <WeightScalar T> struct FixedPointViolation {
    NodeId j = 0;
    NodeId i = 0;
    T lhs{};
    T rhs{};
};

template <WeightScalar T> struct DagValidation {
    bool valid = false;
    std::vector<FixedPointViolation<T>> violations;
};

/// Defect classes reported by validate_b.
enum class BDefect {
    not_square,
    negative_entry,
    nonfinite_entry,
    zero_diagonal,
    sign_not_reachability,
    fixed_point_violated,
};

inline const char *to_string(BDefect defect) {
    switch (defect) {
    case BDefect::not_square: return "not_square";
    case BDefect::negative_entry: return "negative_entry";
    case BDefect::nonfinite_entry: return "nonfinite_entry";
    case BDefect::zero_diagonal: return "zero_diagonal";
    case BDefect::sign_not_reachability: return "sign_not_reachability";
    case BDefect::fixed_point_violated: return "fixed_point_violated";
    }
    return "unknown";
}

template <WeightScalar T> struct BValidation {
    bool valid = false;
    std::vector<BDefect> defects;
    std::vector<FixedPointViolation<T>> violations;
};

/// Is B the coefficient matrix of some recursive model on the given DAG?
/// Checks the fixed point B = A v B o A0 where A = diag(b_11..b_dd) and A0
/// carries b_ij / b_ii on the DAG's edges. The sign pattern of B must equal
/// the DAG's reachability matrix up front; a mismatch is a precondition
/// failure, not a negative verdict.
template <WeightScalar T>
DagValidation<T> validate_on_dag(const Matrix<T> &b, const Dag &dag, const Tolerance &tol = {}) {
    if (!b.is_square() || int(b.rows()) != dag.node_count())
        throw_input("coefficient matrix size does not match the DAG");
    b.require_nonnegative("validate_on_dag");
    detail::require_positive_diagonal(b);
    if (sign_pattern(b) != dag.reachability())
        throw_input("sign pattern of B is not the reachability matrix of the DAG");

    DagValidation<T> out;
    out.valid = true;
    const int d = dag.node_count();
    for (NodeId j = 1; j <= d; ++j)
        for (NodeId i = 1; i <= d; ++i) {
            T rhs = j == i ? detail::coeff(b, i, i) : scalar_zero<T>();
            for (NodeId k : dag.parents(i)) {
                if (!scalar_positive(detail::coeff(b, j, k)))
                    continue;
                rhs = std::max(rhs, detail::coeff(b, j, k) * detail::coeff(b, k, i) /
                                        detail::coeff(b, k, k));
            }
            if (!tol_equal(detail::coeff(b, j, i), rhs, tol)) {
                out.valid = false;
                out.violations.push_back({j, i, detail::coeff(b, j, i), rhs});
            }
        }
    return out;
}

/// Is B the coefficient matrix of a recursive model on *some* DAG? True iff
/// the sign pattern is a reachability matrix and B = B o B0 holds, where B0
/// scales row i of B by 1 / b_ii. Never throws; failures come back as
/// defect codes plus the violated entries.
template <WeightScalar T>
BValidation<T> validate_b(const Matrix<T> &b, const Tolerance &tol = {}) {
    BValidation<T> out;
    if (!b.is_square()) {
        out.defects.push_back(BDefect::not_square);
        return out;
    }
    const int d = int(b.rows());
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (!scalar_finite(b(r, c))) {
                out.defects.push_back(BDefect::nonfinite_entry);
                return out;
            }
            if (!scalar_nonnegative(b(r, c))) {
                out.defects.push_back(BDefect::negative_entry);
                return out;
            }
        }
    for (std::size_t k = 0; k < b.rows(); ++k)
        if (!scalar_positive(b(k, k))) {
            out.defects.push_back(BDefect::zero_diagonal);
            return out;
        }
    if (!is_reachability_matrix(sign_pattern(b)))
        out.defects.push_back(BDefect::sign_not_reachability);

    // entry (j,i) of B o B0 is max_k b_jk b_ki / b_kk and always >= b_ji
    // (take k = i), so only upward violations can exist
    bool fixed_point_ok = true;
    for (NodeId j = 1; j <= d; ++j)
        for (NodeId i = 1; i <= d; ++i) {
            T rhs = scalar_zero<T>();
            for (NodeId k = 1; k <= d; ++k) {
                if (!scalar_positive(detail::coeff(b, j, k)) ||
                    !scalar_positive(detail::coeff(b, k, i)))
                    continue;
                rhs = std::max(rhs, detail::coeff(b, j, k) * detail::coeff(b, k, i) /
                                        detail::coeff(b, k, k));
            }
            if (!tol_equal(detail::coeff(b, j, i), rhs, tol)) {
                fixed_point_ok = false;
                out.violations.push_back({j, i, detail::coeff(b, j, i), rhs});
            }
        }
    if (!fixed_point_ok)
        out.defects.push_back(BDefect::fixed_point_violated);
    out.valid = out.defects.empty();
    return out;
}

[[noreturn]] inline void throw_invalid_b(const std::vector<BDefect> &defects) {
    std::string msg = "matrix is not a valid ML coefficient matrix:";
    for (BDefect defect : defects)
        msg += std::string(" ") + to_string(defect);
    throw_matrix(msg);
}

/// Minimum ML DAG from the model's DAG and its coefficient matrix: an edge
/// (k, i) survives iff it is the unique max-weighted path from k to i,
/// i.e. b_ki strictly exceeds every two-leg route through another parent
/// of i.
template <WeightScalar T>
Dag minimum_ml_dag(const MaxLinModel<T> &model, const Matrix<T> &b, const Tolerance &tol = {}) {
    if (!b.is_square() || int(b.rows()) != model.node_count())
        throw_matrix("coefficient matrix size does not match the model");
    detail::require_positive_diagonal(b);
    if (sign_pattern(b) != model.dag().reachability())
        throw_matrix("coefficient matrix is inconsistent with the model's DAG");
    if (!validate_on_dag(b, model.dag(), tol).valid)
        throw_matrix("coefficient matrix does not satisfy the fixed point on the model's DAG");
    std::vector<Edge> kept;
    for (const Edge &e : model.dag().edges()) {
        T bypass = scalar_zero<T>();
        for (NodeId l : model.dag().parents(e.to)) {
            if (l == e.from || !scalar_positive(detail::coeff(b, e.from, l)))
                continue; // needs l in de(from) n pa(to)
            bypass = std::max(bypass, detail::coeff(b, e.from, l) * detail::coeff(b, l, e.to) /
                                          detail::coeff(b, l, l));
        }
        if (tol_greater(detail::coeff(b, e.from, e.to), bypass, tol))
            kept.push_back(e);
    }
    return Dag(model.node_count(), std::move(kept));
}

/// Minimum ML DAG identified from the coefficient matrix alone: edges are
/// the pairs (k, i) whose coefficient strictly beats every two-leg route
/// through a third node. Requires validate_b to pass.
template <WeightScalar T>
Dag minimum_ml_dag(const Matrix<T> &b, const Tolerance &tol = {}) {
    if (const auto check = validate_b(b, tol); !check.valid)
        throw_invalid_b(check.defects);
    const int d = int(b.rows());
    std::vector<Edge> edges;
    for (NodeId k = 1; k <= d; ++k)
        for (NodeId i = 1; i <= d; ++i) {
            if (k == i || !scalar_positive(detail::coeff(b, k, i)))
                continue;
            T bypass = scalar_zero<T>();
            for (NodeId l = 1; l <= d; ++l) {
                if (l == i || l == k || !scalar_positive(detail::coeff(b, k, l)) ||
                    !scalar_positive(detail::coeff(b, l, i)))
                    continue;
                bypass = std::max(bypass, detail::coeff(b, k, l) * detail::coeff(b, l, i) /
                                              detail::coeff(b, l, l));
            }
            if (tol_greater(detail::coeff(b, k, i), bypass, tol))
                edges.push_back({k, i});
        }
    return Dag(d, std::move(edges));
}

/// Enumerates every DAG on which the model with coefficient matrix B can be
/// written: all graphs between the minimum ML DAG and the transitive
/// closure of the reachability relation. Emission is graded lexicographic:
/// fewest added optional edges first, then lexicographic in the added edge
/// set. Restartable via reset().
class AdmissibleDagEnumerator {
  public:
    AdmissibleDagEnumerator(int node_count, std::vector<Edge> required,
                            std::vector<Edge> optional)
        : d_(node_count), required_(std::move(required)), optional_(std::move(optional)) {
        reset();
    }

    const std::vector<Edge> &required_edges() const noexcept { return required_; }
    const std::vector<Edge> &optional_edges() const noexcept { return optional_; }

    void reset() {
        subset_size_ = 0;
        combo_.clear();
        done_ = false;
    }

    std::optional<Dag> next() {
        if (done_)
            return std::nullopt;
        std::vector<Edge> edges = required_;
        for (std::size_t idx : combo_)
            edges.push_back(optional_[idx]);
        Dag out(d_, std::move(edges));
        advance();
        return out;
    }

  private:
    void advance() {
        // next combination of the current size, else first of the next size;
        // combo_[pos] tops out at m - (size - pos)
        const std::size_t m = optional_.size();
        std::size_t pos = combo_.size();
        while (pos > 0) {
            --pos;
            if (combo_[pos] < m - (combo_.size() - pos)) {
                ++combo_[pos];
                for (std::size_t rest = pos + 1; rest < combo_.size(); ++rest)
                    combo_[rest] = combo_[rest - 1] + 1;
                return;
            }
        }
        ++subset_size_;
        if (subset_size_ > m) {
            done_ = true;
            return;
        }
        combo_.resize(subset_size_);
        for (std::size_t idx = 0; idx < subset_size_; ++idx)
            combo_[idx] = idx;
    }

    int d_;
    std::vector<Edge> required_, optional_;
    std::size_t subset_size_ = 0;
    std::vector<std::size_t> combo_;
    bool done_ = false;
};

template <WeightScalar T>
AdmissibleDagEnumerator admissible_dags(const Matrix<T> &b, const Tolerance &tol = {}) {
    const Dag minimum = minimum_ml_dag(b, tol);
    const BoolMatrix reach = sign_pattern(b);
    std::vector<Edge> optional;
    for (NodeId k = 1; k <= minimum.node_count(); ++k)
        for (NodeId i = 1; i <= minimum.node_count(); ++i)
            if (k != i && reach.get(k, i) && !minimum.has_edge(k, i))
                optional.push_back({k, i});
    return AdmissibleDagEnumerator(minimum.node_count(), minimum.edges(), std::move(optional));
}

/// First `cap` admissible DAGs in emission order.
template <WeightScalar T>
std::vector<Dag> enumerate_admissible_dags(const Matrix<T> &b, std::size_t cap = 10'000,
                                           const Tolerance &tol = {}) {
    AdmissibleDagEnumerator stream = admissible_dags(b, tol);
    std::vector<Dag> out;
    while (out.size() < cap) {
        auto next = stream.next();
        if (!next)
            break;
        out.push_back(std::move(*next));
    }
    return out;
}

/// Per-edge weight constraint: edges of the minimum ML DAG are pinned at
/// b_ki / b_kk exactly; optional edges range over the half-open interval
/// (0, b_ki / b_kk].
template <WeightScalar T> struct WeightInterval {
    Edge edge;
    T upper{};
    bool pinned = false;
};

template <WeightScalar T> struct WeightSpace {
    Dag dag;
    std::vector<T> noise;                     // c_ii = b_ii, always pinned
    std::vector<WeightInterval<T>> intervals; // aligned with dag.edges()

    /// The representative with every weight at its upper endpoint.
    MaxLinModel<T> canonical_model() const {
        std::vector<T> weights;
        weights.reserve(intervals.size());
        for (const auto &iv : intervals)
            weights.push_back(iv.upper);
        return MaxLinModel<T>(dag, std::move(weights), noise);
    }

    /// Model with caller-chosen weights, validated against the intervals.
    MaxLinModel<T> model_with(const std::vector<T> &weights, const Tolerance &tol = {}) const {
        if (weights.size() != intervals.size())
            throw_input("expected one weight per edge");
        for (std::size_t e = 0; e < weights.size(); ++e) {
            const auto &iv = intervals[e];
            const std::string name =
                "(" + std::to_string(iv.edge.from) + "," + std::to_string(iv.edge.to) + ")";
            if (iv.pinned && !tol_equal(weights[e], iv.upper, tol))
                throw_input("weight of minimum-DAG edge " + name + " must equal " +
                            format_scalar(iv.upper));
            if (!scalar_positive(weights[e]) || tol_greater(weights[e], iv.upper, tol))
                throw_input("weight of edge " + name + " must lie in (0, " +
                            format_scalar(iv.upper) + "]");
        }
        return MaxLinModel<T>(dag, weights, noise);
    }
};

/// All recursive-model weight assignments that reproduce B on an admissible
/// DAG. The DAG must contain the minimum ML DAG and have reachability
/// sgn(B).
template <WeightScalar T>
WeightSpace<T> weight_space(const Matrix<T> &b, const Dag &dag, const Tolerance &tol = {}) {
    if (const auto check = validate_b(b, tol); !check.valid)
        throw_invalid_b(check.defects);
    if (int(b.rows()) != dag.node_count())
        throw_input("DAG node count does not match the coefficient matrix");
    const Dag minimum = minimum_ml_dag(b, tol);
    if (!minimum.is_subgraph_of(dag))
        throw_input("DAG is not admissible: it lacks an edge of the minimum ML DAG");
    if (!(dag.reachability() == sign_pattern(b)))
        throw_input("DAG is not admissible: its reachability differs from sgn(B)");

    WeightSpace<T> out{dag, {}, {}};
    out.noise.reserve(std::size_t(dag.node_count()));
    for (NodeId i = 1; i <= dag.node_count(); ++i)
        out.noise.push_back(detail::coeff(b, i, i));
    out.intervals.reserve(dag.edges().size());
    for (const Edge &e : dag.edges())
        out.intervals.push_back({e,
                                 detail::coeff(b, e.from, e.to) / detail::coeff(b, e.from, e.from),
                                 minimum.has_edge(e.from, e.to)});
    return out;
}

} // namespace maxlin
