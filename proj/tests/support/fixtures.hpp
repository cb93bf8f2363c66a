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

namespace maxlin::test {

template <WeightScalar T> T W(const char *literal) { return parse_scalar<T>(literal); }

/// Diamond 1 -> {2, 3} -> 4 with unit noise, c12 = 1/2, c13 = 3/10,
/// c24 = 4/5, c34 = 9/10. Its coefficient matrix has b14 = 2/5 via the
/// upper route 1 -> 2 -> 4.
template <WeightScalar T> MaxLinModel<T> diamond_model() {
    Dag dag(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    // edge order after sorting: (1,2), (1,3), (2,4), (3,4)
    std::vector<T> weights{W<T>("0.5"), W<T>("0.3"), W<T>("0.8"), W<T>("0.9")};
    std::vector<T> noise{W<T>("1"), W<T>("1"), W<T>("1"), W<T>("1")};
    return MaxLinModel<T>(std::move(dag), std::move(weights), std::move(noise));
}

template <WeightScalar T> Matrix<T> diamond_b() {
    Matrix<T> b(4, 4);
    b(0, 0) = W<T>("1");
    b(0, 1) = W<T>("0.5");
    b(0, 2) = W<T>("0.3");
    b(0, 3) = W<T>("0.4");
    b(1, 1) = W<T>("1");
    b(1, 3) = W<T>("0.8");
    b(2, 2) = W<T>("1");
    b(2, 3) = W<T>("0.9");
    b(3, 3) = W<T>("1");
    return b;
}

/// Diamond coefficient matrix with b14 raised to 1/2; valid only on the
/// diamond plus the extra edge (1, 4).
template <WeightScalar T> Matrix<T> diamond_b_perturbed() {
    Matrix<T> b = diamond_b<T>();
    b(0, 3) = W<T>("0.5");
    return b;
}

/// Full triangle 1 -> 2 -> 3 with 1 -> 3, unit noise, c12 = 1/2, c23 = 3/5.
/// With c13 <= 3/10 the direct edge is dominated and drops out of the
/// minimum ML DAG.
template <WeightScalar T> MaxLinModel<T> triangle_model(const char *c13) {
    Dag dag(3, {{1, 2}, {1, 3}, {2, 3}});
    std::vector<T> weights{W<T>("0.5"), W<T>(c13), W<T>("0.6")};
    std::vector<T> noise{W<T>("1"), W<T>("1"), W<T>("1")};
    return MaxLinModel<T>(std::move(dag), std::move(weights), std::move(noise));
}

template <WeightScalar T> MaxLinModel<T> chain_model() {
    Dag dag(3, {{1, 2}, {2, 3}});
    std::vector<T> weights{W<T>("1"), W<T>("1")};
    std::vector<T> noise{W<T>("1"), W<T>("1"), W<T>("1")};
    return MaxLinModel<T>(std::move(dag), std::move(weights), std::move(noise));
}

} // namespace maxlin::test
