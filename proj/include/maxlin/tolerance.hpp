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

#include <algorithm>
#include <cmath>

namespace maxlin {

/// Equality policy for floating-point weights. Nearly every structural
/// predicate in this library reduces to deciding whether two products of
/// edge weights are equal, so the policy is passed explicitly to anything
/// that classifies. Exact rational arithmetic ignores it.
struct Tolerance {
    double rtol = 1e-9;
    double atol = 1e-12;
};

inline bool tol_equal(double a, double b, const Tolerance &tol) {
    if (a == b)
        return true; // also the only way infinities compare equal
    if (!std::isfinite(a) || !std::isfinite(b))
        return false;
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= std::max(tol.atol, tol.rtol * scale);
}

/// a > b and not within tolerance of b.
inline bool tol_greater(double a, double b, const Tolerance &tol) {
    return a > b && !tol_equal(a, b, tol);
}

inline bool tol_less(double a, double b, const Tolerance &tol) { return tol_greater(b, a, tol); }

} // namespace maxlin
