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

#include "maxlin/simd/kernels.hpp"

#include <algorithm>
#include <limits>

// Reference kernels. The ikj order keeps the inner loop streaming over one
// row of g and one row of out, which is also the shape the vector variants
// use; k iterations with an annihilating left factor contribute nothing and
// are skipped.

namespace maxlin::kernels {

namespace {

void max_times_scalar(const double *f, const double *g, double *out, std::size_t m,
                      std::size_t n, std::size_t p) {
    std::fill(out, out + m * p, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double *out_row = out + i * p;
        for (std::size_t k = 0; k < n; ++k) {
            const double fik = f[i * n + k];
            if (fik == 0.0)
                continue;
            const double *g_row = g + k * p;
            for (std::size_t j = 0; j < p; ++j)
                out_row[j] = std::max(out_row[j], fik * g_row[j]);
        }
    }
}

void max_plus_scalar(const double *f, const double *g, double *out, std::size_t m,
                     std::size_t n, std::size_t p) {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    std::fill(out, out + m * p, neg_inf);
    for (std::size_t i = 0; i < m; ++i) {
        double *out_row = out + i * p;
        for (std::size_t k = 0; k < n; ++k) {
            const double fik = f[i * n + k];
            if (fik == neg_inf)
                continue;
            const double *g_row = g + k * p;
            for (std::size_t j = 0; j < p; ++j)
                out_row[j] = std::max(out_row[j], fik + g_row[j]);
        }
    }
}

void elementwise_max_scalar(const double *a, const double *b, double *out, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        out[i] = std::max(a[i], b[i]);
}

} // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", &max_times_scalar, &max_plus_scalar,
                                   &elementwise_max_scalar};
    return table;
}

} // namespace maxlin::kernels
