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

#if defined(__aarch64__)

#include <algorithm>
#include <arm_neon.h>
#include <limits>

namespace maxlin::kernels {

namespace {

void max_times_neon(const double *f, const double *g, double *out, std::size_t m,
                    std::size_t n, std::size_t p) {
    std::fill(out, out + m * p, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double *out_row = out + i * p;
        for (std::size_t k = 0; k < n; ++k) {
            const double fik = f[i * n + k];
            if (fik == 0.0)
                continue;
            const double *g_row = g + k * p;
            const float64x2_t lhs = vdupq_n_f64(fik);
            std::size_t j = 0;
            for (; j + 2 <= p; j += 2) {
                const float64x2_t prod = vmulq_f64(lhs, vld1q_f64(g_row + j));
                vst1q_f64(out_row + j, vmaxq_f64(vld1q_f64(out_row + j), prod));
            }
            for (; j < p; ++j)
                out_row[j] = std::max(out_row[j], fik * g_row[j]);
        }
    }
}

void max_plus_neon(const double *f, const double *g, double *out, std::size_t m,
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
            const float64x2_t lhs = vdupq_n_f64(fik);
            std::size_t j = 0;
            for (; j + 2 <= p; j += 2) {
                const float64x2_t sum = vaddq_f64(lhs, vld1q_f64(g_row + j));
                vst1q_f64(out_row + j, vmaxq_f64(vld1q_f64(out_row + j), sum));
            }
            for (; j < p; ++j)
                out_row[j] = std::max(out_row[j], fik + g_row[j]);
        }
    }
}

void elementwise_max_neon(const double *a, const double *b, double *out, std::size_t count) {
    std::size_t i = 0;
    for (; i + 2 <= count; i += 2)
        vst1q_f64(out + i, vmaxq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    for (; i < count; ++i)
        out[i] = std::max(a[i], b[i]);
}

} // namespace

const KernelTable *neon_kernels() {
    static const KernelTable table{"neon", &max_times_neon, &max_plus_neon,
                                   &elementwise_max_neon};
    return &table;
}

} // namespace maxlin::kernels

#else

namespace maxlin::kernels {
const KernelTable *neon_kernels() { return nullptr; }
} // namespace maxlin::kernels

#endif
