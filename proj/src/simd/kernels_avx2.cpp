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

#if defined(__AVX2__)

#include <algorithm>
#include <immintrin.h>
#include <limits>

// AVX2 variants of the semiring inner loops. The left factor is broadcast
// and one row of g is streamed 8 doubles per step against the accumulator
// row. Inputs never contain NaN, so vmaxpd's NaN asymmetry is moot, and
// products of non-negative operands cannot produce -0.0, so results match
// the scalar kernels bit for bit.

namespace maxlin::kernels {

namespace {

void max_times_avx2(const double *f, const double *g, double *out, std::size_t m,
                    std::size_t n, std::size_t p) {
    std::fill(out, out + m * p, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double *out_row = out + i * p;
        for (std::size_t k = 0; k < n; ++k) {
            const double fik = f[i * n + k];
            if (fik == 0.0)
                continue;
            const double *g_row = g + k * p;
            const __m256d lhs = _mm256_set1_pd(fik);
            std::size_t j = 0;
            for (; j + 8 <= p; j += 8) {
                const __m256d prod0 = _mm256_mul_pd(lhs, _mm256_loadu_pd(g_row + j));
                const __m256d prod1 = _mm256_mul_pd(lhs, _mm256_loadu_pd(g_row + j + 4));
                _mm256_storeu_pd(out_row + j,
                                 _mm256_max_pd(_mm256_loadu_pd(out_row + j), prod0));
                _mm256_storeu_pd(out_row + j + 4,
                                 _mm256_max_pd(_mm256_loadu_pd(out_row + j + 4), prod1));
            }
            for (; j + 4 <= p; j += 4) {
                const __m256d prod = _mm256_mul_pd(lhs, _mm256_loadu_pd(g_row + j));
                _mm256_storeu_pd(out_row + j,
                                 _mm256_max_pd(_mm256_loadu_pd(out_row + j), prod));
            }
            for (; j < p; ++j)
                out_row[j] = std::max(out_row[j], fik * g_row[j]);
        }
    }
}

void max_plus_avx2(const double *f, const double *g, double *out, std::size_t m,
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
            const __m256d lhs = _mm256_set1_pd(fik);
            std::size_t j = 0;
            for (; j + 4 <= p; j += 4) {
                const __m256d sum = _mm256_add_pd(lhs, _mm256_loadu_pd(g_row + j));
                _mm256_storeu_pd(out_row + j,
                                 _mm256_max_pd(_mm256_loadu_pd(out_row + j), sum));
            }
            for (; j < p; ++j)
                out_row[j] = std::max(out_row[j], fik + g_row[j]);
        }
    }
}

void elementwise_max_avx2(const double *a, const double *b, double *out, std::size_t count) {
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4)
        _mm256_storeu_pd(out + i,
                         _mm256_max_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < count; ++i)
        out[i] = std::max(a[i], b[i]);
}

} // namespace

const KernelTable *avx2_kernels() {
    static const KernelTable table{"avx2", &max_times_avx2, &max_plus_avx2,
                                   &elementwise_max_avx2};
    return &table;
}

} // namespace maxlin::kernels

#else

namespace maxlin::kernels {
const KernelTable *avx2_kernels() { return nullptr; }
} // namespace maxlin::kernels

#endif
