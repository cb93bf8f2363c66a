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

#include <cstddef>
#include <vector>

namespace maxlin::kernels {

/// Row-major max-times product: out[i][j] = max(0, max_k f[i][k] * g[k][j])
/// with f m-by-n, g n-by-p, out m-by-p. Entries must be non-negative and
/// finite; out must not alias f or g. The empty reduction (n = 0) yields 0.
using ProductFn = void (*)(const double *f, const double *g, double *out, std::size_t m,
                           std::size_t n, std::size_t p);

/// Log-domain counterpart: out[i][j] = max(-inf, max_k f[i][k] + g[k][j]).
/// Entries may be any finite real or -inf (the image of weight 0).
using SumProductFn = ProductFn;

using ElementwiseMaxFn = void (*)(const double *a, const double *b, double *out,
                                  std::size_t count);

/// One instruction-set variant of the floating-point inner loops. All
/// variants produce identical doubles: multiply and max are exact, so no
/// reassociation slack is needed (the equivalence suite asserts ==).
struct KernelTable {
    const char *name;
    ProductFn max_times;
    SumProductFn max_plus;
    ElementwiseMaxFn elementwise_max;
};

const KernelTable &scalar_kernels();

/// Best table for this process: an env override (MAXLIN_ISA=scalar|avx2|neon)
/// when set, otherwise the widest variant the CPU supports. Resolved once.
const KernelTable &active_kernels();

/// Every table that can run on this machine (scalar first). For testing.
std::vector<const KernelTable *> available_kernels();

} // namespace maxlin::kernels
