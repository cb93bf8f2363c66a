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

#include <cstdlib>
#include <cstring>

#include "maxlin/errors.hpp"

namespace maxlin::kernels {

const KernelTable *avx2_kernels(); // defined in kernels_avx2.cpp
const KernelTable *neon_kernels(); // defined in kernels_neon.cpp

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable *runtime_simd() {
    if (const KernelTable *t = avx2_kernels(); t != nullptr && cpu_has_avx2())
        return t;
    if (const KernelTable *t = neon_kernels(); t != nullptr)
        return t; // baseline on aarch64, no runtime probe needed
    return nullptr;
}

const KernelTable &resolve() {
    if (const char *requested = std::getenv("MAXLIN_ISA"); requested != nullptr) {
        if (std::strcmp(requested, "scalar") == 0)
            return scalar_kernels();
        for (const KernelTable *t : {avx2_kernels(), neon_kernels()})
            if (t != nullptr && std::strcmp(requested, t->name) == 0) {
                if (std::strcmp(t->name, "avx2") == 0 && !cpu_has_avx2())
                    throw_input("MAXLIN_ISA=avx2 requested but this CPU lacks AVX2");
                return *t;
            }
        throw_input(std::string("MAXLIN_ISA='") + requested +
                    "' is not built into this binary (try scalar)");
    }
    if (const KernelTable *t = runtime_simd(); t != nullptr)
        return *t;
    return scalar_kernels();
}

} // namespace

const KernelTable &active_kernels() {
    static const KernelTable &table = resolve();
    return table;
}

std::vector<const KernelTable *> available_kernels() {
    std::vector<const KernelTable *> out{&scalar_kernels()};
    if (const KernelTable *t = runtime_simd(); t != nullptr)
        out.push_back(t);
    return out;
}

} // namespace maxlin::kernels
