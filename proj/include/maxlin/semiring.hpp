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
#include <limits>
#include <string>

#include "maxlin/matrix.hpp"
#include "maxlin/simd/kernels.hpp"

namespace maxlin {

namespace detail {

inline void require_product_dims(std::size_t f_cols, std::size_t g_rows) {
    if (f_cols != g_rows)
        throw_input("max-times product dimension mismatch: " + std::to_string(f_cols) +
                    " columns against " + std::to_string(g_rows) + " rows");
}

} // namespace detail

/// Matrix product over the max-times semiring (R+, max, *):
/// out[i][j] = max_k f[i][k] * g[k][j]. Double instances run through the
/// runtime-selected kernel; rationals take the generic loop.
template <WeightScalar T> Matrix<T> max_times_product(const Matrix<T> &f, const Matrix<T> &g) {
    detail::require_product_dims(f.cols(), g.rows());
    f.require_nonnegative("max-times product, left factor");
    g.require_nonnegative("max-times product, right factor");
    Matrix<T> out(f.rows(), g.cols());
    if constexpr (std::same_as<T, double>) {
        kernels::active_kernels().max_times(f.data(), g.data(), out.data(), f.rows(), f.cols(),
                                            g.cols());
    } else {
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t k = 0; k < f.cols(); ++k) {
                const T &fik = f(i, k);
                if (fik.is_zero())
                    continue;
                for (std::size_t j = 0; j < g.cols(); ++j) {
                    if (g(k, j).is_zero())
                        continue;
                    out(i, j) = std::max(out(i, j), fik * g(k, j));
                }
            }
    }
    return out;
}

/// n-th max-times power with the usual convention A^0 = identity.
template <WeightScalar T> Matrix<T> max_times_power(const Matrix<T> &a, unsigned n) {
    if (!a.is_square())
        throw_input("max-times power of a non-square matrix");
    Matrix<T> result = Matrix<T>::identity(a.rows());
    for (unsigned k = 0; k < n; ++k)
        result = max_times_product(result, a);
    return result;
}

/// Componentwise maximum of two same-shape matrices.
template <WeightScalar T> Matrix<T> elementwise_max(const Matrix<T> &f, const Matrix<T> &g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw_input("elementwise max of differently shaped matrices");
    Matrix<T> out(f.rows(), f.cols());
    if constexpr (std::same_as<T, double>) {
        kernels::active_kernels().elementwise_max(f.data(), g.data(), out.data(),
                                                  f.rows() * f.cols());
    } else {
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j)
                out(i, j) = std::max(f(i, j), g(i, j));
    }
    return out;
}

/// Max-plus product for log-domain evaluation; entries may be -inf (the
/// log of 0) but not NaN or +inf.
inline Matrix<double> max_plus_product(const Matrix<double> &f, const Matrix<double> &g) {
    detail::require_product_dims(f.cols(), g.rows());
    const auto check = [](const Matrix<double> &m, const char *what) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (std::isnan(m(r, c)) || m(r, c) == std::numeric_limits<double>::infinity())
                    throw_input(std::string(what) + ": log-domain entries must be finite or -inf");
    };
    check(f, "max-plus product, left factor");
    check(g, "max-plus product, right factor");
    Matrix<double> out(f.rows(), g.cols());
    kernels::active_kernels().max_plus(f.data(), g.data(), out.data(), f.rows(), f.cols(),
                                       g.cols());
    return out;
}

/// Entrywise map between the linear and log domains. Weight 0 maps to -inf
/// and back; products of long sub-unit paths that would underflow in the
/// linear domain stay representable as sums of logs.
inline Matrix<double> to_log_domain(const Matrix<double> &linear) {
    Matrix<double> out(linear.rows(), linear.cols());
    for (std::size_t r = 0; r < linear.rows(); ++r)
        for (std::size_t c = 0; c < linear.cols(); ++c)
            out(r, c) = std::log(linear(r, c));
    return out;
}

inline Matrix<double> from_log_domain(const Matrix<double> &logs) {
    Matrix<double> out(logs.rows(), logs.cols());
    for (std::size_t r = 0; r < logs.rows(); ++r)
        for (std::size_t c = 0; c < logs.cols(); ++c)
            out(r, c) = std::exp(logs(r, c));
    return out;
}

template <WeightScalar T> bool is_zero_matrix(const Matrix<T> &m) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!(m(r, c) == scalar_zero<T>()))
                return false;
    return true;
}

} // namespace maxlin
