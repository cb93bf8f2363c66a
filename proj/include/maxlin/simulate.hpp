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

#include <cstdint>
#include <string>
#include <string_view>

#include "maxlin/model.hpp"
#include "maxlin/tolerance.hpp"

namespace maxlin {

/// Noise distribution and seed for sampling. Every option lives on
/// [0, inf), matching the model's non-negative noise assumption; the
/// default standard Frechet is atomless with support (0, inf).
struct NoiseSpec {
    enum class Dist { frechet, uniform01, exponential };

    Dist dist = Dist::frechet;
    double alpha = 1.0;  // Frechet shape
    double lambda = 1.0; // exponential rate
    std::uint64_t seed = 0;

    /// Parses "frechet", "frechet:2.5", "uniform01", "exponential:0.5".
    static NoiseSpec parse(std::string_view token, std::uint64_t seed);

    std::string name() const; // e.g. "frechet(1)"
};

/// n-by-d matrix of i.i.d. draws. Entry (r, c) is a pure function of
/// (seed, r, c) via the splitmix64 finalizer applied counter-style:
///   row_key = mix(seed xor GAMMA*(r+1)),  bits = mix(row_key xor GAMMA2*(c+1)),
/// so rows form independent substreams and any parallel evaluation order
/// yields identical output. The generator name recorded in batch metadata
/// is "splitmix64-counter".
Matrix<double> sample_noise(const NoiseSpec &spec, std::size_t d, std::size_t n);

/// Paired noise and model realizations, row per sample: X row = Z row o B.
struct SampleBatch {
    Matrix<double> z;
    Matrix<double> x;

    std::size_t size() const noexcept { return z.rows(); }
};

/// Draws n noise rows and pushes them through the model's coefficient
/// matrix with the batched max-times kernel.
SampleBatch simulate(const MaxLinModel<double> &model, const NoiseSpec &spec, std::size_t n);

/// One breached order relation (b_ji / b_jj) X_j <= X_i.
struct OrderViolation {
    std::size_t sample = 0; // 0-based row
    NodeId j = 0;
    NodeId i = 0;
    double lhs = 0;
    double rhs = 0;
};

/// Checks every sample against the componentwise order the coefficient
/// matrix induces: for each ancestor pair j of i, (b_ji / b_jj) X_j must
/// not exceed X_i. Returns all violations (empty on a consistent batch).
std::vector<OrderViolation> check_order_relations(const SampleBatch &batch,
                                                  const Matrix<double> &b,
                                                  const Tolerance &tol = {});

/// CSV with header sample,Z1..Zd,X1..Xd; sample indices are 1-based.
std::string batch_to_csv(const SampleBatch &batch);

} // namespace maxlin
