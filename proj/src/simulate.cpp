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

#include "maxlin/simulate.hpp"

#include <cmath>

#include "maxlin/simd/kernels.hpp"

namespace maxlin {

namespace {

constexpr std::uint64_t kGammaRow = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kGammaCol = 0xD1B54A32D192ED03ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t entry_bits(std::uint64_t seed, std::uint64_t row, std::uint64_t col) {
    const std::uint64_t row_key = mix64(seed ^ (kGammaRow * (row + 1)));
    return mix64(row_key ^ (kGammaCol * (col + 1)));
}

double to_unit_halfopen(std::uint64_t bits) { // [0, 1)
    return double(bits >> 11) * 0x1.0p-53;
}

double to_unit_open(std::uint64_t bits) { // (0, 1)
    return (double(bits >> 12) + 0.5) * 0x1.0p-52;
}

} // namespace

NoiseSpec NoiseSpec::parse(std::string_view token, std::uint64_t seed) {
    NoiseSpec spec;
    spec.seed = seed;
    std::string_view head = token;
    std::string_view param;
    if (const auto colon = token.find(':'); colon != std::string_view::npos) {
        head = token.substr(0, colon);
        param = token.substr(colon + 1);
    }
    const auto parse_param = [&](double fallback) {
        if (param.empty())
            return fallback;
        return parse_scalar<double>(param);
    };
    if (head == "frechet") {
        spec.dist = Dist::frechet;
        spec.alpha = parse_param(1.0);
        if (!(spec.alpha > 0))
            throw_input("frechet shape must be positive");
    } else if (head == "uniform01") {
        spec.dist = Dist::uniform01;
        if (!param.empty())
            throw_input("uniform01 takes no parameter");
    } else if (head == "exponential") {
        spec.dist = Dist::exponential;
        spec.lambda = parse_param(1.0);
        if (!(spec.lambda > 0))
            throw_input("exponential rate must be positive");
    } else {
        throw_input("unknown distribution '" + std::string(token) +
                    "' (expected frechet[:alpha], uniform01, exponential[:lambda])");
    }
    return spec;
}

std::string NoiseSpec::name() const {
    switch (dist) {
    case Dist::frechet: return "frechet(" + format_scalar(alpha) + ")";
    case Dist::uniform01: return "uniform01";
    case Dist::exponential: return "exponential(" + format_scalar(lambda) + ")";
    }
    return "?";
}

Matrix<double> sample_noise(const NoiseSpec &spec, std::size_t d, std::size_t n) {
    if (d < 1)
        throw_input("sample_noise needs at least one column");
    if (spec.dist == NoiseSpec::Dist::frechet && !(spec.alpha > 0))
        throw_input("frechet shape must be positive");
    if (spec.dist == NoiseSpec::Dist::exponential && !(spec.lambda > 0))
        throw_input("exponential rate must be positive");
    Matrix<double> z(n, d);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            const std::uint64_t bits = entry_bits(spec.seed, r, c);
            switch (spec.dist) {
            case NoiseSpec::Dist::frechet:
                // inverse CDF of exp(-z^-alpha): z = (-log u)^(-1/alpha)
                z(r, c) = std::pow(-std::log(to_unit_open(bits)), -1.0 / spec.alpha);
                break;
            case NoiseSpec::Dist::uniform01:
                z(r, c) = to_unit_halfopen(bits);
                break;
            case NoiseSpec::Dist::exponential:
                z(r, c) = -std::log(to_unit_open(bits)) / spec.lambda;
                break;
            }
        }
    }
    return z;
}

SampleBatch simulate(const MaxLinModel<double> &model, const NoiseSpec &spec, std::size_t n) {
    const auto d = std::size_t(model.node_count());
    const Matrix<double> b = ml_coefficients(model);
    SampleBatch batch{sample_noise(spec, d, n), Matrix<double>(n, d)};
    kernels::active_kernels().max_times(batch.z.data(), b.data(), batch.x.data(), n, d, d);
    return batch;
}

std::vector<OrderViolation> check_order_relations(const SampleBatch &batch,
                                                  const Matrix<double> &b, const Tolerance &tol) {
    if (!b.is_square() || batch.z.cols() != b.rows() || batch.x.cols() != b.rows() ||
        batch.z.rows() != batch.x.rows())
        throw_input("batch shape does not match the coefficient matrix");
    const int d = int(b.rows());
    std::vector<OrderViolation> violations;
    for (std::size_t r = 0; r < batch.size(); ++r) {
        for (NodeId j = 1; j <= d; ++j) {
            const double bjj = b(std::size_t(j) - 1, std::size_t(j) - 1);
            for (NodeId i = 1; i <= d; ++i) {
                const double bji = b(std::size_t(j) - 1, std::size_t(i) - 1);
                if (j == i || bji <= 0)
                    continue; // only j in an(i) induces an order relation
                const double lhs = bji / bjj * batch.x(r, std::size_t(j) - 1);
                const double rhs = batch.x(r, std::size_t(i) - 1);
                if (tol_greater(lhs, rhs, tol))
                    violations.push_back({r, j, i, lhs, rhs});
            }
        }
    }
    return violations;
}

std::string batch_to_csv(const SampleBatch &batch) {
    const std::size_t d = batch.z.cols();
    std::string out = "sample";
    for (std::size_t c = 1; c <= d; ++c)
        out += ",Z" + std::to_string(c);
    for (std::size_t c = 1; c <= d; ++c)
        out += ",X" + std::to_string(c);
    out += '\n';
    for (std::size_t r = 0; r < batch.size(); ++r) {
        out += std::to_string(r + 1);
        for (std::size_t c = 0; c < d; ++c)
            out += "," + format_scalar(batch.z(r, c));
        for (std::size_t c = 0; c < d; ++c)
            out += "," + format_scalar(batch.x(r, c));
        out += '\n';
    }
    return out;
}

} // namespace maxlin
