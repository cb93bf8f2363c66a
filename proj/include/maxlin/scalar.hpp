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

#include <array>
#include <charconv>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "maxlin/errors.hpp"
#include "maxlin/rational.hpp"

namespace maxlin {

/// The two weight types the library is instantiated with: 64-bit floating
/// point (default) and exact Rational (validation mode).
template <typename T>
concept WeightScalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <WeightScalar T> inline T scalar_zero() { return T(0); }
template <WeightScalar T> inline T scalar_one() { return T(1); }

inline bool scalar_nonnegative(double v) { return v >= 0 && !std::isnan(v); }
inline bool scalar_nonnegative(const Rational &v) { return v >= Rational(0); }

inline bool scalar_finite(double v) { return std::isfinite(v); }
inline bool scalar_finite(const Rational &) { return true; }

/// Positive and finite: what a model weight must be.
inline bool scalar_positive(double v) { return v > 0 && std::isfinite(v); }
inline bool scalar_positive(const Rational &v) { return v > Rational(0); }

/// Shortest representation that round-trips; keeps every digit the active
/// tolerance could ever need.
inline std::string format_scalar(double v) {
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline std::string format_scalar(const Rational &v) { return v.to_string(); }

template <WeightScalar T> T parse_scalar(std::string_view text);

template <> inline double parse_scalar<double>(std::string_view text) {
    // Accept "p/q" in float mode too, so rational fixtures load anywhere.
    if (text.find('/') != std::string_view::npos)
        return Rational::parse(text).to_double();
    double value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last)
        throw_input("malformed number '" + std::string(text) + "'");
    if (value == 0.0)
        value = 0.0; // normalize -0.0
    return value;
}

template <> inline Rational parse_scalar<Rational>(std::string_view text) {
    return Rational::parse(text);
}

template <WeightScalar T> T scalar_from_double(double v);
template <> inline double scalar_from_double<double>(double v) { return v == 0.0 ? 0.0 : v; }
template <> inline Rational scalar_from_double<Rational>(double v) { return Rational::from_double(v); }

inline double scalar_to_double(double v) { return v; }
inline double scalar_to_double(const Rational &v) { return v.to_double(); }

} // namespace maxlin
