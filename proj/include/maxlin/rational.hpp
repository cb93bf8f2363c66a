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

#include "maxlin/tolerance.hpp"

namespace maxlin {

/// Exact non-negative rational for the validation mode. Backed by 128-bit
/// integers and kept normalized (den > 0, gcd(num, den) = 1). The max-times
/// algebra only ever needs multiply, divide and compare; there is no
/// addition. Operations that would exceed 128 bits after reduction throw.
class Rational {
  public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}
    Rational(long long num, long long den);

    static Rational from_int128(Int num, Int den);

    /// Accepts "p/q", integer literals, and decimal/scientific literals such
    /// as "0.25" or "5e-3". Decimals convert exactly (0.3 becomes 3/10).
    static Rational parse(std::string_view text);

    /// Exact value of the shortest decimal literal that round-trips to `x`,
    /// so 0.3 maps to 3/10 rather than to its binary expansion.
    static Rational from_double(double x);

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }

    double to_double() const;
    std::string to_string() const; // "p" when integral, else "p/q"

    Rational operator*(const Rational &rhs) const;
    Rational operator/(const Rational &rhs) const;

    bool operator==(const Rational &rhs) const noexcept {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    bool operator!=(const Rational &rhs) const noexcept { return !(*this == rhs); }
    bool operator<(const Rational &rhs) const noexcept;
    bool operator>(const Rational &rhs) const noexcept { return rhs < *this; }
    bool operator<=(const Rational &rhs) const noexcept { return !(rhs < *this); }
    bool operator>=(const Rational &rhs) const noexcept { return !(*this < rhs); }

  private:
    Int num_;
    Int den_;
};

inline bool tol_equal(const Rational &a, const Rational &b, const Tolerance &) { return a == b; }
inline bool tol_greater(const Rational &a, const Rational &b, const Tolerance &) { return a > b; }
inline bool tol_less(const Rational &a, const Rational &b, const Tolerance &) { return a < b; }

} // namespace maxlin
