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

#include "maxlin/rational.hpp"

#include <array>
#include <charconv>
#include <cstdlib>

#include "maxlin/errors.hpp"

namespace maxlin {

namespace {

using Int = Rational::Int;
using UInt = unsigned __int128;

constexpr Int kIntMax = ~(Int(1) << 127); // 2^127 - 1

UInt uabs(Int v) { return v < 0 ? UInt(0) - UInt(v) : UInt(v); }

UInt ugcd(UInt a, UInt b) {
    while (b != 0) {
        UInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int checked_mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw_input("exact rational arithmetic overflow; rescale the input weights");
    return out;
}

// a*b as four 64-bit limbs, little-endian.
std::array<std::uint64_t, 4> mul_wide(UInt a, UInt b) {
    const std::uint64_t a0 = std::uint64_t(a), a1 = std::uint64_t(a >> 64);
    const std::uint64_t b0 = std::uint64_t(b), b1 = std::uint64_t(b >> 64);
    std::array<std::uint64_t, 4> r{0, 0, 0, 0};
    UInt cur = UInt(a0) * b0;
    r[0] = std::uint64_t(cur);
    UInt carry = cur >> 64;
    cur = UInt(a0) * b1 + UInt(a1) * b0 + carry;
    r[1] = std::uint64_t(cur);
    carry = cur >> 64;
    // a1*b1 <= 2^128 - 2^65 + 1, so adding the carry cannot wrap.
    cur = UInt(a1) * b1 + carry;
    r[2] = std::uint64_t(cur);
    r[3] = std::uint64_t(cur >> 64);
    return r;
}

int cmp_products(UInt a, UInt b, UInt c, UInt d) {
    const auto lhs = mul_wide(a, b);
    const auto rhs = mul_wide(c, d);
    for (int limb = 3; limb >= 0; --limb) {
        if (lhs[limb] != rhs[limb])
            return lhs[limb] < rhs[limb] ? -1 : 1;
    }
    return 0;
}

std::string int128_to_string(Int v) {
    if (v == 0)
        return "0";
    UInt mag = uabs(v);
    std::string digits;
    while (mag != 0) {
        digits.push_back(char('0' + int(mag % 10)));
        mag /= 10;
    }
    if (v < 0)
        digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

} // namespace

Rational Rational::from_int128(Int num, Int den) {
    if (den == 0)
        throw_input("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const UInt g = ugcd(uabs(num), UInt(den));
    if (g > 1) {
        num /= Int(g);
        den /= Int(g);
    }
    Rational out;
    out.num_ = num;
    out.den_ = den;
    return out;
}

Rational::Rational(long long num, long long den) { *this = from_int128(num, den); }

Rational Rational::operator*(const Rational &rhs) const {
    // Cross-reduce first so intermediate products stay as small as possible.
    const UInt g1 = ugcd(uabs(num_), UInt(rhs.den_));
    const UInt g2 = ugcd(uabs(rhs.num_), UInt(den_));
    const Int n1 = num_ / Int(g1);
    const Int n2 = rhs.num_ / Int(g2);
    const Int d1 = den_ / Int(g2);
    const Int d2 = rhs.den_ / Int(g1);
    Rational out;
    out.num_ = checked_mul(n1, n2);
    out.den_ = checked_mul(d1, d2);
    return out;
}

Rational Rational::operator/(const Rational &rhs) const {
    if (rhs.num_ == 0)
        throw_input("rational division by zero");
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this * inv;
}

bool Rational::operator<(const Rational &rhs) const noexcept {
    const bool neg_l = num_ < 0, neg_r = rhs.num_ < 0;
    if (neg_l != neg_r)
        return neg_l;
    const int cmp = cmp_products(uabs(num_), UInt(rhs.den_), uabs(rhs.num_), UInt(den_));
    return neg_l ? cmp > 0 : cmp < 0;
}

double Rational::to_double() const { return double(num_) / double(den_); }

std::string Rational::to_string() const {
    std::string out = int128_to_string(num_);
    if (den_ != 1) {
        out += '/';
        out += int128_to_string(den_);
    }
    return out;
}

namespace {

Int parse_digits(std::string_view digits, std::string_view original) {
    if (digits.empty())
        throw_input("malformed rational literal '" + std::string(original) + "'");
    Int value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw_input("malformed rational literal '" + std::string(original) + "'");
        value = checked_mul(value, 10);
        if (value > kIntMax - (c - '0'))
            throw_input("rational literal out of range '" + std::string(original) + "'");
        value += c - '0';
    }
    return value;
}

Int pow10_checked(long exp) {
    Int value = 1;
    for (long k = 0; k < exp; ++k)
        value = checked_mul(value, 10);
    return value;
}

Rational parse_decimal(std::string_view text) {
    std::string_view rest = text;
    long exp10 = 0;
    if (auto pos = rest.find_first_of("eE"); pos != std::string_view::npos) {
        std::string_view exp_part = rest.substr(pos + 1);
        rest = rest.substr(0, pos);
        bool neg = false;
        if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
            neg = exp_part[0] == '-';
            exp_part.remove_prefix(1);
        }
        const Int mag = parse_digits(exp_part, text);
        if (mag > 64)
            throw_input("rational exponent out of range '" + std::string(text) + "'");
        exp10 = neg ? -long(mag) : long(mag);
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (char c : rest) {
        if (c == '.') {
            if (seen_point)
                throw_input("malformed rational literal '" + std::string(text) + "'");
            seen_point = true;
            continue;
        }
        digits.push_back(c);
        if (seen_point)
            ++frac_digits;
    }
    const Int mantissa = parse_digits(digits, text);
    const long net = exp10 - frac_digits;
    if (net >= 0)
        return Rational::from_int128(checked_mul(mantissa, pow10_checked(net)), 1);
    return Rational::from_int128(mantissa, pow10_checked(-net));
}

} // namespace

Rational Rational::parse(std::string_view text) {
    if (text.empty())
        throw_input("empty rational literal");
    if (text[0] == '-')
        throw_input("negative weight '" + std::string(text) + "'");
    if (text[0] == '+')
        text.remove_prefix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const Int num = parse_digits(text.substr(0, slash), text);
        const Int den = parse_digits(text.substr(slash + 1), text);
        if (den == 0)
            throw_input("rational with zero denominator '" + std::string(text) + "'");
        return from_int128(num, den);
    }
    return parse_decimal(text);
}

Rational Rational::from_double(double x) {
    if (!(x >= 0))
        throw_input("cannot convert negative or NaN value to rational");
    std::array<char, 64> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return parse(std::string_view(buf.data(), std::size_t(res.ptr - buf.data())));
}

} // namespace maxlin
