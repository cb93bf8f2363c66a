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

#include <doctest.h>

#include <random>

#include "maxlin/semiring.hpp"
#include "support/fixtures.hpp"

using namespace maxlin;
using test::W;

namespace {

Matrix<double> random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols,
                             double zero_prob = 0.3) {
    std::uniform_real_distribution<double> unit(0.0, 2.0);
    std::bernoulli_distribution zero(zero_prob);
    Matrix<double> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = zero(rng) ? 0.0 : unit(rng);
    return m;
}

Matrix<Rational> random_matrix_rational(std::mt19937_64 &rng, std::size_t rows,
                                        std::size_t cols) {
    std::uniform_int_distribution<int> numer(0, 32);
    Matrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = Rational(numer(rng), 16);
    return m;
}

} // namespace

TEST_CASE_TEMPLATE("product identity and null elements", T, double, Rational) {
    const Matrix<T> f = Matrix<T>::from_rows({{W<T>("1"), W<T>("0.5")}, {W<T>("0"), W<T>("1")}});
    CHECK(max_times_product(f, Matrix<T>::identity(2)) == f);
    CHECK(max_times_product(Matrix<T>::identity(2), f) == f);
    const Matrix<T> zero(2, 2);
    CHECK(max_times_product(zero, f) == zero);
    CHECK(max_times_product(f, zero) == zero);
}

TEST_CASE_TEMPLATE("hand-computed 2x2 product", T, double, Rational) {
    const Matrix<T> f = Matrix<T>::from_rows({{W<T>("1"), W<T>("0.5")}, {W<T>("0"), W<T>("1")}});
    // (0,1) entry = max(1 * 0.5, 0.5 * 1) = 0.5
    CHECK(max_times_product(f, f) == f);
}

TEST_CASE("product rejects mismatched shapes and negative entries") {
    Matrix<double> a(2, 3), b(2, 2);
    CHECK_THROWS_AS(max_times_product(a, b), Error);
    Matrix<double> bad(2, 2);
    bad(0, 1) = -1.0;
    CHECK_THROWS_AS(max_times_product(bad, b), Error);
    CHECK_THROWS_AS(elementwise_max(a, b), Error);
}

TEST_CASE_TEMPLATE("powers: zeroth is identity, nilpotency", T, double, Rational) {
    Matrix<T> a(2, 2);
    a(0, 1) = W<T>("0.5");
    CHECK(max_times_power(a, 0) == Matrix<T>::identity(2));
    CHECK(max_times_power(a, 2) == Matrix<T>(2, 2)); // strictly triangular squares to zero
    CHECK(max_times_power(Matrix<T>::identity(3), 5) == Matrix<T>::identity(3));
    CHECK_THROWS_AS(max_times_power(Matrix<T>(2, 3), 1), Error);
}

TEST_CASE_TEMPLATE("elementwise max basics", T, double, Rational) {
    const Matrix<T> f = Matrix<T>::from_rows({{W<T>("1"), W<T>("0")}, {W<T>("0"), W<T>("2")}});
    const Matrix<T> g = Matrix<T>::from_rows({{W<T>("0"), W<T>("3")}, {W<T>("0"), W<T>("1")}});
    const Matrix<T> expected =
        Matrix<T>::from_rows({{W<T>("1"), W<T>("3")}, {W<T>("0"), W<T>("2")}});
    CHECK(elementwise_max(f, g) == expected);
    CHECK(elementwise_max(f, f) == f);
    CHECK(elementwise_max(f, Matrix<T>(2, 2)) == f);
}

TEST_CASE("semiring laws hold on random float matrices") {
    std::mt19937_64 rng(11);
    const Tolerance tol;
    for (int trial = 0; trial < 40; ++trial) {
        const auto f = random_matrix(rng, 4, 3);
        const auto g = random_matrix(rng, 3, 5);
        const auto h = random_matrix(rng, 5, 2);

        // associativity within tolerance
        const auto left = max_times_product(max_times_product(f, g), h);
        const auto right = max_times_product(f, max_times_product(g, h));
        for (std::size_t r = 0; r < left.rows(); ++r)
            for (std::size_t c = 0; c < left.cols(); ++c)
                CHECK(tol_equal(left(r, c), right(r, c), tol));

        // transpose law, exactly
        CHECK(transpose(max_times_product(f, g)) ==
              max_times_product(transpose(g), transpose(f)));

        // distribution over the componentwise max, exactly
        const auto g2 = random_matrix(rng, 3, 5);
        CHECK(max_times_product(f, elementwise_max(g, g2)) ==
              elementwise_max(max_times_product(f, g), max_times_product(f, g2)));

        // monotonicity: raising entries of both factors never lowers output
        auto f_up = f;
        auto g_up = g;
        std::uniform_real_distribution<double> bump(1.0, 2.0);
        for (std::size_t r = 0; r < f_up.rows(); ++r)
            for (std::size_t c = 0; c < f_up.cols(); ++c)
                f_up(r, c) *= bump(rng);
        for (std::size_t r = 0; r < g_up.rows(); ++r)
            for (std::size_t c = 0; c < g_up.cols(); ++c)
                g_up(r, c) *= bump(rng);
        const auto base = max_times_product(f, g);
        const auto upper = max_times_product(f_up, g_up);
        for (std::size_t r = 0; r < base.rows(); ++r)
            for (std::size_t c = 0; c < base.cols(); ++c)
                CHECK(base(r, c) <= upper(r, c));
    }
}

TEST_CASE("semiring laws hold exactly on random rational matrices") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_matrix_rational(rng, 3, 3);
        const auto g = random_matrix_rational(rng, 3, 3);
        const auto h = random_matrix_rational(rng, 3, 3);
        CHECK(max_times_product(max_times_product(f, g), h) ==
              max_times_product(f, max_times_product(g, h)));
        CHECK(transpose(max_times_product(f, g)) ==
              max_times_product(transpose(g), transpose(f)));
        CHECK(max_times_product(f, elementwise_max(g, h)) ==
              elementwise_max(max_times_product(f, g), max_times_product(f, h)));
    }
}

TEST_CASE("every available kernel variant produces identical doubles") {
    const auto tables = kernels::available_kernels();
    REQUIRE(!tables.empty());
    INFO("active kernel: ", std::string(kernels::active_kernels().name));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 17);
        const std::size_t m = dim(rng), n = dim(rng), p = dim(rng);
        const auto f = random_matrix(rng, m, n);
        const auto g = random_matrix(rng, n, p);

        std::vector<Matrix<double>> results;
        for (const auto *table : tables) {
            Matrix<double> out(m, p);
            table->max_times(f.data(), g.data(), out.data(), m, n, p);
            results.push_back(std::move(out));
        }
        for (std::size_t v = 1; v < results.size(); ++v)
            CHECK(results[v] == results.front());

        // max-plus variants agree too (log-domain entries include -inf)
        auto lf = to_log_domain(f);
        auto lg = to_log_domain(g);
        std::vector<Matrix<double>> log_results;
        for (const auto *table : tables) {
            Matrix<double> out(m, p);
            table->max_plus(lf.data(), lg.data(), out.data(), m, n, p);
            log_results.push_back(std::move(out));
        }
        for (std::size_t v = 1; v < log_results.size(); ++v)
            CHECK(log_results[v] == log_results.front());

        std::vector<Matrix<double>> max_results;
        const auto g2 = random_matrix(rng, m, n);
        for (const auto *table : tables) {
            Matrix<double> out(m, n);
            table->elementwise_max(f.data(), g2.data(), out.data(), m * n);
            max_results.push_back(std::move(out));
        }
        for (std::size_t v = 1; v < max_results.size(); ++v)
            CHECK(max_results[v] == max_results.front());
    }
}

TEST_CASE("log-domain product agrees with the linear product") {
    std::mt19937_64 rng(19);
    const Tolerance tol{1e-12, 0.0};
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_matrix(rng, 5, 4);
        const auto g = random_matrix(rng, 4, 6);
        const auto linear = max_times_product(f, g);
        const auto via_logs = from_log_domain(max_plus_product(to_log_domain(f), to_log_domain(g)));
        for (std::size_t r = 0; r < linear.rows(); ++r)
            for (std::size_t c = 0; c < linear.cols(); ++c)
                CHECK(tol_equal(linear(r, c), via_logs(r, c), tol));
    }
}

TEST_CASE("max-plus product keeps underflowing chains alive") {
    // 1e-300 * 1e-300 * 1e300 underflows to 0 in the linear domain but is
    // 1e-300 when evaluated as sums of logs
    Matrix<double> a(1, 1), b(1, 1), c(1, 1);
    a(0, 0) = 1e-300;
    b(0, 0) = 1e-300;
    c(0, 0) = 1e300;
    const auto linear =
        max_times_product(max_times_product(a, b), c); // (1e-600 -> 0) * 1e300 = 0
    CHECK(linear(0, 0) == 0.0);
    const auto logs = max_plus_product(max_plus_product(to_log_domain(a), to_log_domain(b)),
                                       to_log_domain(c));
    const auto back = from_log_domain(logs);
    CHECK(back(0, 0) == doctest::Approx(1e-300));
}
