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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "maxlin/errors.hpp"
#include "maxlin/scalar.hpp"

namespace maxlin {

/// Dense row-major matrix of non-negative weights. Storage is dense on
/// purpose: coefficient matrices fill in along the reachability relation,
/// so sparsity buys nothing at the target scale. Values are immutable in
/// practice once an operation has produced them; nothing here locks.
template <WeightScalar T> class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, scalar_zero<T>()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = scalar_one<T>();
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
        Matrix m(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size());
        std::size_t r = 0;
        for (const auto &row : rows) {
            if (row.size() != m.cols_)
                throw_input("ragged rows in matrix literal");
            std::size_t c = 0;
            for (const T &v : row)
                m(r, c++) = v;
            ++r;
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    T *data() noexcept { return data_.data(); }
    const T *data() const noexcept { return data_.data(); }

    bool operator==(const Matrix &rhs) const = default;

    /// Throws unless every entry is a finite non-negative weight.
    void require_nonnegative(const char *what) const {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const T &v = (*this)(r, c);
                if (!scalar_nonnegative(v) || !scalar_finite(v))
                    throw_input(std::string(what) + ": entry (" + std::to_string(r + 1) + "," +
                                std::to_string(c + 1) + ") = " + format_scalar(v) +
                                " is not a non-negative real");
            }
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

/// Transpose; mostly useful for checking the (F o G)^T = G^T o F^T law.
template <WeightScalar T> Matrix<T> transpose(const Matrix<T> &m) {
    Matrix<T> out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(c, r) = m(r, c);
    return out;
}

} // namespace maxlin
