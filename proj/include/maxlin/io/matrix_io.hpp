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

#include <json.hpp>
#include <string>
#include <string_view>

#include "maxlin/matrix.hpp"

namespace maxlin {

/// One row per line, comma separated. Doubles print in shortest round-trip
/// form, rationals as p/q, so a write/read cycle is lossless.
template <WeightScalar T> std::string matrix_to_csv(const Matrix<T> &m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0)
                out += ',';
            out += format_scalar(m(r, c));
        }
        out += '\n';
    }
    return out;
}

template <WeightScalar T> Matrix<T> matrix_from_csv(std::string_view text) {
    std::vector<std::vector<T>> rows;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos)
            line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        line_start = line_end + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty())
            continue;
        std::vector<T> row;
        std::size_t field_start = 0;
        while (true) {
            const std::size_t comma = line.find(',', field_start);
            std::string_view field = line.substr(
                field_start, comma == std::string_view::npos ? line.size() - field_start
                                                             : comma - field_start);
            row.push_back(parse_scalar<T>(field));
            if (comma == std::string_view::npos)
                break;
            field_start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw_input("empty matrix CSV");
    Matrix<T> m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw_input("ragged matrix CSV: row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " fields, expected " +
                        std::to_string(m.cols()));
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

/// Nested arrays. Doubles are emitted as JSON numbers, rationals as "p/q"
/// strings; parsing accepts either form for either mode.
template <WeightScalar T> nlohmann::json matrix_to_json(const Matrix<T> &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if constexpr (std::same_as<T, double>)
                row.push_back(m(r, c));
            else
                row.push_back(m(r, c).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

template <WeightScalar T> T scalar_from_json(const nlohmann::json &value) {
    if (value.is_string())
        return parse_scalar<T>(value.get<std::string>());
    if (value.is_number())
        return scalar_from_double<T>(value.get<double>());
    throw_input("expected a number or numeric string, got " + value.dump());
}

template <WeightScalar T> Matrix<T> matrix_from_json(const nlohmann::json &j) {
    if (!j.is_array() || j.empty())
        throw_input("matrix JSON must be a non-empty array of rows");
    Matrix<T> m(j.size(), j.front().is_array() ? j.front().size() : 0);
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto &row = j.at(r);
        if (!row.is_array() || row.size() != m.cols())
            throw_input("matrix JSON row " + std::to_string(r + 1) + " is not an array of " +
                        std::to_string(m.cols()) + " values");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = scalar_from_json<T>(row.at(c));
    }
    return m;
}

} // namespace maxlin
