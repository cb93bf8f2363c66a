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

#include <stdexcept>
#include <string>

namespace maxlin {

/// Broad failure categories; the CLI maps them onto its exit-code contract
/// (input -> 2, graph -> 3, matrix -> 4).
enum class ErrorKind {
    input,  ///< malformed files, schema violations, bad arguments, overflow
    graph,  ///< graph-structure failures (cycles, node range)
    matrix, ///< a matrix failed validation as an ML coefficient matrix
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string &msg) { throw Error(ErrorKind::input, msg); }
[[noreturn]] inline void throw_graph(const std::string &msg) { throw Error(ErrorKind::graph, msg); }
[[noreturn]] inline void throw_matrix(const std::string &msg) { throw Error(ErrorKind::matrix, msg); }

} // namespace maxlin
