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
#include <json.hpp>
#include <map>
#include <string>

#include "maxlin/io/matrix_io.hpp"
#include "maxlin/model.hpp"

namespace maxlin {

/// Model schema:
///   {"d": 4,
///    "edges": [{"from": 1, "to": 2, "weight": 0.5}, ...],
///    "noise": [1, 1, 1, 1]}
/// Weights are JSON numbers or numeric strings; exact mode keeps "p/q"
/// strings exact and converts decimal literals digit for digit.
template <WeightScalar T> MaxLinModel<T> model_from_json(const nlohmann::json &j) {
    if (!j.is_object())
        throw_input("model JSON must be an object");
    if (!j.contains("d") || !j.at("d").is_number_integer())
        throw_input("model JSON needs an integer field 'd'");
    const int d = j.at("d").get<int>();
    if (d < 1)
        throw_input("model field 'd' must be at least 1");
    if (!j.contains("edges") || !j.at("edges").is_array())
        throw_input("model JSON needs an array field 'edges'");
    if (!j.contains("noise") || !j.at("noise").is_array())
        throw_input("model JSON needs an array field 'noise'");

    std::vector<std::pair<Edge, T>> weighted;
    for (const auto &entry : j.at("edges")) {
        if (!entry.is_object() || !entry.contains("from") || !entry.contains("to") ||
            !entry.contains("weight"))
            throw_input("each edge needs 'from', 'to' and 'weight': " + entry.dump());
        const Edge e{entry.at("from").get<NodeId>(), entry.at("to").get<NodeId>()};
        weighted.emplace_back(e, scalar_from_json<T>(entry.at("weight")));
    }
    std::sort(weighted.begin(), weighted.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (std::size_t e = 1; e < weighted.size(); ++e)
        if (weighted[e].first == weighted[e - 1].first)
            throw_input("duplicate weight for edge (" + std::to_string(weighted[e].first.from) +
                        "," + std::to_string(weighted[e].first.to) + ")");

    std::vector<Edge> edges;
    std::vector<T> weights;
    edges.reserve(weighted.size());
    weights.reserve(weighted.size());
    for (auto &[edge, weight] : weighted) {
        edges.push_back(edge);
        weights.push_back(std::move(weight));
    }
    const auto &noise_json = j.at("noise");
    if (int(noise_json.size()) != d)
        throw_input("model 'noise' has " + std::to_string(noise_json.size()) +
                    " entries for d = " + std::to_string(d));
    std::vector<T> noise;
    noise.reserve(noise_json.size());
    for (const auto &value : noise_json)
        noise.push_back(scalar_from_json<T>(value));
    return MaxLinModel<T>(Dag(d, std::move(edges)), std::move(weights), std::move(noise));
}

template <WeightScalar T> nlohmann::json model_to_json(const MaxLinModel<T> &model) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t e = 0; e < model.dag().edges().size(); ++e) {
        const Edge edge = model.dag().edges()[e];
        nlohmann::json entry{{"from", edge.from}, {"to", edge.to}};
        if constexpr (std::same_as<T, double>)
            entry["weight"] = model.edge_weight_at(e);
        else
            entry["weight"] = model.edge_weight_at(e).to_string();
        edges.push_back(std::move(entry));
    }
    nlohmann::json noise = nlohmann::json::array();
    for (const T &w : model.noise_weights()) {
        if constexpr (std::same_as<T, double>)
            noise.push_back(w);
        else
            noise.push_back(w.to_string());
    }
    return nlohmann::json{{"d", model.node_count()}, {"edges", std::move(edges)},
                          {"noise", std::move(noise)}};
}

/// Weightless DAG schema: {"d": 3, "edges": [{"from": 1, "to": 2}, ...]}.
/// Extra per-edge fields (such as weights) are ignored.
inline Dag dag_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("d") || !j.at("d").is_number_integer() ||
        !j.contains("edges") || !j.at("edges").is_array())
        throw_input("DAG JSON needs integer 'd' and array 'edges'");
    std::vector<Edge> edges;
    for (const auto &entry : j.at("edges")) {
        if (!entry.is_object() || !entry.contains("from") || !entry.contains("to"))
            throw_input("each edge needs 'from' and 'to': " + entry.dump());
        edges.push_back({entry.at("from").get<NodeId>(), entry.at("to").get<NodeId>()});
    }
    return Dag(j.at("d").get<int>(), std::move(edges));
}

/// Observed values keyed by node label: {"2": 2.0, "5": "1/4"}.
template <WeightScalar T>
std::map<NodeId, T> observations_from_json(const nlohmann::json &j) {
    if (!j.is_object())
        throw_input("observed values must be a JSON object keyed by node label");
    std::map<NodeId, T> out;
    for (const auto &[key, value] : j.items()) {
        NodeId node = 0;
        try {
            std::size_t used = 0;
            node = std::stoi(key, &used);
            if (used != key.size())
                throw std::invalid_argument(key);
        } catch (const std::exception &) {
            throw_input("observation key '" + key + "' is not a node label");
        }
        out[node] = scalar_from_json<T>(value);
    }
    return out;
}

/// Stable fingerprint of a model: FNV-1a over its canonical serialization.
template <WeightScalar T> std::string model_hash(const MaxLinModel<T> &model) {
    const std::string canonical = model_to_json(model).dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char byte : canonical) {
        h ^= byte;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

} // namespace maxlin
