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

#include "maxlin/inference.hpp"
#include "maxlin/structure.hpp"

namespace maxlin {

namespace detail {

template <WeightScalar T> nlohmann::json scalar_to_json(const T &value) {
    if constexpr (std::same_as<T, double>)
        return value;
    else
        return value.to_string();
}

} // namespace detail

/// {"node_terms": {"2": 0.8}, "noise_terms": {"3": 0.9, "4": 1.0}}
template <WeightScalar T> nlohmann::json representation_to_json(const Representation<T> &rep) {
    nlohmann::json node_terms = nlohmann::json::object();
    for (const auto &[node, coeff] : rep.node_terms)
        node_terms[std::to_string(node)] = detail::scalar_to_json(coeff);
    nlohmann::json noise_terms = nlohmann::json::object();
    for (const auto &[node, coeff] : rep.noise_terms)
        noise_terms[std::to_string(node)] = detail::scalar_to_json(coeff);
    return nlohmann::json{{"node_terms", std::move(node_terms)},
                          {"noise_terms", std::move(noise_terms)}};
}

/// {"lower": 1.6, "upper": "inf"}
template <WeightScalar T> nlohmann::json bounds_to_json(const Bounds<T> &interval) {
    nlohmann::json out{{"lower", detail::scalar_to_json(interval.lower)}};
    if (interval.upper)
        out["upper"] = detail::scalar_to_json(*interval.upper);
    else
        out["upper"] = "inf";
    return out;
}

template <WeightScalar T>
nlohmann::json violations_to_json(const std::vector<FixedPointViolation<T>> &violations) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &v : violations)
        out.push_back(nlohmann::json{{"j", v.j},
                                     {"i", v.i},
                                     {"lhs", detail::scalar_to_json(v.lhs)},
                                     {"rhs", detail::scalar_to_json(v.rhs)}});
    return out;
}

template <WeightScalar T> nlohmann::json validation_to_json(const BValidation<T> &verdict) {
    nlohmann::json defects = nlohmann::json::array();
    for (BDefect defect : verdict.defects)
        defects.push_back(to_string(defect));
    return nlohmann::json{{"valid", verdict.valid},
                          {"defects", std::move(defects)},
                          {"violations", violations_to_json(verdict.violations)}};
}

template <WeightScalar T> nlohmann::json validation_to_json(const DagValidation<T> &verdict) {
    return nlohmann::json{{"valid", verdict.valid},
                          {"violations", violations_to_json(verdict.violations)}};
}

/// "1,2,5-7" -> {1, 2, 5, 6, 7}; an empty string is the empty set.
NodeSet parse_node_list(std::string_view text, int universe);

} // namespace maxlin
