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
#include <thread>

#include "maxlin/dag.hpp"
#include "maxlin/io/dot.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace maxlin;

namespace {

const Dag &diamond() {
    static const Dag dag(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
    return dag;
}

} // namespace

TEST_CASE("construction validates the invariants") {
    CHECK_THROWS_WITH_AS(Dag(2, {{1, 1}}), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(Dag(2, {{1, 2}, {1, 2}}), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(Dag(2, {{1, 3}}), doctest::Contains("outside node range"), Error);
    CHECK_THROWS_AS(Dag(0, {}), Error);
}

TEST_CASE("cycle rejection names a witness") {
    try {
        Dag dag(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
        FAIL("cycle not detected");
    } catch (const Error &err) {
        CHECK(err.kind() == ErrorKind::graph);
        const std::string msg = err.what();
        CHECK(msg.find("cycle") != std::string::npos);
        // witness lists a closed walk over nodes 1, 2, 3
        CHECK(msg.find("->") != std::string::npos);
        CHECK(msg.find('4') == std::string::npos);
    }
}

TEST_CASE("topological order") {
    CHECK(diamond().topological_order() == std::vector<NodeId>{1, 2, 3, 4});
    CHECK(Dag(1, {}).topological_order() == std::vector<NodeId>{1});
    CHECK(Dag(2, {{2, 1}}).topological_order() == std::vector<NodeId>{2, 1});
}

TEST_CASE("reachability on the named fixtures") {
    const BoolMatrix &r = diamond().reachability();
    CHECK(r.get(1, 4));
    CHECK(!r.get(2, 3));
    for (NodeId v = 1; v <= 4; ++v)
        CHECK(r.get(v, v));

    const Dag edgeless(3, {});
    for (NodeId a = 1; a <= 3; ++a)
        for (NodeId b = 1; b <= 3; ++b)
            CHECK(edgeless.reachability().get(a, b) == (a == b));

    const Dag chain(3, {{1, 2}, {2, 3}});
    for (NodeId a = 1; a <= 3; ++a)
        for (NodeId b = 1; b <= 3; ++b)
            CHECK(chain.reachability().get(a, b) == (a <= b));
}

TEST_CASE("ancestor, parent, descendant queries") {
    CHECK(diamond().ancestors(4) == NodeSet::of(4, {1, 2, 3}));
    CHECK(diamond().parent_set(4) == NodeSet::of(4, {2, 3}));
    CHECK(diamond().ancestors_and_self(4) == NodeSet::of(4, {1, 2, 3, 4}));
    CHECK(Dag(3, {}).ancestors(2).empty());
    const Dag chain(3, {{1, 2}, {2, 3}});
    CHECK(chain.descendants(1) == NodeSet::of(3, {2, 3}));
    CHECK_THROWS_AS(chain.ancestors(4), Error);
    CHECK_THROWS_AS(chain.ancestors(0), Error);
}

TEST_CASE("transitive reduction") {
    const Dag triangle(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(triangle.transitive_reduction().edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(diamond().transitive_reduction() == diamond());
    const Dag edgeless(3, {});
    CHECK(edgeless.transitive_reduction() == edgeless);
}

TEST_CASE("transitive closure") {
    const Dag chain(3, {{1, 2}, {2, 3}});
    CHECK(chain.transitive_closure().edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
    const Dag closed = diamond().transitive_closure();
    CHECK(closed.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(closed.transitive_closure() == closed); // idempotent
}

TEST_CASE("polytree detection") {
    CHECK(!diamond().is_polytree());
    CHECK(Dag(3, {{1, 2}, {2, 3}}).is_polytree());
    CHECK(Dag(3, {{1, 3}, {2, 3}}).is_polytree()); // collider is still a tree
    CHECK(Dag(4, {}).is_polytree());
}

TEST_CASE("is_reachability_matrix") {
    BoolMatrix identity(3);
    for (NodeId v = 1; v <= 3; ++v)
        identity.set(v, v);
    CHECK(is_reachability_matrix(identity));

    BoolMatrix cyclic(2);
    cyclic.set(1, 1);
    cyclic.set(2, 2);
    cyclic.set(1, 2);
    cyclic.set(2, 1);
    CHECK(!is_reachability_matrix(cyclic));

    BoolMatrix no_diag(2);
    no_diag.set(1, 2);
    CHECK(!is_reachability_matrix(no_diag));

    BoolMatrix intransitive(3);
    for (NodeId v = 1; v <= 3; ++v)
        intransitive.set(v, v);
    intransitive.set(1, 2);
    intransitive.set(2, 3); // missing (1,3)
    CHECK(!is_reachability_matrix(intransitive));
}

TEST_CASE("randomized: reachability matches brute-force DFS, closures consistent") {
    test::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> size(1, 8);
        const Dag dag = test::random_dag(rng, size(rng), 0.4);
        const BoolMatrix &r = dag.reachability();
        for (NodeId a = 1; a <= dag.node_count(); ++a)
            for (NodeId b = 1; b <= dag.node_count(); ++b)
                CHECK(r.get(a, b) == test::dfs_reachable(dag, a, b));

        CHECK(is_reachability_matrix(r));

        const Dag reduced = dag.transitive_reduction();
        const Dag closed = dag.transitive_closure();
        CHECK(reduced.reachability() == r);
        CHECK(closed.reachability() == r);
        CHECK(reduced.is_subgraph_of(dag));
        CHECK(dag.is_subgraph_of(closed));

        // the topological order is a well-order
        std::vector<int> position(std::size_t(dag.node_count()) + 1, 0);
        for (std::size_t idx = 0; idx < dag.topological_order().size(); ++idx)
            position[std::size_t(dag.topological_order()[idx])] = int(idx);
        for (const Edge &e : dag.edges())
            CHECK(position[std::size_t(e.from)] < position[std::size_t(e.to)]);
    }
}

TEST_CASE("a shared Dag serves concurrent readers") {
    test::Rng rng(29);
    const Dag dag = test::random_dag(rng, 40, 0.2);
    const BoolMatrix expected = Dag(dag).reachability(); // fresh copy, own cache
    std::vector<std::thread> readers;
    std::vector<int> ancestor_counts(8, -1);
    for (int t = 0; t < 8; ++t)
        readers.emplace_back([&dag, &ancestor_counts, t] {
            // all threads race the lazy cache and then query through it
            ancestor_counts[std::size_t(t)] = dag.ancestors(40).size() +
                                              dag.descendants(1).size();
        });
    for (std::thread &reader : readers)
        reader.join();
    for (int got : ancestor_counts)
        CHECK(got == ancestor_counts.front());
    CHECK(dag.reachability() == expected);
}

TEST_CASE("dot export is deterministic and sorted") {
    const std::string dot = to_dot(Dag(4, {{3, 4}, {1, 2}, {1, 4}}));
    CHECK(dot == "digraph {\n"
                 "  1 -> 2;\n"
                 "  1 -> 4;\n"
                 "  3 -> 4;\n"
                 "}\n");
    const std::string labeled =
        to_dot(Dag(3, {{1, 2}}), [](const Edge &) { return std::string("0.5"); });
    CHECK(labeled == "digraph {\n"
                     "  3;\n"
                     "  1 -> 2 [label=\"0.5\"];\n"
                     "}\n");
    CHECK(to_edge_list(diamond()) == "1 2\n1 3\n2 4\n3 4\n");
}
