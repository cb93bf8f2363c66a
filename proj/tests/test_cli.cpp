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

// Drives the installed binary end to end: documented exit codes, golden
// outputs, and byte-for-byte determinism across invocations.

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string &args) {
    static int counter = 0;
    const std::string out_path = "/tmp/maxlin_cli_out_" + std::to_string(++counter);
    const std::string err_path = out_path + ".err";
    const std::string cmd =
        std::string(MAXLIN_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::string fixture(const std::string &name) {
    return std::string(MAXLIN_FIXTURE_DIR) + "/" + name;
}

std::string golden(const std::string &name) {
    return slurp(std::string(MAXLIN_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_CASE("compute-b reproduces the diamond coefficients") {
    const auto run = run_cli("compute-b " + fixture("diamond.json"));
    CHECK(run.code == 0);
    CHECK(run.out == golden("diamond_b.csv"));

    const auto json = run_cli("compute-b " + fixture("diamond.json") + " --format json");
    CHECK(json.code == 0);
    CHECK(json.out == golden("diamond_b.json"));

    const auto exact =
        run_cli("--rational compute-b " + fixture("diamond_rational.json"));
    CHECK(exact.code == 0);
    CHECK(exact.out == golden("diamond_b_rational.csv"));

    // decimal weights convert to the same exact fractions
    const auto from_decimals = run_cli("--rational compute-b " + fixture("diamond.json"));
    CHECK(from_decimals.out == golden("diamond_b_rational.csv"));
}

TEST_CASE("compute-b failure exit codes") {
    const auto zero = run_cli("compute-b " + fixture("zero_weight.json"));
    CHECK(zero.code == 2);
    CHECK(zero.err.find("(1,2)") != std::string::npos); // names the edge

    const auto cyclic = run_cli("compute-b " + fixture("cyclic.json"));
    CHECK(cyclic.code == 3);
    CHECK(cyclic.err.find("cycle") != std::string::npos);

    CHECK(run_cli("compute-b /nonexistent.json").code == 2);
    CHECK(run_cli("compute-b").code == 2); // missing argument
}

TEST_CASE("min-dag from model and matrix") {
    const auto from_model = run_cli("min-dag " + fixture("triangle_free.json"));
    CHECK(from_model.code == 0);
    CHECK(from_model.out == golden("triangle_min_dag.dot"));

    const auto edges =
        run_cli("min-dag " + fixture("triangle_free.json") + " --format edges");
    CHECK(edges.out == golden("triangle_min_dag_edges.txt"));

    const auto from_matrix = run_cli("min-dag " + fixture("diamond_b.csv"));
    CHECK(from_matrix.code == 0);
    CHECK(from_matrix.out.find("1 -> 4") == std::string::npos); // tied edge excluded

    const auto invalid = run_cli("min-dag " + fixture("diamond_b_low.csv"));
    CHECK(invalid.code == 4);
}

TEST_CASE("validate verdicts and diagnostics") {
    CHECK(run_cli("validate " + fixture("diamond_b.csv")).code == 0);

    const auto low = run_cli("validate " + fixture("diamond_b_low.csv") + " --json");
    CHECK(low.code == 1);
    CHECK(low.out == golden("validate_low.json"));

    // with the DAG: the raised entry is invalid on the diamond...
    const auto on_dag = run_cli("validate " + fixture("diamond_b_perturbed.csv") + " " +
                                fixture("dag_diamond.json"));
    CHECK(on_dag.code == 1);
    // ...but the same matrix is fine in the DAG-free check
    CHECK(run_cli("validate " + fixture("diamond_b_perturbed.csv")).code == 0);

    // sign-pattern mismatch against the provided DAG is a usage error
    const auto mismatch = run_cli("validate " + fixture("diamond_b.csv") + " " +
                                  fixture("dag_chain4.json"));
    CHECK(mismatch.code == 2);
}

TEST_CASE("represent matches the worked example, both branches") {
    const auto plain =
        run_cli("represent " + fixture("diamond_b.csv") + " --node 4 --given 1,2");
    CHECK(plain.code == 0);
    CHECK(plain.out == golden("represent_4_12.json"));

    const auto perturbed = run_cli("represent " + fixture("diamond_b_perturbed.csv") +
                                   " --node 4 --given 1,2");
    CHECK(perturbed.code == 0);
    CHECK(perturbed.out == golden("represent_4_12_perturbed.json"));

    const auto parents = run_cli("represent " + fixture("diamond_b.csv") + " --node 4 --parents");
    CHECK(parents.code == 0);
    CHECK(parents.out.find("\"2\": 0.8") != std::string::npos);
    CHECK(parents.out.find("\"3\": 0.9") != std::string::npos);

    // out-of-range node label
    CHECK(run_cli("represent " + fixture("diamond_b.csv") + " --node 9 --given 1").code == 3);
    CHECK(run_cli("bounds " + fixture("diamond_b.csv") + " --node 9").code == 3);
}

TEST_CASE("bounds fixture and empty-set conventions") {
    const auto interval = run_cli("bounds " + fixture("diamond_b.csv") +
                                  " --node 4 --given 2 --values " + fixture("values_x2.json"));
    CHECK(interval.code == 0);
    CHECK(interval.out == golden("bounds_4_2.json"));

    const auto vacuous = run_cli("bounds " + fixture("diamond_b.csv") + " --node 4");
    CHECK(vacuous.code == 0);
    CHECK(vacuous.out == golden("bounds_empty.json"));
}

TEST_CASE("polytree export carries the weights") {
    const auto run = run_cli("polytree " + fixture("diamond.json") + " --node 4");
    CHECK(run.code == 0);
    CHECK(run.out == golden("diamond_polytree4.dot"));
}

TEST_CASE("simulate layout, determinism, metadata") {
    const std::string meta_path = "/tmp/maxlin_cli_meta.json";
    const auto run = run_cli("simulate " + fixture("diamond.json") +
                             " --n 2 --seed 7 --dist uniform01 --meta " + meta_path);
    CHECK(run.code == 0);
    CHECK(run.out == golden("simulate_u01.csv"));
    const std::string meta = slurp(meta_path);
    CHECK(meta.find("splitmix64-counter") != std::string::npos);
    CHECK(meta.find("uniform01") != std::string::npos);
    CHECK(meta.find("model_hash") != std::string::npos);
    std::remove(meta_path.c_str());

    const auto empty = run_cli("simulate " + fixture("diamond.json") + " --n 0 --seed 1");
    CHECK(empty.code == 0);
    CHECK(empty.out == "sample,Z1,Z2,Z3,Z4,X1,X2,X3,X4\n");

    CHECK(run_cli("simulate " + fixture("diamond.json") + " --n 2 --dist cauchy").code == 2);
    CHECK(run_cli("--rational simulate " + fixture("diamond.json") + " --n 2").code == 2);
}

TEST_CASE("every subcommand is deterministic across invocations") {
    const std::string commands[] = {
        "compute-b " + fixture("diamond.json"),
        "compute-b " + fixture("diamond.json") + " --format json",
        "--rational compute-b " + fixture("diamond_rational.json"),
        "min-dag " + fixture("triangle_free.json"),
        "validate " + fixture("diamond_b_low.csv") + " --json",
        "represent " + fixture("diamond_b.csv") + " --node 4 --given 1,2",
        "bounds " + fixture("diamond_b.csv") + " --node 4 --given 2 --values " +
            fixture("values_x2.json"),
        "polytree " + fixture("diamond.json") + " --node 4",
        "simulate " + fixture("diamond.json") + " --n 5 --seed 123",
    };
    for (const std::string &cmd : commands) {
        const auto first = run_cli(cmd);
        const auto second = run_cli(cmd);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("rational mode changes no verdict on exactly representable input") {
    CHECK(run_cli("--rational validate " + fixture("diamond_b.csv")).code == 0);
    CHECK(run_cli("--rational validate " + fixture("diamond_b_low.csv")).code == 1);
    CHECK(run_cli("--rational validate " + fixture("diamond_b_perturbed.csv")).code == 0);
    CHECK(run_cli("--rational min-dag " + fixture("diamond_b_low.csv")).code == 4);

    const auto fleet = run_cli("min-dag " + fixture("triangle_free.json"));
    const auto exact = run_cli("--rational min-dag " + fixture("triangle_free.json"));
    CHECK(exact.code == 0);
    CHECK(exact.out == fleet.out);

    const auto rep_float =
        run_cli("represent " + fixture("diamond_b.csv") + " --node 4 --given 1,2");
    const auto rep_exact =
        run_cli("--rational represent " + fixture("diamond_b.csv") + " --node 4 --given 1,2");
    CHECK(rep_exact.code == 0);
    // same terms, coefficients as exact ratios; neither mode keeps node 1
    CHECK(rep_exact.out.find("\"2\": \"4/5\"") != std::string::npos);
    CHECK(rep_exact.out.find("\"1\":") == std::string::npos);
    CHECK(rep_float.out.find("\"1\":") == std::string::npos);
}

TEST_CASE("MAXLIN_RTOL environment variable widens equality") {
    // 0.39 vs the 0.4 two-leg route: invalid at the default tolerance,
    // indistinguishable at rtol = 0.1
    const auto strict = run_cli("validate " + fixture("diamond_b_low.csv"));
    CHECK(strict.code == 1);
    const auto loose =
        run_cli("validate " + fixture("diamond_b_low.csv") + " --rtol 0.1");
    CHECK(loose.code == 0);
    const std::string env_cmd = std::string("MAXLIN_RTOL=0.1 ") + MAXLIN_CLI_PATH +
                                " validate " + fixture("diamond_b_low.csv") +
                                " > /dev/null 2>&1";
    const int status = std::system(env_cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const std::string out_path = "/tmp/maxlin_cli_outfile.csv";
    const auto direct = run_cli("compute-b " + fixture("diamond.json"));
    const auto to_file =
        run_cli("compute-b " + fixture("diamond.json") + " --out " + out_path);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(out_path) == direct.out);
    std::remove(out_path.c_str());
}

TEST_CASE("log-domain compute-b matches the default within tolerance") {
    const auto plain = run_cli("compute-b " + fixture("diamond.json"));
    const auto logged = run_cli("compute-b " + fixture("diamond.json") + " --log-domain");
    CHECK(logged.code == 0);
    std::istringstream expected(plain.out), actual(logged.out);
    std::string lhs_line, rhs_line;
    while (std::getline(expected, lhs_line) && std::getline(actual, rhs_line)) {
        std::istringstream lhs_fields(lhs_line), rhs_fields(rhs_line);
        std::string lhs_field, rhs_field;
        while (std::getline(lhs_fields, lhs_field, ',') &&
               std::getline(rhs_fields, rhs_field, ',')) {
            CHECK(std::stod(rhs_field) ==
                  doctest::Approx(std::stod(lhs_field)).epsilon(1e-12));
        }
    }
    CHECK(run_cli("--rational compute-b " + fixture("diamond.json") + " --log-domain").code ==
          2);
}
