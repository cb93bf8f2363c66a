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

// maxlin: recursive max-linear models on DAGs from the command line.
//
// Exit codes: 0 success / valid verdict, 1 invalid verdict, 2 input or
// schema error, 3 graph error (cycles, bad node labels), 4 coefficient
// matrix failed validation.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "maxlin/io/dot.hpp"
#include "maxlin/io/model_io.hpp"
#include "maxlin/io/report_io.hpp"
#include "maxlin/paths.hpp"
#include "maxlin/simulate.hpp"

namespace {

using namespace maxlin;

struct GlobalOptions {
    bool rational = false;
    Tolerance tol;
    std::string out_path; // empty = stdout
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw_input("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const GlobalOptions &opts, const std::string &text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out)
        throw_input("cannot write '" + opts.out_path + "'");
    out << text;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw_input("cannot write '" + path + "'");
    out << text;
}

nlohmann::json parse_json(const std::string &text, const std::string &path) {
    nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
    if (parsed.is_discarded())
        throw_input("'" + path + "' is not valid JSON");
    return parsed;
}

enum class FileKind { model, matrix_json, matrix_csv };

FileKind sniff(const std::string &text, const std::string &path) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        if (c == '{')
            return FileKind::model;
        if (c == '[')
            return FileKind::matrix_json;
        return FileKind::matrix_csv;
    }
    throw_input("'" + path + "' is empty");
}

template <WeightScalar T> Matrix<T> load_matrix(const std::string &path) {
    const std::string text = read_file(path);
    switch (sniff(text, path)) {
    case FileKind::matrix_json:
        return matrix_from_json<T>(parse_json(text, path));
    case FileKind::matrix_csv:
        return matrix_from_csv<T>(text);
    case FileKind::model:
        throw_input("'" + path + "' holds a model, expected a matrix");
    }
    throw_input("unreachable");
}

template <WeightScalar T> MaxLinModel<T> load_model(const std::string &path) {
    const std::string text = read_file(path);
    if (sniff(text, path) != FileKind::model)
        throw_input("'" + path + "' does not hold a model object");
    return model_from_json<T>(parse_json(text, path));
}

template <WeightScalar T> std::string render_matrix(const Matrix<T> &m, const std::string &format) {
    if (format == "csv")
        return matrix_to_csv(m);
    if (format == "json")
        return matrix_to_json(m).dump(2) + "\n";
    throw_input("unknown format '" + format + "' (expected csv or json)");
}

std::string render_dag(const Dag &dag, const std::string &format) {
    if (format == "dot")
        return to_dot(dag);
    if (format == "edges")
        return to_edge_list(dag);
    throw_input("unknown format '" + format + "' (expected dot or edges)");
}

// ---- subcommands ---------------------------------------------------------

struct ComputeBArgs {
    std::string model_path;
    std::string format = "csv";
    bool log_domain = false;
};

template <WeightScalar T> int run_compute_b(const GlobalOptions &opts, const ComputeBArgs &args) {
    const auto model = load_model<T>(args.model_path);
    Matrix<T> b(0, 0);
    if (args.log_domain) {
        if constexpr (std::same_as<T, double>)
            b = ml_coefficients_logdomain(model);
        else
            throw_input("--log-domain applies to floating mode only");
    } else {
        b = ml_coefficients(model);
    }
    write_output(opts, render_matrix(b, args.format));
    return 0;
}

struct MinDagArgs {
    std::string input_path;
    std::string format = "dot";
};

template <WeightScalar T> int run_min_dag(const GlobalOptions &opts, const MinDagArgs &args) {
    const std::string text = read_file(args.input_path);
    Dag minimum(1, {});
    if (sniff(text, args.input_path) == FileKind::model) {
        const auto model = model_from_json<T>(parse_json(text, args.input_path));
        minimum = minimum_ml_dag(model, ml_coefficients(model), opts.tol);
    } else {
        const auto b = load_matrix<T>(args.input_path);
        minimum = minimum_ml_dag(b, opts.tol);
    }
    write_output(opts, render_dag(minimum, args.format));
    return 0;
}

struct ValidateArgs {
    std::string b_path;
    std::string dag_path; // optional
    bool json = false;
};

template <WeightScalar T> int run_validate(const GlobalOptions &opts, const ValidateArgs &args) {
    const auto b = load_matrix<T>(args.b_path);
    bool valid = false;
    nlohmann::json report;
    if (!args.dag_path.empty()) {
        const Dag dag = dag_from_json(parse_json(read_file(args.dag_path), args.dag_path));
        const auto verdict = validate_on_dag(b, dag, opts.tol);
        valid = verdict.valid;
        report = validation_to_json(verdict);
    } else {
        const auto verdict = validate_b(b, opts.tol);
        valid = verdict.valid;
        report = validation_to_json(verdict);
    }
    if (args.json)
        write_output(opts, report.dump(2) + "\n");
    else
        write_output(opts, valid ? "valid\n" : "invalid\n");
    return valid ? 0 : 1;
}

struct RepresentArgs {
    std::string b_path;
    NodeId node = 0;
    std::string given;
    bool parents = false;
};

template <WeightScalar T> int run_represent(const GlobalOptions &opts, const RepresentArgs &args) {
    const auto b = load_matrix<T>(args.b_path);
    if (const auto check = validate_b(b, opts.tol); !check.valid)
        throw_invalid_b(check.defects);
    Representation<T> rep;
    if (args.parents) {
        if (!args.given.empty())
            throw_input("--parents and --given are mutually exclusive");
        rep = parent_representation(b, args.node, opts.tol);
    } else {
        const NodeSet given = parse_node_list(args.given, int(b.rows()));
        rep = minimal_representation(b, args.node, given, opts.tol);
    }
    write_output(opts, representation_to_json(rep).dump(2) + "\n");
    return 0;
}

struct BoundsArgs {
    std::string b_path;
    NodeId node = 0;
    std::string given;
    std::string values_path;
};

template <WeightScalar T> int run_bounds(const GlobalOptions &opts, const BoundsArgs &args) {
    const auto b = load_matrix<T>(args.b_path);
    if (const auto check = validate_b(b, opts.tol); !check.valid)
        throw_invalid_b(check.defects);
    const NodeSet given = parse_node_list(args.given, int(b.rows()));
    std::map<NodeId, T> observed;
    if (!args.values_path.empty())
        observed = observations_from_json<T>(
            parse_json(read_file(args.values_path), args.values_path));
    else if (!given.empty())
        throw_input("--given requires --values with the observed components");
    const auto interval = bounds(b, args.node, given, observed, opts.tol);
    write_output(opts, bounds_to_json(interval).dump(2) + "\n");
    return 0;
}

struct PolytreeArgs {
    std::string model_path;
    NodeId node = 0;
};

template <WeightScalar T> int run_polytree(const GlobalOptions &opts, const PolytreeArgs &args) {
    const auto model = load_model<T>(args.model_path);
    const auto b = ml_coefficients(model);
    const Dag polytree = max_weighted_polytree(model, b, args.node, opts.tol);
    const std::string dot = to_dot(polytree, [&model](const Edge &e) {
        return format_scalar(model.edge_weight(e.from, e.to));
    });
    write_output(opts, dot);
    return 0;
}

struct SimulateArgs {
    std::string model_path;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string dist = "frechet";
    std::string meta_path;
};

int run_simulate(const GlobalOptions &opts, const SimulateArgs &args) {
    const auto model = load_model<double>(args.model_path);
    const NoiseSpec spec = NoiseSpec::parse(args.dist, args.seed);
    const SampleBatch batch = simulate(model, spec, args.n);
    write_output(opts, batch_to_csv(batch));
    if (!args.meta_path.empty()) {
        const nlohmann::json meta{{"generator", "splitmix64-counter"},
                                  {"seed", args.seed},
                                  {"dist", spec.name()},
                                  {"n", args.n},
                                  {"model_hash", model_hash(model)}};
        write_file(args.meta_path, meta.dump(2) + "\n");
    }
    return 0;
}

template <typename F> int dispatch(bool rational, F &&run) {
    if (rational)
        return run.template operator()<Rational>();
    return run.template operator()<double>();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"recursive max-linear models on DAGs"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_flag("--rational", opts.rational,
                 "exact rational arithmetic (weights as p/q strings)");
    app.add_option("--rtol", opts.tol.rtol, "relative equality tolerance")
        ->envname("MAXLIN_RTOL");
    app.add_option("--atol", opts.tol.atol, "absolute equality floor");
    app.add_option("--out", opts.out_path, "write output to a file instead of stdout");

    ComputeBArgs compute_args;
    auto *compute = app.add_subcommand("compute-b", "coefficient matrix of a model");
    compute->add_option("model", compute_args.model_path, "model JSON file")->required();
    compute->add_option("--format", compute_args.format, "csv or json");
    compute->add_flag("--log-domain", compute_args.log_domain,
                      "evaluate products as sums of logs");

    MinDagArgs min_dag_args;
    auto *min_dag = app.add_subcommand("min-dag", "minimum ML DAG from a model or matrix");
    min_dag->add_option("input", min_dag_args.input_path, "model or matrix file")->required();
    min_dag->add_option("--format", min_dag_args.format, "dot or edges");

    ValidateArgs validate_args;
    auto *validate = app.add_subcommand("validate", "check a coefficient matrix");
    validate->add_option("matrix", validate_args.b_path, "matrix file")->required();
    validate->add_option("dag", validate_args.dag_path, "optional DAG JSON file");
    validate->add_flag("--json", validate_args.json, "emit JSON diagnostics");

    RepresentArgs represent_args;
    auto *represent = app.add_subcommand("represent", "minimal representation of a component");
    represent->add_option("matrix", represent_args.b_path, "matrix file")->required();
    represent->add_option("--node", represent_args.node, "target component")->required();
    represent->add_option("--given", represent_args.given, "observed nodes, e.g. 1,2,5-7");
    represent->add_flag("--parents", represent_args.parents,
                        "recursion over minimum-DAG parents instead");

    BoundsArgs bounds_args;
    auto *bounds_cmd = app.add_subcommand("bounds", "interval for a component given others");
    bounds_cmd->add_option("matrix", bounds_args.b_path, "matrix file")->required();
    bounds_cmd->add_option("--node", bounds_args.node, "target component")->required();
    bounds_cmd->add_option("--given", bounds_args.given, "observed nodes");
    bounds_cmd->add_option("--values", bounds_args.values_path, "JSON of observed values");

    PolytreeArgs polytree_args;
    auto *polytree = app.add_subcommand("polytree", "max-weighted ancestral polytree");
    polytree->add_option("model", polytree_args.model_path, "model JSON file")->required();
    polytree->add_option("--node", polytree_args.node, "target node")->required();

    SimulateArgs simulate_args;
    auto *simulate_cmd = app.add_subcommand("simulate", "draw noise and model realizations");
    simulate_cmd->add_option("model", simulate_args.model_path, "model JSON file")->required();
    simulate_cmd->add_option("--n", simulate_args.n, "sample count")->required();
    simulate_cmd->add_option("--seed", simulate_args.seed, "RNG seed");
    simulate_cmd->add_option("--dist", simulate_args.dist,
                             "frechet[:alpha] | uniform01 | exponential[:lambda]");
    simulate_cmd->add_option("--meta", simulate_args.meta_path, "write metadata JSON here");

    // let --rational/--rtol/--out appear after the subcommand name too
    for (CLI::App *sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed())
            return dispatch(opts.rational, [&]<WeightScalar T>() {
                return run_compute_b<T>(opts, compute_args);
            });
        if (min_dag->parsed())
            return dispatch(opts.rational, [&]<WeightScalar T>() {
                return run_min_dag<T>(opts, min_dag_args);
            });
        if (validate->parsed())
            return dispatch(opts.rational, [&]<WeightScalar T>() {
                return run_validate<T>(opts, validate_args);
            });
        if (represent->parsed())
            return dispatch(opts.rational, [&]<WeightScalar T>() {
                return run_represent<T>(opts, represent_args);
            });
        if (bounds_cmd->parsed())
            return dispatch(opts.rational, [&]<WeightScalar T>() {
                return run_bounds<T>(opts, bounds_args);
            });
        if (polytree->parsed())
            return dispatch(opts.rational, [&]<WeightScalar T>() {
                return run_polytree<T>(opts, polytree_args);
            });
        if (simulate_cmd->parsed()) {
            if (opts.rational)
                throw_input("simulate runs in floating mode only");
            return run_simulate(opts, simulate_args);
        }
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::graph: return 3;
        case ErrorKind::matrix: return 4;
        case ErrorKind::input: return 2;
        }
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
