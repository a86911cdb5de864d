// Copyright 2026 The LRE Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command line front end: scale-factor coefficients, overhead tables,
// layerwise folding, single-circuit mitigation runs, and benchmark sweeps.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lre/budget.hpp"
#include "lre/experiments.hpp"
#include "lre/interpolation.hpp"
#include "lre/protocol.hpp"
#include "lre/qasm_io.hpp"

namespace {

using namespace lre;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::uint64_t default_seed() {
    if (const char *env = std::getenv("LRE_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

std::size_t default_threads() {
    if (const char *env = std::getenv("LRE_THREADS")) {
        return static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }
    return 0;  // hardware concurrency
}

void write_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << text;
}

Circuit load_circuit(const std::string &path, std::vector<std::string> *warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (path.ends_with(".json")) {
        return parse_json(text);
    }
    return parse_qasm(text, warnings);
}

void save_circuit(const Circuit &circuit, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    out << (path.extension() == ".json" ? emit_json(circuit) : emit_qasm(circuit));
}

std::string lambda_string(const std::vector<int> &lambda) {
    std::string out;
    for (std::size_t k = 0; k < lambda.size(); k++) {
        if (k > 0) {
            out += ' ';
        }
        out += std::to_string(lambda[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// coeffs
// ---------------------------------------------------------------------------

struct CoeffsOptions {
    std::size_t layers = 1;
    int degree = 1;
    int delta = 2;
    std::string format = "csv";
    std::string out;
};

int run_coeffs(const CoeffsOptions &opt) {
    const ScaleFactorConfig config = default_scale_factors(opt.layers, opt.degree, opt.delta);
    const EtaCoefficients eta = eta_coefficients(config);
    const BudgetReport report = overhead_metrics(eta);

    std::string text;
    if (opt.format == "json") {
        nlohmann::json doc;
        doc["l"] = opt.layers;
        doc["d"] = opt.degree;
        doc["delta"] = opt.delta;
        doc["vectors"] = config.vectors;
        doc["eta"] = eta.values;
        doc["gamma"] = report.gamma;
        doc["c"] = report.c;
        doc["c_tilde"] = report.c_tilde;
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream out;
        out << "index,scale_factors,eta\n";
        for (std::size_t i = 0; i < config.size(); i++) {
            out << i + 1 << ',' << lambda_string(config.vectors[i]) << ','
                << format_double(eta.values[i]) << '\n';
        }
        out << "# gamma=" << format_double(report.gamma) << " c=" << format_double(report.c)
            << " c_tilde=" << format_double(report.c_tilde) << '\n';
        text = out.str();
    }
    write_output(text, opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// overhead
// ---------------------------------------------------------------------------

struct OverheadOptions {
    int degree = 1;
    std::size_t max_layers = 0;
    std::size_t layers = 0;
    int delta = 2;
    std::string delta_range;
    std::string out;
};

int run_overhead(const OverheadOptions &opt) {
    std::vector<OverheadPoint> points;
    if (!opt.delta_range.empty()) {
        if (opt.layers == 0) {
            throw CLI::ValidationError("--delta-range requires --layers");
        }
        int begin = 0;
        int end = 0;
        int step = 2;
        if (std::sscanf(opt.delta_range.c_str(), "%d:%d:%d", &begin, &end, &step) < 2 ||
            step <= 0 || begin > end) {
            throw CLI::ValidationError("--delta-range must be begin:end[:step]");
        }
        for (int delta = begin; delta <= end; delta += step) {
            points.push_back(overhead_point(opt.layers, opt.degree, delta));
        }
    } else if (opt.max_layers > 0) {
        points = overhead_curve(1, opt.max_layers, opt.degree, opt.delta);
    } else if (opt.layers > 0) {
        points.push_back(overhead_point(opt.layers, opt.degree, opt.delta));
    } else {
        throw CLI::ValidationError("need --max-layers, --layers, or --delta-range");
    }

    std::ostringstream out;
    out << "l,d,delta,gamma,c,c_tilde\n";
    for (const OverheadPoint &p : points) {
        out << p.chunk_count << ',' << p.degree << ',' << p.delta << ','
            << format_double(p.gamma) << ',' << format_double(p.c) << ','
            << format_double(p.c_tilde) << '\n';
    }
    write_output(out.str(), opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// fold
// ---------------------------------------------------------------------------

struct FoldOptions {
    std::string in;
    std::size_t chunks = 1;
    std::string lambdas;
    std::string mode = "local";
    std::string out_dir = ".";
    bool all_vectors = false;
    int degree = 1;
    int delta = 2;
};

int run_fold(const FoldOptions &opt) {
    std::vector<std::string> warnings;
    const Circuit circuit = load_circuit(opt.in, &warnings);
    for (const std::string &w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    const FoldMode mode = opt.mode == "global" ? FoldMode::Global : FoldMode::Local;
    const Chunking chunking = chunk_circuit(circuit, opt.chunks);

    const std::filesystem::path in_path(opt.in);
    const std::filesystem::path out_dir(opt.out_dir);
    std::filesystem::create_directories(out_dir);
    const std::string stem = in_path.stem().string();
    const std::string ext = in_path.extension() == ".json" ? ".json" : ".qasm";

    if (opt.all_vectors) {
        const ScaleFactorConfig config =
            default_scale_factors(opt.chunks, opt.degree, opt.delta);
        for (std::size_t i = 0; i < config.size(); i++) {
            const Circuit folded =
                fold_circuit(circuit, chunking, config.vectors[i], mode);
            char suffix[32];
            std::snprintf(suffix, sizeof(suffix), "_v%03zu", i + 1);
            const std::filesystem::path path = out_dir / (stem + suffix + ext);
            save_circuit(folded, path);
            std::cout << path.string() << '\n';
        }
        return kExitOk;
    }

    if (opt.lambdas.empty()) {
        throw CLI::ValidationError("--lambdas required unless --all-vectors is given");
    }
    std::vector<int> lambdas;
    std::stringstream ss(opt.lambdas);
    std::string item;
    while (std::getline(ss, item, ',')) {
        lambdas.push_back(std::stoi(item));
    }
    const Circuit folded = fold_circuit(circuit, chunking, lambdas, mode);
    const std::filesystem::path path = out_dir / (stem + "_folded" + ext);
    save_circuit(folded, path);
    std::cout << path.string() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

struct RunOptions {
    std::string in;
    std::string strategy = "lre";
    int degree = 2;
    std::size_t chunks = 0;  // 0 = full depth
    int delta = 2;
    std::int64_t shots = 1'000'000;
    bool exact = false;
    double p1 = 0.04;
    double p2 = 0.08;
    std::string mode = "local";
    std::uint64_t seed = 0;
    std::string out;
};

nlohmann::json mitigated_to_json(const MitigatedResult &result) {
    nlohmann::json doc;
    doc["value"] = result.value;
    doc["eta"] = result.eta.values;
    doc["gamma"] = result.budget.gamma;
    doc["c"] = result.budget.c;
    doc["c_tilde"] = result.budget.c_tilde;
    doc["total_shots"] = result.budget.total_shots;
    doc["raw"] = nlohmann::json::array();
    for (const RawEstimate &raw : result.raw) {
        nlohmann::json jr;
        jr["scale_factors"] = raw.scale_factors;
        jr["shots"] = raw.shots;
        jr["estimate"] = raw.estimate;
        jr["exact_estimate"] = raw.exact_estimate;
        doc["raw"].push_back(std::move(jr));
    }
    return doc;
}

int run_run(const RunOptions &opt) {
    std::vector<std::string> warnings;
    const Circuit circuit = load_circuit(opt.in, &warnings);
    for (const std::string &w : warnings) {
        std::cerr << "warning: " << w << '\n';
    }
    const NoiseModel noise{opt.p1, opt.p2, true};
    const DiagonalObservable obs = DiagonalObservable::zero_projector(circuit.width());
    const std::int64_t shots = opt.exact ? 0 : opt.shots;

    nlohmann::json doc;
    doc["circuit"] = opt.in;
    doc["strategy"] = opt.strategy;
    doc["seed"] = opt.seed;
    doc["p1"] = opt.p1;
    doc["p2"] = opt.p2;
    doc["shots"] = shots;

    if (opt.strategy == "unmitigated") {
        const ExpectationEstimate est = run_unmitigated(circuit, obs, shots, noise, opt.seed);
        doc["value"] = est.value;
        doc["exact_value"] = est.exact_value;
    } else {
        MitigationConfig config;
        config.degree = opt.degree;
        config.chunk_count = opt.chunks == 0 ? circuit.depth() : opt.chunks;
        config.delta = opt.delta;
        config.total_shots = shots;
        config.mode = opt.mode == "global" ? FoldMode::Global : FoldMode::Local;
        config.strategy = opt.strategy == "re" ? Strategy::Re : Strategy::Lre;
        if (config.strategy == Strategy::Re) {
            config.chunk_count = 1;
        }
        const MitigatedResult result = run_lre(circuit, obs, config, noise, opt.seed);
        doc.update(mitigated_to_json(result));
        doc["d"] = config.degree;
        doc["l"] = config.chunk_count;
        doc["delta"] = config.delta;
    }
    write_output(doc.dump(2) + "\n", opt.out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOptions {
    std::string family = "ghz";
    std::string sweep = "qubits";
    std::vector<std::int64_t> values;
    std::size_t trials = 10;
    std::int64_t shots = 1'000'000;
    bool exact = false;
    int degree = 2;
    std::size_t chunks = 0;
    int delta = 2;
    std::uint32_t qubits = 4;
    std::size_t half_depth = 2;
    double p_cnot = 0.9;
    double p1 = 0.04;
    double p2 = 0.08;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::string format = "csv";
    std::string out;
};

int run_bench(const BenchOptions &opt) {
    ExperimentSpec spec;
    spec.family = opt.family == "random" ? CircuitFamily::RandomMirror
                                         : CircuitFamily::GhzMirror;
    if (opt.sweep == "qubits") {
        spec.sweep = SweepVariable::Qubits;
    } else if (opt.sweep == "degree") {
        spec.sweep = SweepVariable::Degree;
    } else if (opt.sweep == "shots") {
        spec.sweep = SweepVariable::Shots;
    } else if (opt.sweep == "delta") {
        spec.sweep = SweepVariable::Delta;
    } else {
        spec.sweep = SweepVariable::Chunks;
    }
    spec.values = opt.values;
    spec.trials = opt.trials;
    spec.base = MitigationConfig{opt.degree, opt.chunks, opt.delta,
                                 opt.exact ? 0 : opt.shots, FoldMode::Local, Strategy::Lre};
    spec.qubit_count = opt.qubits;
    spec.half_depth = opt.half_depth;
    spec.cnot_probability = opt.p_cnot;
    spec.noise = NoiseModel{opt.p1, opt.p2, true};
    spec.seed = opt.seed;
    spec.threads = opt.threads;

    const ResultTable table = run_experiment(spec);
    write_output(opt.format == "json" ? to_json(table) : to_csv(table), opt.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Layerwise Richardson extrapolation toolkit"};
    app.require_subcommand(1);

    CoeffsOptions coeffs;
    CLI::App *coeffs_cmd =
        app.add_subcommand("coeffs", "Scale-factor vectors, eta coefficients, and overhead");
    coeffs_cmd->add_option("--layers", coeffs.layers, "Number of chunks l")->required();
    coeffs_cmd->add_option("--degree", coeffs.degree, "Extrapolation order d")->required();
    coeffs_cmd->add_option("--delta", coeffs.delta, "Scale-factor gap (even)");
    coeffs_cmd->add_option("--format", coeffs.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    coeffs_cmd->add_option("--out", coeffs.out, "Output file (default stdout)");

    OverheadOptions overhead_opt;
    CLI::App *overhead_cmd =
        app.add_subcommand("overhead", "Sampling-overhead tables vs chunk count or gap");
    overhead_cmd->add_option("--degree", overhead_opt.degree, "Extrapolation order d")
        ->required();
    overhead_cmd->add_option("--max-layers", overhead_opt.max_layers,
                             "Emit rows for l = 1..max");
    overhead_cmd->add_option("--layers", overhead_opt.layers, "Fixed chunk count l");
    overhead_cmd->add_option("--delta", overhead_opt.delta, "Scale-factor gap (even)");
    overhead_cmd->add_option("--delta-range", overhead_opt.delta_range,
                             "begin:end[:step] sweep of the gap");
    overhead_cmd->add_option("--out", overhead_opt.out, "Output file (default stdout)");

    FoldOptions fold;
    CLI::App *fold_cmd = app.add_subcommand("fold", "Write layerwise-folded circuits");
    fold_cmd->add_option("--in", fold.in, "Input circuit (.qasm or .json)")->required();
    fold_cmd->add_option("--chunks", fold.chunks, "Number of chunks l")->required();
    fold_cmd->add_option("--lambdas", fold.lambdas, "Comma-separated odd scale factors");
    fold_cmd->add_option("--mode", fold.mode, "global or local")
        ->check(CLI::IsMember({"global", "local"}));
    fold_cmd->add_option("--out", fold.out_dir, "Output directory");
    fold_cmd->add_flag("--all-vectors", fold.all_vectors,
                       "Write the full M-circuit ensemble for --degree/--delta");
    fold_cmd->add_option("--degree", fold.degree, "Extrapolation order for --all-vectors");
    fold_cmd->add_option("--delta", fold.delta, "Gap for --all-vectors");

    RunOptions run_opt;
    run_opt.seed = default_seed();
    CLI::App *run_cmd = app.add_subcommand("run", "Mitigate one circuit on the simulator");
    run_cmd->add_option("--in", run_opt.in, "Input circuit (.qasm or .json)")->required();
    run_cmd->add_option("--strategy", run_opt.strategy, "lre, re, or unmitigated")
        ->check(CLI::IsMember({"lre", "re", "unmitigated"}));
    run_cmd->add_option("--degree", run_opt.degree, "Extrapolation order d");
    run_cmd->add_option("--chunks", run_opt.chunks, "Chunk count l (0 = full depth)");
    run_cmd->add_option("--delta", run_opt.delta, "Scale-factor gap (even)");
    run_cmd->add_option("--shots", run_opt.shots, "Total shot budget");
    run_cmd->add_flag("--exact", run_opt.exact, "Exact expectation values (no shot noise)");
    run_cmd->add_option("--p1", run_opt.p1, "Single-qubit damping probability");
    run_cmd->add_option("--p2", run_opt.p2, "CNOT damping probability");
    run_cmd->add_option("--mode", run_opt.mode, "global or local folding")
        ->check(CLI::IsMember({"global", "local"}));
    run_cmd->add_option("--seed", run_opt.seed, "Random seed");
    run_cmd->add_option("--out", run_opt.out, "Output file (default stdout)");

    BenchOptions bench;
    bench.seed = default_seed();
    bench.threads = default_threads();
    CLI::App *bench_cmd = app.add_subcommand("bench", "Benchmark sweeps over mirror circuits");
    bench_cmd->add_option("--family", bench.family, "ghz or random")
        ->check(CLI::IsMember({"ghz", "random"}));
    bench_cmd->add_option("--sweep", bench.sweep, "qubits, degree, shots, delta, or chunks")
        ->check(CLI::IsMember({"qubits", "degree", "shots", "delta", "chunks"}))
        ->required();
    bench_cmd->add_option("--values", bench.values, "Comma-separated sweep values")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--trials", bench.trials, "Trials per data point");
    bench_cmd->add_option("--shots", bench.shots, "Total shot budget per trial");
    bench_cmd->add_flag("--exact", bench.exact, "Exact expectation values (no shot noise)");
    bench_cmd->add_option("--degree", bench.degree, "Extrapolation order d");
    bench_cmd->add_option("--chunks", bench.chunks, "Chunk count l (0 = full depth)");
    bench_cmd->add_option("--delta", bench.delta, "Scale-factor gap (even)");
    bench_cmd->add_option("--qubits", bench.qubits, "Width for non-qubit sweeps");
    bench_cmd->add_option("--half-depth", bench.half_depth,
                          "Random family: layers before mirroring");
    bench_cmd->add_option("--p-cnot", bench.p_cnot, "Random family: CNOT probability");
    bench_cmd->add_option("--p1", bench.p1, "Single-qubit damping probability");
    bench_cmd->add_option("--p2", bench.p2, "CNOT damping probability");
    bench_cmd->add_option("--seed", bench.seed, "Master seed");
    bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = hardware)");
    bench_cmd->add_option("--format", bench.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (*coeffs_cmd) {
            return run_coeffs(coeffs);
        }
        if (*overhead_cmd) {
            return run_overhead(overhead_opt);
        }
        if (*fold_cmd) {
            return run_fold(fold);
        }
        if (*run_cmd) {
            return run_run(run_opt);
        }
        if (*bench_cmd) {
            return run_bench(bench);
        }
        return kExitUsage;
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const SingularSampleMatrixError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
