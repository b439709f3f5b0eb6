#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "camel/pipeline.hpp"
#include "camel/qasm.hpp"

namespace {

int log_level() {
    const char* env = std::getenv("CAMEL_LOG");
    if (!env) return 0;
    std::string v = env;
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

void log_info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[camel] " << msg << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw camel::Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw camel::Error("cannot write " + path);
    out << content;
}

std::string sibling_path(const std::string& out, const std::string& ext) {
    auto dot = out.find_last_of('.');
    auto slash = out.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out + ext;
    return out.substr(0, dot) + ext;
}

struct CommonOpts {
    std::string chip_path;
    std::string out_path;
    int depth = 2;
    int width = 8;
    std::int64_t seed = -1;  // -1: take the config's seed
    std::string initial = "random";
    std::string exec = "parallel";
    double swap_penalty = 3.0;
};

camel::SearchParams make_params(const CommonOpts& o, const camel::ChipConfig& cfg) {
    camel::SearchParams p;
    p.lookahead = o.depth;
    p.width = o.width;
    p.seed = o.seed >= 0 ? static_cast<std::uint64_t>(o.seed) : cfg.seed;
    p.swap_penalty = o.swap_penalty;
    p.initial = o.initial == "trivial" ? camel::InitialMapping::Trivial
                                       : camel::InitialMapping::Random;
    p.policy = o.exec == "serial" ? camel::ExecPolicy::Serial : camel::ExecPolicy::Parallel;
    p.validate();
    return p;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--chip", o.chip_path, "chip config JSON")->required();
    cmd->add_option("--out", o.out_path, "report JSON path")->required();
    cmd->add_option("--depth", o.depth, "search depth L");
    cmd->add_option("--width", o.width, "search width W");
    cmd->add_option("--seed", o.seed, "seed (overrides the config's seed)");
    cmd->add_option("--initial", o.initial, "initial mapping: random|trivial")
        ->check(CLI::IsMember({"random", "trivial"}));
    cmd->add_option("--exec", o.exec, "kernel execution: parallel|serial")
        ->check(CLI::IsMember({"parallel", "serial"}));
    cmd->add_option("--swap-penalty", o.swap_penalty, "swap cost in the mapping score");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crosstalk-aware mapper and gate scheduler for grid chips"};
    app.require_subcommand(1);

    CommonOpts copts;
    std::string qasm_path, mode_str = "camel";
    bool simulate = false;
    CLI::App* compile = app.add_subcommand("compile", "compile one circuit");
    compile->add_option("--qasm", qasm_path, "input circuit")->required();
    compile->add_option("--mode", mode_str, "camel|agnostic|serial")
        ->check(CLI::IsMember({"camel", "agnostic", "serial"}));
    compile->add_flag("--simulate", simulate, "also run the state-vector fidelity (<= 12 qubits)");
    add_common(compile, copts);

    CommonOpts bopts;
    std::string suite_str;
    CLI::App* bench = app.add_subcommand("bench", "compare modes over a benchmark suite");
    bench->add_option("--suite", suite_str,
                      "comma-separated names, each optionally name:n[:p]")
        ->required();
    add_common(bench, bopts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile->parsed()) {
            camel::ChipConfig cfg = camel::load_chip_config_file(copts.chip_path);
            camel::SearchParams params = make_params(copts, cfg);
            camel::Circuit source = camel::parse_circuit(read_file(qasm_path));
            log_info("compiling " + qasm_path + " (" + std::to_string(source.gates.size()) +
                     " gates) in mode " + mode_str);
            camel::CompileOutcome outcome = camel::compile_circuit(
                source, cfg, camel::mode_from_string(mode_str), params, simulate);
            write_file(copts.out_path, camel::report_json(outcome, qasm_path, copts.chip_path));
            write_file(sibling_path(copts.out_path, ".qasm"),
                       camel::emit_circuit(outcome.scheduled.circuit));
            std::cout << "t_end_ns=" << outcome.scheduled.schedule.t_end_ns
                      << " swaps=" << outcome.mapped.n_swaps
                      << " cz_sublayers=" << outcome.scheduled.schedule.n_cz_sublayers
                      << " events=" << outcome.events.size()
                      << " fidelity=" << outcome.fidelity.fidelity_analytic << "\n";
        } else {
            camel::ChipConfig cfg = camel::load_chip_config_file(bopts.chip_path);
            camel::SearchParams params = make_params(bopts, cfg);
            std::vector<camel::BenchItem> suite;
            std::stringstream ss(suite_str);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) suite.push_back(camel::parse_bench_item(item));
            if (suite.empty()) throw camel::Error("empty suite");
            log_info("running " + std::to_string(suite.size()) + " benchmarks");
            write_file(bopts.out_path, camel::run_bench(suite, cfg, params));
            std::cout << "wrote " << bopts.out_path << "\n";
        }
    } catch (const camel::InternalInvariantViolation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
