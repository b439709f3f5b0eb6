#include "camel/pipeline.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "camel/statevector.hpp"

namespace camel {

namespace {

using ordered_json = nlohmann::ordered_json;

ChipConfig effective_config(const ChipConfig& cfg, CompileMode mode) {
    ChipConfig out = cfg;
    if (mode == CompileMode::Serial) {
        out.m = 0;
        out.n = 0;
    }
    return out;
}

CompileMode effective_mode(const ChipConfig& cfg, CompileMode mode) {
    // window size 0 degenerates to serialization
    if (mode == CompileMode::Camel && !cfg.windows_enabled()) return CompileMode::Serial;
    return mode;
}

} // namespace

CompileOutcome compile_circuit(const Circuit& source, const ChipConfig& cfg, CompileMode mode,
                               const SearchParams& params, bool simulate) {
    CompileOutcome out;
    out.mode = mode;
    out.config = effective_config(cfg, mode);
    CompileMode eff = effective_mode(out.config, mode);

    ChipContext ctx = make_chip_context(out.config, params.policy);
    out.source = attach_durations(source, ctx.durations);
    DagCircuit dag = build_dag(out.source);

    out.mapped = camel_map(ctx, eff, dag, params);
    out.scheduled = schedule(ctx, eff, out.mapped.compiled);

    const std::vector<Window> no_windows;
    const std::vector<Window>& eval_windows =
        mode == CompileMode::Camel ? ctx.windows : no_windows;
    out.events = detect_crosstalk_events(out.scheduled.circuit, out.scheduled.schedule.start_ns,
                                         ctx.graph, eval_windows, out.config.noise);

    out.fidelity.t_end_ns = out.scheduled.schedule.t_end_ns;
    out.fidelity.n_swaps = out.mapped.n_swaps;
    out.fidelity.n_cz_sublayers = out.scheduled.schedule.n_cz_sublayers;
    out.fidelity.n_crosstalk_events = static_cast<int>(out.events.size());
    out.fidelity.fidelity_analytic =
        estimate_fidelity_analytic(out.scheduled.circuit, out.scheduled.schedule.start_ns,
                                   out.scheduled.schedule.t_end_ns, out.events, out.config.noise);
    if (simulate)
        out.fidelity.fidelity_sim =
            simulate_statevector(out.scheduled.circuit, out.events, ctx.graph, params.policy);

    validate_outcome(ctx, out);
    return out;
}

void validate_outcome(const ChipContext& ctx, const CompileOutcome& outcome) {
    const Circuit& c = outcome.scheduled.circuit;
    for (const Gate& g : c.gates)
        if (is_two_qubit(g.kind) && !ctx.graph.coupled(g.operands[0], g.operands[1]))
            throw InternalInvariantViolation(
                "two-qubit gate " + std::to_string(g.id) + " acts on uncoupled qubits " +
                std::to_string(g.operands[0]) + "," + std::to_string(g.operands[1]));

    std::map<GateKind, int> want, have;
    for (const Gate& g : outcome.source.gates) ++want[g.kind];
    for (const Gate& g : c.gates) ++have[g.kind];
    for (auto [kind, n] : want) {
        if (kind == GateKind::SWAP || kind == GateKind::BARRIER) {
            if (have[kind] < n)
                throw InternalInvariantViolation(std::string("compiled circuit dropped ") +
                                                 to_string(kind) + " gates");
        } else if (have[kind] != n) {
            throw InternalInvariantViolation(std::string("compiled circuit changed the number of ") +
                                             to_string(kind) + " gates");
        }
    }

    CompileMode eff = effective_mode(outcome.config, outcome.mode);
    if (eff != CompileMode::Agnostic) {
        const Schedule& s = outcome.scheduled.schedule;
        for (const auto& layer : s.layers) {
            LayerCrosstalk x = layer_crosstalk_graph(ctx, eff, c, layer);
            for (size_t i = 0; i < x.cz_ids.size(); ++i)
                for (size_t j = i + 1; j < x.cz_ids.size(); ++j)
                    if (x.graph.has_edge(static_cast<int>(i), static_cast<int>(j)) &&
                        s.sublayer[x.cz_ids[i]] == s.sublayer[x.cz_ids[j]])
                        throw InternalInvariantViolation(
                            "sub-layer is not independent: gates " + std::to_string(x.cz_ids[i]) +
                            " and " + std::to_string(x.cz_ids[j]));
        }
        if (!outcome.events.empty())
            throw InternalInvariantViolation("crosstalk-aware schedule left " +
                                             std::to_string(outcome.events.size()) +
                                             " crosstalk events");
    }
}

namespace {

ordered_json mode_summary(const CompileOutcome& o) {
    ordered_json j;
    j["t_end_ns"] = o.scheduled.schedule.t_end_ns;
    j["n_gates"] = o.scheduled.circuit.gates.size();
    j["n_swaps"] = o.mapped.n_swaps;
    j["n_cz_sublayers"] = o.scheduled.schedule.n_cz_sublayers;
    j["n_crosstalk_events"] = o.fidelity.n_crosstalk_events;
    j["fidelity_analytic"] = o.fidelity.fidelity_analytic;
    return j;
}

} // namespace

std::string report_json(const CompileOutcome& o, const std::string& qasm_path,
                        const std::string& chip_path) {
    ordered_json j;
    j["schema"] = 1;
    j["request"] = {{"qasm", qasm_path},
                    {"chip", chip_path},
                    {"mode", to_string(o.mode)},
                    {"simulate", o.fidelity.fidelity_sim.has_value()}};
    j["chip"] = {{"M", o.config.M},
                 {"N", o.config.N},
                 {"window", {{"m", o.config.m}, {"n", o.config.n}}}};

    const Schedule& s = o.scheduled.schedule;
    ordered_json sched;
    sched["t_end_ns"] = s.t_end_ns;
    sched["n_cz_sublayers"] = s.n_cz_sublayers;
    ordered_json gates = ordered_json::array();
    for (const Gate& g : o.scheduled.circuit.gates) {
        ordered_json e;
        e["id"] = g.id;
        e["start_ns"] = s.start_ns[g.id];
        e["duration_ns"] = g.duration_ns;
        e["kind"] = to_string(g.kind);
        e["physical_operands"] = g.operands;
        e["sublayer"] = s.sublayer[g.id];
        if (g.param) e["param"] = *g.param;
        gates.push_back(std::move(e));
    }
    sched["gates"] = std::move(gates);
    ordered_json barriers = ordered_json::array();
    for (int b : s.inserted_barriers)
        barriers.push_back({{"id", b}, {"qubits", o.scheduled.circuit.gates[b].operands}});
    sched["barriers"] = std::move(barriers);
    j["schedule"] = std::move(sched);

    ordered_json fid;
    fid["t_end_ns"] = o.fidelity.t_end_ns;
    fid["n_swaps"] = o.fidelity.n_swaps;
    fid["n_sublayers"] = o.fidelity.n_cz_sublayers;
    fid["n_crosstalk_events"] = o.fidelity.n_crosstalk_events;
    fid["fidelity_analytic"] = o.fidelity.fidelity_analytic;
    if (o.fidelity.fidelity_sim)
        fid["fidelity_sim"] = *o.fidelity.fidelity_sim;
    else
        fid["fidelity_sim"] = nullptr;
    j["fidelity"] = std::move(fid);
    return j.dump(2) + "\n";
}

BenchItem parse_bench_item(const std::string& spec) {
    BenchItem item;
    std::stringstream ss(spec);
    std::string part;
    std::getline(ss, part, ':');
    item.name = part;
    if (std::getline(ss, part, ':')) item.n = std::stoi(part);
    if (std::getline(ss, part, ':')) item.p = std::stoi(part);
    static const char* known[] = {"simon", "qft", "qaoa", "vqe_fragment", "ghz", "xeb"};
    if (std::find(std::begin(known), std::end(known), item.name) == std::end(known))
        throw UnknownBenchmark("unknown benchmark '" + item.name + "'");
    return item;
}

std::string run_bench(const std::vector<BenchItem>& suite, const ChipConfig& cfg,
                      const SearchParams& params) {
    ordered_json j;
    j["schema"] = 1;
    j["chip"] = {{"M", cfg.M}, {"N", cfg.N}, {"window", {{"m", cfg.m}, {"n", cfg.n}}}};
    j["seed"] = params.seed;
    ordered_json entries = ordered_json::array();
    CouplingGraph chip = build_grid(cfg.M, cfg.N);
    for (const BenchItem& item : suite) {
        int n = item.n;
        if (n == 0) {
            n = chip.num_qubits();
            if (item.name == "simon" && n % 2 != 0) n -= 1;
            if (item.name == "vqe_fragment") n = 8;
        }
        Circuit circuit = gen_benchmark(item.name, chip, n, item.p, params.seed);

        ordered_json entry;
        entry["name"] = item.name;
        entry["n"] = n;
        if (item.name == "xeb") entry["p"] = item.p;

        std::map<CompileMode, CompileOutcome> outcomes;
        for (CompileMode mode : {CompileMode::Camel, CompileMode::Serial, CompileMode::Agnostic})
            outcomes.emplace(mode, compile_circuit(circuit, cfg, mode, params));

        ordered_json modes;
        for (auto& [mode, o] : outcomes) modes[to_string(o.mode)] = mode_summary(o);
        entry["modes"] = std::move(modes);
        double t_camel = outcomes.at(CompileMode::Camel).scheduled.schedule.t_end_ns;
        entry["depth_ratio_serial"] =
            t_camel > 0 ? outcomes.at(CompileMode::Serial).scheduled.schedule.t_end_ns / t_camel
                        : 1.0;
        entry["depth_ratio_agnostic"] =
            t_camel > 0 ? outcomes.at(CompileMode::Agnostic).scheduled.schedule.t_end_ns / t_camel
                        : 1.0;
        entries.push_back(std::move(entry));
    }
    j["suite"] = std::move(entries);
    return j.dump(2) + "\n";
}

} // namespace camel
