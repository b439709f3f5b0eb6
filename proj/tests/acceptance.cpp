// Acceptance suite: runs every top-level requirement at its stated tolerance
// and prints one line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "camel/benchgen.hpp"
#include "camel/oracle.hpp"
#include "camel/pipeline.hpp"
#include "camel/qasm.hpp"
#include "camel/statevector.hpp"
#include "test_helpers.hpp"

using namespace camel;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail = "") {
    std::printf("[%s] %2d. %s%s%s\n", pass ? "PASS" : "FAIL", index, name,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0, 1);
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) g.add_edge(i, j);
    return g;
}

// 1. three CZ steps under 2x2 windows vs six under serialization
void criterion_flow() {
    auto t0 = clock_type::now();
    ChipConfig cfg = camel::testing::grid_config(2, 4);
    SearchParams params;
    params.initial = InitialMapping::Trivial;
    Circuit frag = gen_vqe_fragment();

    CompileOutcome cam = compile_circuit(frag, cfg, CompileMode::Camel, params);
    CompileOutcome ser = compile_circuit(frag, cfg, CompileMode::Serial, params);
    double dt = seconds_since(t0);
    bool pass = cam.scheduled.schedule.n_cz_sublayers == 3 &&
                ser.scheduled.schedule.n_cz_sublayers == 6 && dt < 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "camel=%d serial=%d (%.3f s)",
                  cam.scheduled.schedule.n_cz_sublayers, ser.scheduled.schedule.n_cz_sublayers,
                  dt);
    report(1, "ansatz fragment: 3 parallel steps vs 6 serialized", pass, buf);
}

// 2. the four-column CZ layer splits {(0,4),(1,5),(3,7)} then {(2,6)}
void criterion_partition() {
    ChipContext ctx = make_chip_context(camel::testing::grid_config(2, 4));
    Circuit c;
    c.num_qubits = 8;
    for (int col = 0; col < 4; ++col) c.append(GateKind::CZ, {col, col + 4});
    c = attach_durations(c, ctx.durations);
    auto sub = generate_partition(ctx, CompileMode::Camel, c, {{0, 1, 2, 3}});
    bool pass = sub[0] == 0 && sub[1] == 0 && sub[3] == 0 && sub[2] == 1;
    report(2, "column layer partitions into {0,1,3} then {2}", pass);
}

// 3. routing validity and sub-layer independence over 50 random circuits
void criterion_routing() {
    int violations = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        std::mt19937_64 rng(seed * 31 + 7);
        int n_qubits = 4 + static_cast<int>(rng() % 13);  // 4..16
        int n_gates = 40 + static_cast<int>(rng() % 81);  // 40..120
        ChipConfig cfg = camel::testing::grid_config(4, 4);
        ChipContext ctx = make_chip_context(cfg);
        Circuit c = camel::testing::random_circuit(n_qubits, n_gates, seed, seed % 3 == 0);
        for (CompileMode mode :
             {CompileMode::Camel, CompileMode::Serial, CompileMode::Agnostic}) {
            SearchParams params;
            params.seed = seed;
            CompileOutcome o;
            try {
                o = compile_circuit(c, cfg, mode, params);
            } catch (const std::exception&) {
                ++violations;
                continue;
            }
            for (const Gate& g : o.scheduled.circuit.gates)
                if (is_two_qubit(g.kind) &&
                    !ctx.graph.coupled(g.operands[0], g.operands[1]))
                    ++violations;
            if (mode != CompileMode::Agnostic) {
                CompileMode eff = mode;
                if (mode == CompileMode::Camel && !cfg.windows_enabled())
                    eff = CompileMode::Serial;
                ChipContext eff_ctx =
                    make_chip_context(mode == CompileMode::Serial
                                          ? camel::testing::grid_config(4, 4, 0, 0)
                                          : cfg);
                for (const auto& layer : o.scheduled.schedule.layers) {
                    LayerCrosstalk x =
                        layer_crosstalk_graph(eff_ctx, eff, o.scheduled.circuit, layer);
                    for (size_t i = 0; i < x.cz_ids.size(); ++i)
                        for (size_t j = i + 1; j < x.cz_ids.size(); ++j)
                            if (x.graph.has_edge(static_cast<int>(i), static_cast<int>(j)) &&
                                o.scheduled.schedule.sublayer[x.cz_ids[i]] ==
                                    o.scheduled.schedule.sublayer[x.cz_ids[j]])
                                ++violations;
                }
            }
        }
    }
    report(3, "routing validity on 50 random circuits x 3 modes", violations == 0,
           std::to_string(violations) + " violations");
}

// 4. unitary equivalence of compiled circuits at 1e-9
void criterion_semantics() {
    auto t0 = clock_type::now();
    int bad = 0;
    ChipConfig cfg = camel::testing::grid_config(2, 4);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        std::mt19937_64 rng(seed * 17);
        int n_qubits = 4 + static_cast<int>(rng() % 5);  // 4..8
        Circuit c = camel::testing::random_circuit(n_qubits, 24, seed);
        SearchParams params;
        params.seed = seed;
        CompileMode mode = seed % 4 == 0 ? CompileMode::Serial : CompileMode::Camel;
        CompileOutcome o = compile_circuit(c, cfg, mode, params);
        Circuit embedded = oracle::embed_circuit(c, o.mapped.initial, 8);
        if (!oracle::unitary_equiv(embedded, o.scheduled.circuit, o.mapped.wire_permutation,
                                   1e-9))
            ++bad;
    }
    double dt = seconds_since(t0);
    report(4, "semantic preservation on 25 circuits (tol 1e-9)", bad == 0 && dt < 60.0,
           std::to_string(bad) + " failures, " + std::to_string(dt).substr(0, 5) + " s");
}

// 5. coupler and window counting formulas
void criterion_formulas() {
    bool pass = true;
    for (int M = 1; M <= 8; ++M)
        for (int N = 1; N <= 8; ++N) {
            CouplingGraph g = build_grid(M, N);
            if (static_cast<int>(g.edges.size()) != 2 * M * N - M - N) pass = false;
            for (int m = 1; m <= std::min(4, M); ++m)
                for (int n = 1; n <= std::min(4, N); ++n)
                    if (static_cast<int>(enumerate_windows(g, m, n).size()) !=
                        (M - m + 1) * (N - n + 1))
                        pass = false;
        }
    report(5, "coupler count 2MN-M-N and window count (M-m+1)(N-n+1)", pass);
}

// 6. decoherence value, unitarity, full swap, norm preservation
void criterion_noise() {
    bool pass = true;
    if (std::abs(decoherence_prob(500, 500) - (1 - std::exp(-1.0))) > 1e-12) pass = false;

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> angle(-8, 8);
    for (int t = 0; t < 100 && pass; ++t) {
        Unitary8 u = crosstalk_unitary(angle(rng));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                std::complex<double> acc = 0;
                for (int k = 0; k < 8; ++k) acc += std::conj(u[k][i]) * u[k][j];
                if (std::abs(acc - (i == j ? 1.0 : 0.0)) > 1e-12) pass = false;
            }
    }
    Unitary8 full = crosstalk_unitary(3.14159265358979323846 / 2);
    if (std::abs(full[6][3] - std::complex<double>(0, -1)) > 1e-12) pass = false;
    if (std::abs(full[3][3]) > 1e-12) pass = false;

    // norm drift across simulated runs
    double worst = 0;
    {
        CouplingGraph g22 = build_grid(2, 2);
        CouplingGraph g33 = build_grid(3, 3);
        double drift = 0;
        Circuit ghz = attach_durations(gen_ghz(10), default_durations());
        simulate_statevector(ghz, {}, build_grid(2, 5), ExecPolicy::Parallel, &drift);
        worst = std::max(worst, drift);
        Circuit xeb = attach_durations(gen_xeb(g33, 9, 4, XebPatternSet::ABCD, 5),
                                       default_durations());
        DagCircuit d = build_dag(xeb);
        auto start = extract_gate_time(d);
        auto events = detect_crosstalk_events(xeb, start, g33, {}, NoiseConfig{});
        simulate_statevector(xeb, events, g33, ExecPolicy::Parallel, &drift);
        worst = std::max(worst, drift);
        Circuit rand = attach_durations(camel::testing::random_circuit(12, 150, 3),
                                        default_durations());
        simulate_statevector(rand, {}, build_grid(3, 4), ExecPolicy::Serial, &drift);
        worst = std::max(worst, drift);
    }
    if (worst >= 1e-10) pass = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "max norm drift %.2e", worst);
    report(6, "noise model closed forms and unitarity", pass, buf);
}

// 7. fidelity/depth/event ordering on the 9-qubit suite
void criterion_ordering() {
    auto t0 = clock_type::now();
    ChipConfig cfg = camel::testing::grid_config(3, 3);
    cfg.seed = 12345;
    SearchParams params;
    params.seed = cfg.seed;
    params.initial = InitialMapping::Trivial;
    params.width = 8;  // heavier routing on the 3x3 torus-free grid pays off

    CouplingGraph chip = build_grid(3, 3);
    std::vector<std::pair<std::string, Circuit>> suite;
    suite.emplace_back("qft9", gen_qft(9));
    suite.emplace_back("qaoa9", gen_qaoa(9, cfg.seed));
    suite.emplace_back("xeb9p5", gen_xeb(chip, 9, 5, XebPatternSet::ABCD, cfg.seed));

    bool pass = true;
    std::string detail;
    for (auto& [name, circuit] : suite) {
        CompileOutcome cam = compile_circuit(circuit, cfg, CompileMode::Camel, params);
        CompileOutcome ser = compile_circuit(circuit, cfg, CompileMode::Serial, params);
        CompileOutcome agn = compile_circuit(circuit, cfg, CompileMode::Agnostic, params);
        bool ok = cam.fidelity.fidelity_analytic >= ser.fidelity.fidelity_analytic &&
                  cam.fidelity.fidelity_analytic >= agn.fidelity.fidelity_analytic &&
                  cam.scheduled.schedule.t_end_ns <= ser.scheduled.schedule.t_end_ns &&
                  cam.events.empty() && !agn.events.empty();
        if (!ok) pass = false;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s[f %.3g/%.3g/%.3g t %.0f/%.0f ev %zu/%zu]",
                      name.c_str(), cam.fidelity.fidelity_analytic,
                      ser.fidelity.fidelity_analytic, agn.fidelity.fidelity_analytic,
                      cam.scheduled.schedule.t_end_ns, ser.scheduled.schedule.t_end_ns,
                      cam.events.size(), agn.events.size());
        detail += std::string(detail.empty() ? "" : " ") + buf;
    }
    double dt = seconds_since(t0);
    pass = pass && dt < 120.0;
    report(7, "camel dominates serial and agnostic on the 9-qubit suite", pass, detail);
}

// 8. greedy MIS vs exact oracle; partition depth vs chromatic number
void criterion_oracles() {
    int bad = 0;
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 17);  // 4..20
        double p = 0.1 + 0.05 * (trial % 10);
        SimpleGraph g = random_graph(n, p, rng());
        auto greedy = greedy_mis(g);
        auto exact = oracle::exact_mis(g);
        if (greedy.size() > exact.size()) ++bad;
        std::set<int> in(greedy.begin(), greedy.end());
        for (size_t i = 0; i < greedy.size(); ++i)
            for (size_t j = i + 1; j < greedy.size(); ++j)
                if (g.has_edge(greedy[i], greedy[j])) ++bad;
        for (int v = 0; v < g.n && n <= 20; ++v) {  // maximality
            if (in.count(v)) continue;
            bool addable = true;
            for (int u : greedy)
                if (g.has_edge(u, v)) addable = false;
            if (addable) ++bad;
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 10);  // 3..12
        SimpleGraph g = random_graph(n, 0.35, rng());
        auto part = repeated_mis_partition(g);
        int rounds = 0;
        for (int sub : part) rounds = std::max(rounds, sub + 1);
        if (rounds < oracle::min_is_cover(g)) ++bad;
    }
    report(8, "greedy MIS bounded by exact; partition depth >= chromatic", bad == 0,
           std::to_string(bad) + " violations");
}

// 9. mapping wall time across three input doublings
void criterion_complexity() {
    ChipConfig cfg = camel::testing::grid_config(4, 4);
    ChipContext ctx = make_chip_context(cfg);
    SearchParams params;
    params.lookahead = 2;
    params.width = 4;
    params.seed = 1;
    params.initial = InitialMapping::Trivial;

    std::vector<double> times;
    std::vector<int> sizes;
    for (int p : {4, 8, 16, 32}) {
        Circuit c = gen_xeb(ctx.graph, 16, p, XebPatternSet::ABCD, 11);
        DagCircuit dag = build_dag(attach_durations(c, ctx.durations));
        sizes.push_back(dag.num_gates());
        double best = 1e100;
        for (int rep = 0; rep < 2; ++rep) {
            auto t0 = clock_type::now();
            camel_map(ctx, CompileMode::Camel, dag, params);
            best = std::min(best, seconds_since(t0));
        }
        times.push_back(best);
    }
    bool pass = true;
    std::string detail;
    for (size_t i = 1; i < times.size(); ++i) {
        double ratio = times[i] / std::max(times[i - 1], 1e-9);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%s%d->%d: %.2fx", i > 1 ? " " : "", sizes[i - 1],
                      sizes[i], ratio);
        detail += buf;
        if (ratio > 5.0) pass = false;
    }
    report(9, "mapping time grows sub-quadratically per doubling (<= 5x)", pass, detail);
}

// 10. two identical bench invocations produce identical bytes
void criterion_determinism() {
    ChipConfig cfg = camel::testing::grid_config(3, 3);
    cfg.seed = 77;
    SearchParams params;
    params.seed = cfg.seed;
    std::vector<BenchItem> suite;
    for (const char* name : {"simon", "qft", "qaoa", "vqe_fragment", "ghz", "xeb"})
        suite.push_back(parse_bench_item(name));
    std::string a = run_bench(suite, cfg, params);
    std::string b = run_bench(suite, cfg, params);
    report(10, "byte-identical reports for identical invocations", a == b,
           std::to_string(a.size()) + " bytes");
}

} // namespace

int main() {
    criterion_flow();
    criterion_partition();
    criterion_routing();
    criterion_semantics();
    criterion_formulas();
    criterion_noise();
    criterion_ordering();
    criterion_oracles();
    criterion_complexity();
    criterion_determinism();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
