#include <doctest.h>

#include "camel/mapper.hpp"
#include "camel/qasm.hpp"
#include "camel/scheduler.hpp"
#include "camel/statevector.hpp"
#include "test_helpers.hpp"

using namespace camel;

namespace {

// O(V^3) Floyd-Warshall reference, independent of the BFS kernel
std::vector<int> floyd_reference(const CouplingGraph& g) {
    int n = g.num_qubits();
    const int inf = 1 << 20;
    std::vector<int> d(static_cast<size_t>(n) * n, inf);
    for (int i = 0; i < n; ++i) d[i * n + i] = 0;
    for (auto [a, b] : g.edges) d[a * n + b] = d[b * n + a] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    return d;
}

} // namespace

TEST_CASE("distance kernel: serial, parallel and reference agree") {
    for (auto [M, N] : {std::pair{1, 7}, {3, 3}, {4, 6}, {8, 8}}) {
        CouplingGraph g = build_grid(M, N);
        DistanceMatrix serial = distance_matrix(g, ExecPolicy::Serial);
        DistanceMatrix parallel = distance_matrix(g, ExecPolicy::Parallel);
        CHECK(serial.d == parallel.d);
        CHECK(serial.d == floyd_reference(g));
    }
}

TEST_CASE("mapper: parallel branch evaluation is bitwise-identical to serial") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        ChipConfig cfg = camel::testing::grid_config(3, 4);
        ChipContext ctx = make_chip_context(cfg);
        Circuit c = camel::testing::random_circuit(8, 60, seed);
        DagCircuit dag = build_dag(attach_durations(c, ctx.durations));

        SearchParams sp;
        sp.seed = seed;
        sp.lookahead = 2;
        sp.width = 8;
        sp.policy = ExecPolicy::Serial;
        MapResult serial = camel_map(ctx, CompileMode::Camel, dag, sp);
        sp.policy = ExecPolicy::Parallel;
        MapResult parallel = camel_map(ctx, CompileMode::Camel, dag, sp);

        CHECK(emit_circuit(serial.compiled) == emit_circuit(parallel.compiled));
        CHECK(serial.n_swaps == parallel.n_swaps);
        CHECK(serial.final.forward == parallel.final.forward);
    }
}

TEST_CASE("statevector: parallel path matches serial amplitudes exactly") {
    CouplingGraph g = build_grid(3, 4);
    Circuit c = camel::testing::random_circuit(12, 80, 5);
    c = attach_durations(c, default_durations());

    StateVector a(12, ExecPolicy::Serial), b(12, ExecPolicy::Parallel);
    for (const Gate& gate : c.gates) {
        a.apply_gate(gate);
        b.apply_gate(gate);
    }
    CHECK(a.amps == b.amps);

    double fs = simulate_statevector(c, {}, g, ExecPolicy::Serial);
    double fp = simulate_statevector(c, {}, g, ExecPolicy::Parallel);
    CHECK(fs == fp);
}

TEST_CASE("partitioning: layer-parallel execution matches serial") {
    ChipContext ctx = make_chip_context(camel::testing::grid_config(2, 4));
    Circuit c;
    c.num_qubits = 8;
    for (int rep = 0; rep < 3; ++rep)
        for (int col = 0; col < 4; ++col) c.append(GateKind::CZ, {col, col + 4});
    c = attach_durations(c, ctx.durations);
    DagCircuit d = build_dag(c);
    auto layers = build_layers(d, extract_gate_time(d));
    CHECK(generate_partition(ctx, CompileMode::Camel, c, layers, ExecPolicy::Serial) ==
          generate_partition(ctx, CompileMode::Camel, c, layers, ExecPolicy::Parallel));
}
