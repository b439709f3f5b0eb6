// Times the OpenMP kernels against their serial paths: all-pairs distances,
// mapper lookahead, and state-vector gate application.

#include <chrono>
#include <cstdio>
#include <random>

#include "camel/benchgen.hpp"
#include "camel/mapper.hpp"
#include "camel/statevector.hpp"

using namespace camel;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = clock_type::now();
    f();
    auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.2f %12.2f %9.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

} // namespace

int main() {
    std::printf("%-28s %10s %12s %9s\n", "kernel", "serial/ms", "parallel/ms", "speedup");

    {
        CouplingGraph g = build_grid(64, 64);
        DistanceMatrix a, b;
        distance_matrix(g, ExecPolicy::Serial);  // warm-up
        double ts = time_ms([&] { a = distance_matrix(g, ExecPolicy::Serial); });
        double tp = time_ms([&] { b = distance_matrix(g, ExecPolicy::Parallel); });
        if (a.d != b.d) {
            std::fprintf(stderr, "distance kernel mismatch\n");
            return 1;
        }
        row("distance_matrix 64x64", ts, tp);
    }

    {
        ChipConfig cfg;
        cfg.M = 4;
        cfg.N = 4;
        ChipContext ctx = make_chip_context(cfg);
        Circuit c = gen_xeb(ctx.graph, 16, 24, XebPatternSet::ABCD, 9);
        DagCircuit dag = build_dag(attach_durations(c, ctx.durations));
        SearchParams sp;
        sp.lookahead = 3;
        sp.width = 12;
        sp.seed = 9;
        MapResult ra, rb;
        sp.policy = ExecPolicy::Serial;
        double ts = time_ms([&] { ra = camel_map(ctx, CompileMode::Camel, dag, sp); });
        sp.policy = ExecPolicy::Parallel;
        double tp = time_ms([&] { rb = camel_map(ctx, CompileMode::Camel, dag, sp); });
        if (ra.n_swaps != rb.n_swaps || ra.final.forward != rb.final.forward) {
            std::fprintf(stderr, "mapper kernel mismatch\n");
            return 1;
        }
        row("camel_map xeb16 L3 W12", ts, tp);
    }

    {
        std::mt19937_64 rng(4);
        Circuit c;
        c.num_qubits = 12;
        std::uniform_int_distribution<int> q(0, 11);
        for (int i = 0; i < 4000; ++i) {
            int a = q(rng), b = q(rng);
            while (b == a) b = q(rng);
            if (i % 3 == 0)
                c.append(GateKind::CZ, {a, b});
            else
                c.append(GateKind::H, {a});
        }
        StateVector sa(12, ExecPolicy::Serial), sb(12, ExecPolicy::Parallel);
        double ts = time_ms([&] {
            for (const Gate& g : c.gates) sa.apply_gate(g);
        });
        double tp = time_ms([&] {
            for (const Gate& g : c.gates) sb.apply_gate(g);
        });
        if (sa.amps != sb.amps) {
            std::fprintf(stderr, "statevector kernel mismatch\n");
            return 1;
        }
        row("statevector 12q 4000 gates", ts, tp);
    }
    return 0;
}
