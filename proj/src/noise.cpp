#include "camel/noise.hpp"

#include <algorithm>
#include <cmath>

namespace camel {

double decoherence_prob(double t_ns, double T_ns) {
    return 1.0 - std::exp(-t_ns / T_ns);
}

Unitary8 crosstalk_unitary(double theta) {
    Unitary8 u{};
    for (int i = 0; i < 8; ++i) u[i][i] = 1.0;
    // |Q_s Q_2 Q_1>: |110> = 6, |011> = 3
    std::complex<double> c = std::cos(theta);
    std::complex<double> s(0.0, -std::sin(theta));
    u[6][6] = c;
    u[3][3] = c;
    u[6][3] = s;
    u[3][6] = s;
    return u;
}

std::vector<CrosstalkEvent> detect_crosstalk_events(const Circuit& c,
                                                    const std::vector<double>& start_ns,
                                                    const CouplingGraph& g,
                                                    const std::vector<Window>& windows,
                                                    const NoiseConfig& noise) {
    std::vector<int> czs;
    for (const Gate& gate : c.gates)
        if (gate.kind == GateKind::CZ) czs.push_back(gate.id);

    auto covered_together = [&](const Gate& a, const Gate& b) {
        for (const Window& w : windows) {
            bool all = true;
            for (int q : a.operands)
                if (!w.contains(q, g)) all = false;
            for (int q : b.operands)
                if (!w.contains(q, g)) all = false;
            if (all) return true;
        }
        return false;
    };

    std::vector<CrosstalkEvent> events;
    for (int vi : czs) {
        const Gate& victim = c.gates[vi];
        double vs = start_ns[vi], ve = vs + victim.duration_ns;
        for (int ai : czs) {
            if (ai == vi) continue;
            const Gate& agg = c.gates[ai];
            double as = start_ns[ai], ae = as + agg.duration_ns;
            if (!(vs < ae && as < ve)) continue;
            // adjacency at one hop
            int spectator = -1;
            for (int u : agg.operands) {
                for (int v : victim.operands)
                    if (g.coupled(u, v)) {
                        if (spectator < 0 || u < spectator) spectator = u;
                    }
            }
            if (spectator < 0) continue;
            if (covered_together(victim, agg)) continue;  // compensation pulse applies
            CrosstalkEvent e;
            e.victim_gate = vi;
            e.aggressor_gate = ai;
            e.spectator_qubit = spectator;
            e.start_ns = std::max(vs, as);
            e.end_ns = std::min(ve, ae);
            e.theta = noise.g_xtalk_rad_per_ns * victim.duration_ns;
            events.push_back(e);
        }
    }
    return events;
}

double estimate_fidelity_analytic(const Circuit& c, const std::vector<double>& start_ns,
                                  double t_end_ns, const std::vector<CrosstalkEvent>& events,
                                  const NoiseConfig& noise) {
    double f = 1.0;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::H:
            case GateKind::RZ: f *= 1.0 - noise.eps_1q; break;
            case GateKind::CZ: f *= 1.0 - noise.eps_cz; break;
            case GateKind::SWAP:
                // a swap runs as three consecutive CZ-class interactions
                f *= std::pow(1.0 - noise.eps_cz, 3);
                break;
            case GateKind::MEASURE: f *= 1.0 - noise.eps_readout; break;
            case GateKind::BARRIER: break;
        }
    }
    // idle-plus-busy decoherence from a qubit's first gate to circuit end
    std::vector<double> first_use(c.num_qubits, -1.0);
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::BARRIER) continue;
        for (int q : g.operands)
            if (first_use[q] < 0 || start_ns[g.id] < first_use[q]) first_use[q] = start_ns[g.id];
    }
    for (int q = 0; q < c.num_qubits; ++q)
        if (first_use[q] >= 0) f *= std::exp(-(t_end_ns - first_use[q]) / noise.t1_for(q));
    for (const CrosstalkEvent& e : events) {
        double cth = std::cos(e.theta);
        f *= cth * cth;
    }
    return f;
}

} // namespace camel
