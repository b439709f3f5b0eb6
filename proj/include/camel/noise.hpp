#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "camel/chip.hpp"
#include "camel/circuit.hpp"

namespace camel {

struct NoiseConfig {
    std::vector<double> t1_ns{100000.0};  // scalar (size 1) or per-qubit
    std::vector<double> t2_ns{50000.0};   // accepted but unused by the analytic proxy
    double g_xtalk_rad_per_ns = 2 * 3.14159265358979323846 * 1e-3;  // 2*pi * 1 MHz
    double eps_1q = 0.001;
    double eps_cz = 0.006;
    double eps_readout = 0.01;

    double t1_for(int qubit) const {
        return t1_ns.size() == 1 ? t1_ns[0] : t1_ns.at(qubit);
    }
};

/// 1 - exp(-t/T).
double decoherence_prob(double t_ns, double T_ns);

/// One unmitigated (victim, aggressor) pair of time-overlapping CZs at
/// coupler distance 1. The spectator is the aggressor operand adjacent to a
/// victim operand; theta = g_xtalk * t_cz of the victim.
struct CrosstalkEvent {
    int victim_gate = 0;     // gate id in the scheduled circuit
    int aggressor_gate = 0;
    int spectator_qubit = 0;
    double start_ns = 0, end_ns = 0;  // overlap window
    double theta = 0;
};

struct FidelityReport {
    double t_end_ns = 0;
    int n_swaps = 0;
    int n_cz_sublayers = 0;
    int n_crosstalk_events = 0;
    double fidelity_analytic = 1.0;
    std::optional<double> fidelity_sim;
};

using Unitary8 = std::array<std::array<std::complex<double>, 8>, 8>;

/// Population-swap gate on basis ordering |Q_s Q_2 Q_1>: identity except the
/// (|110>, |011>) block, which rotates by [[cos t, -i sin t], [-i sin t, cos t]].
Unitary8 crosstalk_unitary(double theta);

/// Scans a timed circuit (physical operands, start times) for unmitigated
/// overlapping CZ pairs. A pair is mitigated when one calibration window
/// covers all four qubits.
std::vector<CrosstalkEvent> detect_crosstalk_events(const Circuit& c,
                                                    const std::vector<double>& start_ns,
                                                    const CouplingGraph& g,
                                                    const std::vector<Window>& windows,
                                                    const NoiseConfig& noise);

/// Analytic proxy: product of per-gate success rates, per-qubit decoherence
/// over the span from a qubit's first gate to circuit end, cos^2(theta) per
/// crosstalk event, and readout survival per measured qubit.
double estimate_fidelity_analytic(const Circuit& c, const std::vector<double>& start_ns,
                                  double t_end_ns, const std::vector<CrosstalkEvent>& events,
                                  const NoiseConfig& noise);

} // namespace camel
