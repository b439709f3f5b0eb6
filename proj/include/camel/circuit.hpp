#pragma once

#include <optional>
#include <string>
#include <vector>

#include "camel/errors.hpp"

namespace camel {

enum class GateKind { X, H, RZ, CZ, SWAP, BARRIER, MEASURE };

const char* to_string(GateKind k);

inline bool is_two_qubit(GateKind k) { return k == GateKind::CZ || k == GateKind::SWAP; }
inline bool is_single_qubit(GateKind k) {
    return k == GateKind::X || k == GateKind::H || k == GateKind::RZ;
}

struct Gate {
    int id = 0;
    GateKind kind = GateKind::X;
    std::vector<int> operands;       // qubit indices, distinct within one gate
    std::optional<double> param;     // radians, RZ only
    double duration_ns = 0.0;        // 0 for BARRIER, > 0 otherwise once attached
};

/// Structural equality, ignoring ids and durations. Used by round-trip checks.
bool same_structure(const Gate& a, const Gate& b);

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;         // ids dense from 0, in statement order

    Gate& append(GateKind kind, std::vector<int> operands,
                 std::optional<double> param = std::nullopt);
};

bool same_structure(const Circuit& a, const Circuit& b);

/// Validates operand ranges and per-gate operand distinctness.
void check_circuit(const Circuit& c);

/// Per-kind gate durations in nanoseconds. Unset fields raise MissingDuration
/// when a gate of that kind is present.
struct DurationConfig {
    std::optional<double> t_1q;
    std::optional<double> t_cz;
    std::optional<double> t_swap;
    std::optional<double> t_measure;

    double for_kind(GateKind k) const;  // BARRIER -> 0
};

/// t_1q=20, t_cz=40, t_swap=3*t_cz, t_measure=500.
DurationConfig default_durations();

/// Returns a copy of c with every gate's duration set from cfg by kind.
Circuit attach_durations(Circuit c, const DurationConfig& cfg);

} // namespace camel
