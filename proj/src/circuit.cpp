#include "camel/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace camel {

const char* to_string(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::RZ: return "rz";
        case GateKind::CZ: return "cz";
        case GateKind::SWAP: return "swap";
        case GateKind::BARRIER: return "barrier";
        case GateKind::MEASURE: return "measure";
    }
    return "?";
}

bool same_structure(const Gate& a, const Gate& b) {
    if (a.kind != b.kind || a.operands != b.operands) return false;
    if (a.param.has_value() != b.param.has_value()) return false;
    if (a.param && *a.param != *b.param) return false;
    return true;
}

bool same_structure(const Circuit& a, const Circuit& b) {
    if (a.num_qubits != b.num_qubits || a.gates.size() != b.gates.size()) return false;
    for (size_t i = 0; i < a.gates.size(); ++i)
        if (!same_structure(a.gates[i], b.gates[i])) return false;
    return true;
}

Gate& Circuit::append(GateKind kind, std::vector<int> operands, std::optional<double> param) {
    Gate g;
    g.id = static_cast<int>(gates.size());
    g.kind = kind;
    g.operands = std::move(operands);
    g.param = param;
    gates.push_back(std::move(g));
    return gates.back();
}

void check_circuit(const Circuit& c) {
    for (const Gate& g : c.gates) {
        std::unordered_set<int> seen;
        for (int q : g.operands) {
            if (q < 0 || q >= c.num_qubits)
                throw QubitOutOfRange("gate " + std::to_string(g.id) + " references qubit " +
                                      std::to_string(q) + " outside [0, " +
                                      std::to_string(c.num_qubits) + ")");
            if (!seen.insert(q).second)
                throw QubitOutOfRange("gate " + std::to_string(g.id) +
                                      " repeats operand q" + std::to_string(q));
        }
    }
}

double DurationConfig::for_kind(GateKind k) const {
    auto need = [&](const std::optional<double>& v, const char* name) {
        if (!v) throw MissingDuration(std::string("no duration configured for ") + name);
        return *v;
    };
    switch (k) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::RZ: return need(t_1q, "single-qubit gates");
        case GateKind::CZ: return need(t_cz, "cz");
        case GateKind::SWAP: return need(t_swap, "swap");
        case GateKind::MEASURE: return need(t_measure, "measure");
        case GateKind::BARRIER: return 0.0;
    }
    return 0.0;
}

DurationConfig default_durations() {
    DurationConfig d;
    d.t_1q = 20.0;
    d.t_cz = 40.0;
    d.t_swap = 3 * 40.0;
    d.t_measure = 500.0;
    return d;
}

Circuit attach_durations(Circuit c, const DurationConfig& cfg) {
    for (Gate& g : c.gates) g.duration_ns = cfg.for_kind(g.kind);
    return c;
}

} // namespace camel
