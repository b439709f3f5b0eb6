#pragma once

#include <set>
#include <utility>
#include <vector>

#include "camel/circuit.hpp"

namespace camel {

/// Gate dependency graph. Edge (i, j) means gate j reads a qubit whose most
/// recent writer is gate i. Gate ids double as a valid topological order.
struct DagCircuit {
    Circuit circuit;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> preds;  // indexed by gate id
    std::vector<std::vector<int>> succs;

    int num_gates() const { return static_cast<int>(circuit.gates.size()); }
    const Gate& gate(int id) const { return circuit.gates[id]; }
};

DagCircuit build_dag(Circuit c);

/// All unexecuted gates whose predecessors all lie in `executed`.
/// `executed` must be downward-closed in the DAG.
std::set<int> top_layer(const DagCircuit& d, const std::set<int>& executed);

} // namespace camel
