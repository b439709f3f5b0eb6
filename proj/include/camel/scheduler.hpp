#pragma once

#include <vector>

#include "camel/context.hpp"
#include "camel/dag.hpp"
#include "camel/graphs.hpp"

namespace camel {

struct Schedule {
    std::vector<double> start_ns;  // per gate id of the scheduled circuit
    double t_end_ns = 0;
    std::vector<std::vector<int>> layers;  // time-overlap groups (scheduled ids)
    std::vector<int> sublayer;             // per gate id; -1 for unpartitioned gates
    std::vector<int> inserted_barriers;    // ids of barriers added by scheduling
    int n_cz_sublayers = 0;
};

struct ScheduleResult {
    Circuit circuit;  // input gates plus inserted barriers, fresh dense ids
    DagCircuit dag;
    Schedule schedule;
};

/// ASAP start times: each gate starts at the max of its predecessors' finish
/// times and its operand qubits' availability.
std::vector<double> extract_gate_time(const DagCircuit& d, double* t_end = nullptr);

/// Greedy grouping in gate-id order; a gate joins the first layer whose every
/// member overlaps it in time, else opens a new layer.
std::vector<std::vector<int>> build_layers(const DagCircuit& d, const std::vector<double>& start);

/// Crosstalk graph of one layer: nodes are the layer's CZ gates, edges mark
/// pairs joined by a coupler that survives window-edge removal.
struct LayerCrosstalk {
    std::vector<int> cz_ids;  // node order
    SimpleGraph graph;
};
LayerCrosstalk layer_crosstalk_graph(const ChipContext& ctx, CompileMode mode, const Circuit& c,
                                     const std::vector<int>& layer_gate_ids);

/// Maximal independent set: exact branch and bound up to 20 nodes,
/// minimum-degree greedy above.
std::vector<int> max_independent_set(const SimpleGraph& g);

/// The minimum-degree greedy heuristic on its own (always maximal).
std::vector<int> greedy_mis(const SimpleGraph& g);

/// Partition of graph nodes into independent sets by repeated MIS extraction.
std::vector<int> repeated_mis_partition(const SimpleGraph& g);

/// Sub-layer index per gate id (-1 for gates outside any partition).
/// Camel: per-layer repeated MIS after window-edge removal. Serial: every
/// crosstalk-connected component runs one gate per sub-layer.
std::vector<int> generate_partition(const ChipContext& ctx, CompileMode mode, const Circuit& c,
                                    const std::vector<std::vector<int>>& layers,
                                    ExecPolicy policy = ExecPolicy::Parallel);

/// Rebuilds the circuit with one barrier between consecutive sub-layers of
/// each partitioned layer. Returns the new circuit, the id translation for
/// the original gates, and the barrier ids.
struct BarrierResult {
    Circuit circuit;
    std::vector<int> id_map;  // old gate id -> new gate id
    std::vector<int> barrier_ids;
};
BarrierResult insert_barriers(const Circuit& c, const std::vector<std::vector<int>>& layers,
                              const std::vector<int>& sublayer);

/// Full pipeline: extract, layer, partition, barrier, re-extract, then
/// serialize any residual unmitigated overlapping CZ pairs exposed by
/// re-timing. Agnostic mode returns the plain ASAP schedule.
ScheduleResult schedule(const ChipContext& ctx, CompileMode mode, const Circuit& mapped);

} // namespace camel
