#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "camel/context.hpp"
#include "camel/dag.hpp"

namespace camel {

/// Bijection between logical circuit qubits and a subset of physical qubits.
struct Mapping {
    std::vector<int> forward;  // logical -> physical
    std::vector<int> inverse;  // physical -> logical, -1 where unmapped

    static Mapping identity(int n_logical, int n_physical);
    static Mapping random(int n_logical, int n_physical, std::uint64_t seed);

    int physical(int logical) const { return forward[logical]; }
    int logical(int physical) const { return inverse[physical]; }

    /// Exchanges whatever sits on the two physical qubits (either side may be
    /// unmapped).
    void apply_swap(int phys_a, int phys_b);

    bool valid() const;
};

enum class InitialMapping { Random, Trivial };

struct SearchParams {
    int lookahead = 2;  // L
    int width = 8;      // W
    double swap_penalty = 3.0;
    std::uint64_t seed = 0;
    InitialMapping initial = InitialMapping::Random;
    ExecPolicy policy = ExecPolicy::Parallel;
    int max_lookahead = 4;
    int max_width = 16;

    void validate() const;
};

/// One element of an execution plan: either a gate of the source DAG or a
/// SWAP inserted on a chip coupler.
struct StepItem {
    int gate_id = -1;  // id in the source DAG; -1 for inserted swaps
    int coupler = -1;  // coupler index in CouplingGraph::edges; -1 for gates

    bool is_inserted_swap() const { return coupler >= 0; }
};

struct SwapCandidate {
    int coupler = -1;
    long long d = 0;  // summed post-swap distances of the top layer
};

/// One candidate per coupler touching at least one mapped qubit, sorted by
/// (d ascending, coupler index ascending). `top_gate_ids` is the top layer;
/// only its two-qubit gates contribute to d.
std::vector<SwapCandidate> swap_candidates(const ChipContext& ctx, const Mapping& pi,
                                           const std::vector<int>& top_gate_ids,
                                           const DagCircuit& dag);

/// Greedy layer simulation of an execution plan; returns
/// (|items| - swap_penalty * |swaps|) / t_end, or 0 for an empty plan.
/// The parallel rule follows the compile mode: window diameter (Camel),
/// pairwise adjacency (Serial), or none (Agnostic).
double score_step(const ChipContext& ctx, CompileMode mode, Mapping pi,
                  const std::vector<StepItem>& items, const DagCircuit& dag,
                  double swap_penalty = 3.0);

/// One lookahead step: gates of the top layer executable under pi, plus the
/// best-scoring swap continuation when it beats executing nothing further.
/// Deterministic for fixed inputs.
std::vector<StepItem> search_forward(const ChipContext& ctx, CompileMode mode,
                                     const SearchParams& params, const Mapping& pi,
                                     const DagCircuit& dag, const std::set<int>& executed,
                                     int lookahead, int width);

struct MapResult {
    Circuit compiled;  // operands are physical qubits; durations attached
    DagCircuit dag;
    Mapping initial;
    Mapping final;
    int n_swaps = 0;
    // net wire permutation of the inserted swaps: the content of wire w ends
    // on wire wire_permutation[w]
    std::vector<int> wire_permutation;
};

/// Routes a circuit onto the chip: iterates search_forward, emits executable
/// gates under the running mapping and applies chosen swaps, until the source
/// DAG is exhausted.
MapResult camel_map(const ChipContext& ctx, CompileMode mode, const DagCircuit& dag,
                    const SearchParams& params);

} // namespace camel
