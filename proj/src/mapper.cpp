#include "camel/mapper.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <random>

namespace camel {

const char* to_string(CompileMode m) {
    switch (m) {
        case CompileMode::Camel: return "camel";
        case CompileMode::Serial: return "serial";
        case CompileMode::Agnostic: return "agnostic";
    }
    return "?";
}

CompileMode mode_from_string(const std::string& s) {
    if (s == "camel") return CompileMode::Camel;
    if (s == "serial") return CompileMode::Serial;
    if (s == "agnostic") return CompileMode::Agnostic;
    throw Error("unknown mode '" + s + "' (expected camel, serial or agnostic)");
}

ChipContext make_chip_context(const ChipConfig& cfg, ExecPolicy policy) {
    ChipContext ctx;
    ctx.graph = build_grid(cfg.M, cfg.N);
    ctx.dist = distance_matrix(ctx.graph, policy);
    if (cfg.windows_enabled()) {
        ctx.windows = enumerate_windows(ctx.graph, cfg.m, cfg.n);
        ctx.window_diameter = cfg.m + cfg.n - 2;
    }
    ctx.far_threshold = cfg.window_far_distance;
    ctx.durations = cfg.durations;
    return ctx;
}

Mapping Mapping::identity(int n_logical, int n_physical) {
    Mapping pi;
    pi.forward.resize(n_logical);
    std::iota(pi.forward.begin(), pi.forward.end(), 0);
    pi.inverse.assign(n_physical, -1);
    for (int q = 0; q < n_logical; ++q) pi.inverse[q] = q;
    return pi;
}

Mapping Mapping::random(int n_logical, int n_physical, std::uint64_t seed) {
    std::vector<int> phys(n_physical);
    std::iota(phys.begin(), phys.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(phys.begin(), phys.end(), rng);
    Mapping pi;
    pi.forward.assign(phys.begin(), phys.begin() + n_logical);
    pi.inverse.assign(n_physical, -1);
    for (int q = 0; q < n_logical; ++q) pi.inverse[pi.forward[q]] = q;
    return pi;
}

void Mapping::apply_swap(int a, int b) {
    int la = inverse[a], lb = inverse[b];
    inverse[a] = lb;
    inverse[b] = la;
    if (lb >= 0) forward[lb] = a;
    if (la >= 0) forward[la] = b;
}

bool Mapping::valid() const {
    std::vector<char> seen(inverse.size(), 0);
    for (size_t q = 0; q < forward.size(); ++q) {
        int p = forward[q];
        if (p < 0 || p >= static_cast<int>(inverse.size()) || seen[p]) return false;
        seen[p] = 1;
        if (inverse[p] != static_cast<int>(q)) return false;
    }
    return true;
}

void SearchParams::validate() const {
    if (lookahead < 0 || lookahead > max_lookahead)
        throw Error("lookahead depth must be in [0, " + std::to_string(max_lookahead) + "]");
    if (width < 1 || width > max_width)
        throw Error("search width must be in [1, " + std::to_string(max_width) + "]");
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Mutable view of how far the source DAG has been consumed.
struct Frontier {
    std::vector<int> missing;  // unexecuted predecessor count per gate
    std::vector<char> done;
    std::set<int> ready;
    int remaining = 0;

    explicit Frontier(const DagCircuit& dag) {
        int n = dag.num_gates();
        missing.resize(n);
        done.assign(n, 0);
        remaining = n;
        for (int id = 0; id < n; ++id) {
            missing[id] = static_cast<int>(dag.preds[id].size());
            if (missing[id] == 0) ready.insert(id);
        }
    }

    void execute(const DagCircuit& dag, int id) {
        assert(ready.count(id));
        ready.erase(id);
        done[id] = 1;
        --remaining;
        for (int s : dag.succs[id])
            if (--missing[s] == 0) ready.insert(s);
    }
};

bool executable_under(const Gate& g, const Mapping& pi, const ChipContext& ctx) {
    if (!is_two_qubit(g.kind)) return true;
    return ctx.dist(pi.physical(g.operands[0]), pi.physical(g.operands[1])) == 1;
}

/// Parallel-rule check for one candidate layer (gate qubit sets, two-qubit
/// flags). Windows: every connected component of the induced coupling
/// subgraph must have diameter <= window diameter. Serial: no two two-qubit
/// gates closer than 2 hops.
bool layer_allowed(const ChipContext& ctx, CompileMode mode,
                   const std::vector<std::vector<int>>& qubit_sets,
                   const std::vector<char>& two_qubit) {
    if (mode == CompileMode::Agnostic) return true;
    if (mode == CompileMode::Serial) {
        for (size_t i = 0; i < qubit_sets.size(); ++i) {
            if (!two_qubit[i]) continue;
            for (size_t j = i + 1; j < qubit_sets.size(); ++j) {
                if (!two_qubit[j]) continue;
                for (int a : qubit_sets[i])
                    for (int b : qubit_sets[j])
                        if (ctx.dist(a, b) <= 1) return false;
            }
        }
        return true;
    }
    // Camel: diameter bound from the calibration window
    std::vector<int> qs;
    for (const auto& s : qubit_sets) qs.insert(qs.end(), s.begin(), s.end());
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    int k = static_cast<int>(qs.size());
    auto index_of = [&](int q) {
        return static_cast<int>(std::lower_bound(qs.begin(), qs.end(), q) - qs.begin());
    };
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int nb : ctx.graph.adj[qs[i]])
            if (std::binary_search(qs.begin(), qs.end(), nb)) adj[i].push_back(index_of(nb));
    // BFS from every vertex; max eccentricity within a component is its diameter
    std::vector<int> dist(k);
    for (int s = 0; s < k; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::vector<int> queue{s};
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (int v : adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    if (dist[v] > ctx.window_diameter) return false;
                    queue.push_back(v);
                }
        }
    }
    return true;
}

struct PlannedGate {
    std::vector<int> phys;
    double duration = 0;
    bool two_qubit = false;
};

PlannedGate plan_item(const ChipContext& ctx, const DagCircuit& dag, Mapping& pi,
                      const StepItem& item) {
    PlannedGate p;
    if (item.is_inserted_swap()) {
        auto [a, b] = ctx.graph.edges[item.coupler];
        pi.apply_swap(a, b);
        p.phys = {a, b};
        p.duration = ctx.durations.for_kind(GateKind::SWAP);
        p.two_qubit = true;
    } else {
        const Gate& g = dag.gate(item.gate_id);
        for (int q : g.operands) p.phys.push_back(pi.physical(q));
        p.duration = g.duration_ns > 0 || g.kind == GateKind::BARRIER
                         ? g.duration_ns
                         : ctx.durations.for_kind(g.kind);
        p.two_qubit = is_two_qubit(g.kind);
    }
    return p;
}

} // namespace

double score_step(const ChipContext& ctx, CompileMode mode, Mapping pi,
                  const std::vector<StepItem>& items, const DagCircuit& dag,
                  double swap_penalty) {
    if (items.empty()) return 0.0;
    std::vector<double> clock(ctx.graph.num_qubits(), 0.0);
    struct Member {
        std::vector<int> phys;
        double start, end;
        bool two_qubit;
    };
    std::vector<std::vector<Member>> layers;
    int n_swaps = 0;
    int n_scored = 0;

    for (const StepItem& item : items) {
        // measurement terminals stay out of the scoring clocks
        if (!item.is_inserted_swap() && dag.gate(item.gate_id).kind == GateKind::MEASURE)
            continue;
        ++n_scored;
        if (item.is_inserted_swap()) ++n_swaps;
        PlannedGate g = plan_item(ctx, dag, pi, item);
        bool placed = false;
        for (auto& layer : layers) {
            double start = 0;
            for (int q : g.phys) start = std::max(start, clock[q]);
            double end = start + g.duration;
            bool overlaps = false;
            for (const Member& m : layer)
                if (start < m.end && m.start < end) {
                    overlaps = true;
                    break;
                }
            if (!overlaps) continue;
            std::vector<std::vector<int>> sets;
            std::vector<char> twoq;
            for (const Member& m : layer) {
                sets.push_back(m.phys);
                twoq.push_back(m.two_qubit);
            }
            sets.push_back(g.phys);
            twoq.push_back(g.two_qubit);
            if (layer_allowed(ctx, mode, sets, twoq)) {
                for (int q : g.phys) clock[q] = end;
                layer.push_back({g.phys, start, end, g.two_qubit});
                placed = true;
                break;
            }
            // delayed past this layer's gate qubits
            double t = 0;
            for (const Member& m : layer)
                for (int q : m.phys) t = std::max(t, clock[q]);
            for (int q : g.phys) clock[q] = std::max(clock[q], t);
        }
        if (!placed) {
            double t = *std::max_element(clock.begin(), clock.end());
            for (int q : g.phys) clock[q] = t + g.duration;
            layers.push_back({{g.phys, t, t + g.duration, g.two_qubit}});
        }
    }
    double t_end = *std::max_element(clock.begin(), clock.end());
    if (t_end <= 0) return 0.0;
    return (static_cast<double>(n_scored) - swap_penalty * n_swaps) / t_end;
}

std::vector<SwapCandidate> swap_candidates(const ChipContext& ctx, const Mapping& pi,
                                           const std::vector<int>& top_gate_ids,
                                           const DagCircuit& dag) {
    std::vector<const Gate*> twoq;
    for (int id : top_gate_ids) {
        const Gate& g = dag.gate(id);
        if (is_two_qubit(g.kind)) twoq.push_back(&g);
    }
    std::vector<SwapCandidate> out;
    for (int e = 0; e < static_cast<int>(ctx.graph.edges.size()); ++e) {
        auto [a, b] = ctx.graph.edges[e];
        if (pi.logical(a) < 0 && pi.logical(b) < 0) continue;
        Mapping next = pi;
        next.apply_swap(a, b);
        long long d = 0;
        for (const Gate* g : twoq)
            d += ctx.dist(next.physical(g->operands[0]), next.physical(g->operands[1]));
        out.push_back({e, d});
    }
    std::stable_sort(out.begin(), out.end(), [](const SwapCandidate& x, const SwapCandidate& y) {
        return x.d != y.d ? x.d < y.d : x.coupler < y.coupler;
    });
    return out;
}

namespace {

struct RecState {
    const ChipContext& ctx;
    CompileMode mode;
    const SearchParams& params;
    const DagCircuit& dag;
};

std::vector<StepItem> search_rec(const RecState& st, const Mapping& pi, Frontier frontier,
                                 int lookahead, bool top_level) {
    std::vector<int> front(frontier.ready.begin(), frontier.ready.end());
    std::vector<StepItem> exec;
    for (int id : front)
        if (executable_under(st.dag.gate(id), pi, st.ctx)) exec.push_back({id, -1});
    for (const StepItem& item : exec) frontier.execute(st.dag, item.gate_id);
    if (lookahead == 0 || frontier.remaining == 0) return exec;

    auto cands = swap_candidates(st.ctx, pi, front, st.dag);
    int width = std::min<int>(st.params.width, static_cast<int>(cands.size()));
    if (width == 0) return exec;

    struct Branch {
        double score = kNegInf;
        std::vector<StepItem> items;
    };
    std::vector<Branch> branches(width);
    auto evaluate = [&](int i) {
        Mapping next = pi;
        auto [a, b] = st.ctx.graph.edges[cands[i].coupler];
        next.apply_swap(a, b);
        std::vector<StepItem> tail{StepItem{-1, cands[i].coupler}};
        auto deeper = search_rec(st, next, frontier, lookahead - 1, false);
        tail.insert(tail.end(), deeper.begin(), deeper.end());
        std::vector<StepItem> all = exec;
        all.insert(all.end(), tail.begin(), tail.end());
        branches[i].score = score_step(st.ctx, st.mode, pi, all, st.dag, st.params.swap_penalty);
        branches[i].items = std::move(tail);
    };
#ifdef CAMEL_HAS_OPENMP
    if (top_level && st.params.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < width; ++i) evaluate(i);
    } else {
        for (int i = 0; i < width; ++i) evaluate(i);
    }
#else
    (void)top_level;
    for (int i = 0; i < width; ++i) evaluate(i);
#endif

    // Executing only the already-adjacent gates is the baseline candidate;
    // a swap continuation must strictly beat it. Candidate order breaks ties.
    double baseline =
        exec.empty() ? kNegInf
                     : score_step(st.ctx, st.mode, pi, exec, st.dag, st.params.swap_penalty);
    int best = -1;
    double best_score = baseline;
    for (int i = 0; i < width; ++i)
        if (branches[i].score > best_score) {
            best_score = branches[i].score;
            best = i;
        }
    if (best < 0) return exec;
    exec.insert(exec.end(), branches[best].items.begin(), branches[best].items.end());
    return exec;
}

} // namespace

std::vector<StepItem> search_forward(const ChipContext& ctx, CompileMode mode,
                                     const SearchParams& params, const Mapping& pi,
                                     const DagCircuit& dag, const std::set<int>& executed,
                                     int lookahead, int width) {
    SearchParams p = params;
    p.lookahead = lookahead;
    p.width = width;
    p.validate();
    top_layer(dag, executed);  // validates downward closure
    Frontier f(dag);
    for (int id = 0; id < dag.num_gates(); ++id)
        if (executed.count(id)) f.execute(dag, id);
    RecState st{ctx, mode, p, dag};
    return search_rec(st, pi, std::move(f), lookahead, true);
}

MapResult camel_map(const ChipContext& ctx, CompileMode mode, const DagCircuit& dag,
                    const SearchParams& params) {
    params.validate();
    int n_logical = dag.circuit.num_qubits;
    int n_physical = ctx.graph.num_qubits();
    if (n_logical > n_physical)
        throw CircuitTooLarge("circuit uses " + std::to_string(n_logical) +
                              " qubits but the chip has " + std::to_string(n_physical));

    MapResult res;
    res.initial = params.initial == InitialMapping::Trivial
                      ? Mapping::identity(n_logical, n_physical)
                      : Mapping::random(n_logical, n_physical, params.seed);
    Mapping pi = res.initial;

    Circuit out;
    out.num_qubits = n_physical;
    res.wire_permutation.resize(n_physical);
    std::iota(res.wire_permutation.begin(), res.wire_permutation.end(), 0);
    Frontier frontier(dag);
    RecState st{ctx, mode, params, dag};

    const int stall_cap = 10 * n_physical;
    int stall = 0;
    while (frontier.remaining > 0) {
        auto items = search_rec(st, pi, frontier, params.lookahead, true);
        if (items.empty())
            throw NoProgress("mapper cannot make progress (lookahead " +
                             std::to_string(params.lookahead) + " found nothing executable)");
        bool executed_real = false;
        for (const StepItem& item : items) {
            if (item.is_inserted_swap()) {
                auto [a, b] = ctx.graph.edges[item.coupler];
                out.append(GateKind::SWAP, {a, b});
                pi.apply_swap(a, b);
                for (int& w : res.wire_permutation)
                    w = w == a ? b : (w == b ? a : w);
                ++res.n_swaps;
            } else {
                const Gate& g = dag.gate(item.gate_id);
                assert(executable_under(g, pi, ctx));
                std::vector<int> phys;
                for (int q : g.operands) phys.push_back(pi.physical(q));
                out.append(g.kind, std::move(phys), g.param);
                frontier.execute(dag, item.gate_id);
                executed_real = true;
            }
        }
        stall = executed_real ? 0 : stall + 1;
        if (stall > stall_cap)
            throw NoProgress("mapper stalled for " + std::to_string(stall) +
                             " iterations without executing a gate");
    }

    res.compiled = attach_durations(std::move(out), ctx.durations);
    res.dag = build_dag(res.compiled);
    res.final = pi;
    return res;
}

} // namespace camel
