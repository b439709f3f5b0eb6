#include "camel/scheduler.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace camel {

std::vector<double> extract_gate_time(const DagCircuit& d, double* t_end) {
    std::vector<double> start(d.num_gates(), 0.0);
    std::vector<double> avail(d.circuit.num_qubits, 0.0);
    double end = 0;
    for (const Gate& g : d.circuit.gates) {
        double s = 0;
        for (int p : d.preds[g.id]) s = std::max(s, start[p] + d.gate(p).duration_ns);
        for (int q : g.operands) s = std::max(s, avail[q]);
        start[g.id] = s;
        for (int q : g.operands) avail[q] = s + g.duration_ns;
        end = std::max(end, s + g.duration_ns);
    }
    if (t_end) *t_end = end;
    return start;
}

std::vector<std::vector<int>> build_layers(const DagCircuit& d, const std::vector<double>& start) {
    std::vector<std::vector<int>> layers;
    auto overlaps = [&](int i, int j) {
        double si = start[i], ei = si + d.gate(i).duration_ns;
        double sj = start[j], ej = sj + d.gate(j).duration_ns;
        return si < ej && sj < ei;
    };
    for (int id = 0; id < d.num_gates(); ++id) {
        bool placed = false;
        for (auto& layer : layers) {
            bool all = true;
            for (int m : layer)
                if (!overlaps(id, m)) {
                    all = false;
                    break;
                }
            if (all) {
                layer.push_back(id);
                placed = true;
                break;
            }
        }
        if (!placed) layers.push_back({id});
    }
    return layers;
}

namespace {

/// Greedy list of mutually far windows seeded at `seed`, restricted to
/// windows that fully cover at least one pending CZ.
struct WindowSelection {
    std::vector<int> window_ids;
    std::vector<char> covered;  // per pending CZ
    int coverage = 0;
};

bool window_covers_gate(const Window& w, const Gate& g, const CouplingGraph& graph) {
    for (int q : g.operands)
        if (!w.contains(q, graph)) return false;
    return true;
}

bool far_from_all(const ChipContext& ctx, const Window& cand, const std::vector<int>& chosen) {
    for (int wi : chosen)
        if (!windows_disjoint_far(cand, ctx.windows[wi], ctx.dist, ctx.far_threshold))
            return false;
    return true;
}

WindowSelection grow_window_list(const ChipContext& ctx, int seed,
                                 const std::vector<const Gate*>& czs,
                                 const std::vector<char>& window_has_cz) {
    WindowSelection sel;
    sel.window_ids.push_back(seed);
    for (int wj = 0; wj < static_cast<int>(ctx.windows.size()); ++wj) {
        if (wj == seed || !window_has_cz[wj]) continue;
        if (far_from_all(ctx, ctx.windows[wj], sel.window_ids)) sel.window_ids.push_back(wj);
    }
    sel.covered.assign(czs.size(), 0);
    for (size_t i = 0; i < czs.size(); ++i)
        for (int wi : sel.window_ids)
            if (window_covers_gate(ctx.windows[wi], *czs[i], ctx.graph)) {
                sel.covered[i] = 1;
                ++sel.coverage;
                break;
            }
    return sel;
}

} // namespace

LayerCrosstalk layer_crosstalk_graph(const ChipContext& ctx, CompileMode mode, const Circuit& c,
                                     const std::vector<int>& layer_gate_ids) {
    LayerCrosstalk out;
    std::vector<const Gate*> czs;
    for (int id : layer_gate_ids)
        if (c.gates[id].kind == GateKind::CZ) {
            out.cz_ids.push_back(id);
            czs.push_back(&c.gates[id]);
        }
    int k = static_cast<int>(czs.size());
    out.graph = SimpleGraph(k);

    // couplers silenced by compensation pulses within the chosen window list
    std::set<std::pair<int, int>> removed;
    if (mode == CompileMode::Camel && ctx.windows_enabled() && k > 1) {
        std::vector<char> window_has_cz(ctx.windows.size(), 0);
        for (size_t w = 0; w < ctx.windows.size(); ++w)
            for (const Gate* g : czs)
                if (window_covers_gate(ctx.windows[w], *g, ctx.graph)) {
                    window_has_cz[w] = 1;
                    break;
                }
        WindowSelection best;
        bool have = false;
        for (int seed = 0; seed < static_cast<int>(ctx.windows.size()); ++seed) {
            if (!window_has_cz[seed]) continue;
            WindowSelection sel = grow_window_list(ctx, seed, czs, window_has_cz);
            if (!have || sel.coverage > best.coverage) {
                best = std::move(sel);
                have = true;
            }
        }
        if (have) {
            for (int i = 0; i < k; ++i) {
                if (!best.covered[i]) continue;
                for (int j = i + 1; j < k; ++j) {
                    if (!best.covered[j]) continue;
                    for (int u : czs[i]->operands)
                        for (int v : czs[j]->operands)
                            if (ctx.graph.coupled(u, v)) removed.insert(std::minmax(u, v));
                }
            }
        }
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool edge = false;
            for (int u : czs[i]->operands) {
                for (int v : czs[j]->operands)
                    if (ctx.graph.coupled(u, v) && !removed.count(std::minmax(u, v))) {
                        edge = true;
                        break;
                    }
                if (edge) break;
            }
            if (edge) out.graph.add_edge(i, j);
        }
    return out;
}

namespace {

constexpr int kExactMisLimit = 20;

void exact_mis_rec(const SimpleGraph& g, int v, std::vector<int>& cur, std::vector<char>& blocked,
                   std::vector<int>& best) {
    if (v == g.n) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    if (cur.size() + (g.n - v) <= best.size()) return;  // bound
    if (!blocked[v]) {
        std::vector<int> newly;
        for (int u = v + 1; u < g.n; ++u)
            if (g.has_edge(v, u) && !blocked[u]) {
                blocked[u] = 1;
                newly.push_back(u);
            }
        cur.push_back(v);
        exact_mis_rec(g, v + 1, cur, blocked, best);
        cur.pop_back();
        for (int u : newly) blocked[u] = 0;
    }
    exact_mis_rec(g, v + 1, cur, blocked, best);
}

std::vector<int> greedy_min_degree_mis(const SimpleGraph& g) {
    std::vector<char> alive(g.n, 1);
    std::vector<int> picked;
    int remaining = g.n;
    while (remaining > 0) {
        int best = -1, best_deg = g.n + 1;
        for (int v = 0; v < g.n; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (int u = 0; u < g.n; ++u) deg += alive[u] && g.has_edge(v, u);
            if (deg < best_deg) {
                best_deg = deg;
                best = v;
            }
        }
        picked.push_back(best);
        alive[best] = 0;
        --remaining;
        for (int u = 0; u < g.n; ++u)
            if (alive[u] && g.has_edge(best, u)) {
                alive[u] = 0;
                --remaining;
            }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

} // namespace

std::vector<int> greedy_mis(const SimpleGraph& g) { return greedy_min_degree_mis(g); }

std::vector<int> max_independent_set(const SimpleGraph& g) {
    if (g.n == 0) return {};
    if (g.n > kExactMisLimit) return greedy_min_degree_mis(g);
    // include-first search in index order; the first maximum found is the
    // lexicographically smallest, which pins tie-breaks
    std::vector<int> cur, best;
    std::vector<char> blocked(g.n, 0);
    exact_mis_rec(g, 0, cur, blocked, best);
    return best;
}

std::vector<int> repeated_mis_partition(const SimpleGraph& g) {
    std::vector<int> part(g.n, -1);
    std::vector<int> remaining(g.n);
    for (int i = 0; i < g.n; ++i) remaining[i] = i;
    int round = 0;
    while (!remaining.empty()) {
        SimpleGraph sub(static_cast<int>(remaining.size()));
        for (size_t i = 0; i < remaining.size(); ++i)
            for (size_t j = i + 1; j < remaining.size(); ++j)
                if (g.has_edge(remaining[i], remaining[j]))
                    sub.add_edge(static_cast<int>(i), static_cast<int>(j));
        std::vector<int> mis = max_independent_set(sub);
        std::vector<char> taken(remaining.size(), 0);
        for (int i : mis) {
            part[remaining[i]] = round;
            taken[i] = 1;
        }
        std::vector<int> next;
        for (size_t i = 0; i < remaining.size(); ++i)
            if (!taken[i]) next.push_back(remaining[i]);
        remaining = std::move(next);
        ++round;
    }
    return part;
}

std::vector<int> generate_partition(const ChipContext& ctx, CompileMode mode, const Circuit& c,
                                    const std::vector<std::vector<int>>& layers,
                                    ExecPolicy policy) {
    std::vector<int> sub(c.gates.size(), -1);
    auto do_layer = [&](int li) {
        const auto& layer = layers[li];
        LayerCrosstalk x = layer_crosstalk_graph(ctx, mode, c, layer);
        if (x.cz_ids.empty()) return;
        std::vector<int> part;
        if (mode == CompileMode::Serial) {
            // one gate of each crosstalk-connected component per sub-layer
            std::vector<int> comp = x.graph.components();
            std::map<int, int> rank;
            part.resize(x.cz_ids.size());
            for (size_t i = 0; i < x.cz_ids.size(); ++i) part[i] = rank[comp[i]]++;
        } else {
            part = repeated_mis_partition(x.graph);
        }
        for (size_t i = 0; i < x.cz_ids.size(); ++i) sub[x.cz_ids[i]] = part[i];
    };
    int L = static_cast<int>(layers.size());
#ifdef CAMEL_HAS_OPENMP
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int li = 0; li < L; ++li) do_layer(li);
    } else {
        for (int li = 0; li < L; ++li) do_layer(li);
    }
#else
    (void)policy;
    for (int li = 0; li < L; ++li) do_layer(li);
#endif
    return sub;
}

BarrierResult insert_barriers(const Circuit& c, const std::vector<std::vector<int>>& layers,
                              const std::vector<int>& sublayer) {
    int n = static_cast<int>(c.gates.size());

    struct Node {
        const Gate* gate = nullptr;       // original gate, or
        std::vector<int> barrier_qubits;  // qubits of an inserted barrier
        long long key = 0;                // linearization priority
    };
    std::vector<Node> nodes(n);
    for (int i = 0; i < n; ++i) {
        nodes[i].gate = &c.gates[i];
        nodes[i].key = 2LL * i;
    }
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    auto add_edge = [&](int u, int v) {
        succ[u].push_back(v);
        ++indeg[v];
    };
    {
        DagCircuit base = build_dag(c);
        for (auto [u, v] : base.edges) add_edge(u, v);
    }

    for (const auto& layer : layers) {
        int max_sub = -1;
        for (int id : layer) max_sub = std::max(max_sub, sublayer[id]);
        if (max_sub < 1) continue;
        std::vector<std::vector<int>> groups(max_sub + 1);
        for (int id : layer)
            if (sublayer[id] >= 0) groups[sublayer[id]].push_back(id);
        for (int k = 0; k + 1 <= max_sub; ++k) {
            std::set<int> qubits;
            for (int id : groups[k])
                for (int q : c.gates[id].operands) qubits.insert(q);
            for (int id : groups[k + 1])
                for (int q : c.gates[id].operands) qubits.insert(q);
            Node b;
            b.barrier_qubits.assign(qubits.begin(), qubits.end());
            int first_next = *std::min_element(groups[k + 1].begin(), groups[k + 1].end());
            b.key = 2LL * first_next - 1;
            int bid = static_cast<int>(nodes.size());
            nodes.push_back(std::move(b));
            succ.emplace_back();
            indeg.push_back(0);
            for (int id : groups[k]) add_edge(id, bid);
            for (int id : groups[k + 1]) add_edge(bid, id);
        }
    }

    // deterministic Kahn linearization by priority key
    using Entry = std::pair<long long, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (indeg[i] == 0) ready.push({nodes[i].key, static_cast<int>(i)});

    BarrierResult out;
    out.circuit.num_qubits = c.num_qubits;
    out.id_map.assign(n, -1);
    size_t emitted = 0;
    while (!ready.empty()) {
        auto [key, u] = ready.top();
        ready.pop();
        ++emitted;
        if (nodes[u].gate) {
            const Gate& g = *nodes[u].gate;
            Gate& ng = out.circuit.append(g.kind, g.operands, g.param);
            ng.duration_ns = g.duration_ns;
            out.id_map[u] = ng.id;
        } else {
            Gate& ng = out.circuit.append(GateKind::BARRIER, nodes[u].barrier_qubits);
            ng.duration_ns = 0;
            out.barrier_ids.push_back(ng.id);
        }
        for (int v : succ[u])
            if (--indeg[v] == 0) ready.push({nodes[v].key, v});
    }
    if (emitted != nodes.size())
        throw CycleIntroduced("barrier insertion produced a cyclic dependency");
    return out;
}

namespace {

int count_cz_sublayers(const Circuit& c, const std::vector<std::vector<int>>& layers,
                       const std::vector<int>& sublayer) {
    int total = 0;
    for (const auto& layer : layers) {
        std::set<int> subs;
        bool has_cz = false;
        for (int id : layer)
            if (c.gates[id].kind == GateKind::CZ) {
                has_cz = true;
                if (sublayer[id] >= 0) subs.insert(sublayer[id]);
            }
        if (has_cz) total += subs.empty() ? 1 : static_cast<int>(subs.size());
    }
    return total;
}

bool pair_mitigated(const ChipContext& ctx, const Gate& a, const Gate& b) {
    for (const Window& w : ctx.windows) {
        bool all = true;
        for (int q : a.operands)
            if (!w.contains(q, ctx.graph)) all = false;
        for (int q : b.operands)
            if (!w.contains(q, ctx.graph)) all = false;
        if (all) return true;
    }
    return false;
}

bool cz_adjacent(const ChipContext& ctx, const Gate& a, const Gate& b) {
    for (int u : a.operands)
        for (int v : b.operands)
            if (ctx.dist(u, v) == 1) return true;
    return false;
}

struct WorkGate {
    Gate gate;        // operands/param/duration; id rewritten at the end
    int orig_id;      // id in the mapped input circuit, -1 for barriers
    int sub;          // sub-layer index, -1 otherwise
    bool inserted;    // barrier added by scheduling
};

} // namespace

ScheduleResult schedule(const ChipContext& ctx, CompileMode mode, const Circuit& mapped) {
    check_circuit(mapped);
    DagCircuit dag0 = build_dag(mapped);
    double t_end0 = 0;
    std::vector<double> start0 = extract_gate_time(dag0, &t_end0);
    std::vector<std::vector<int>> layers0 = build_layers(dag0, start0);

    if (mode == CompileMode::Agnostic) {
        ScheduleResult res;
        res.circuit = mapped;
        res.dag = std::move(dag0);
        res.schedule.start_ns = std::move(start0);
        res.schedule.t_end_ns = t_end0;
        res.schedule.layers = std::move(layers0);
        res.schedule.sublayer.assign(mapped.gates.size(), -1);
        res.schedule.n_cz_sublayers =
            count_cz_sublayers(res.circuit, res.schedule.layers, res.schedule.sublayer);
        return res;
    }

    std::vector<int> sub0 = generate_partition(ctx, mode, mapped, layers0);
    BarrierResult barriered = insert_barriers(mapped, layers0, sub0);

    // working sequence aligned with the barriered circuit
    std::vector<WorkGate> work;
    {
        std::vector<int> orig_of(barriered.circuit.gates.size(), -1);
        for (int old = 0; old < static_cast<int>(mapped.gates.size()); ++old)
            orig_of[barriered.id_map[old]] = old;
        std::vector<char> is_inserted(barriered.circuit.gates.size(), 0);
        for (int b : barriered.barrier_ids) is_inserted[b] = 1;
        for (const Gate& g : barriered.circuit.gates) {
            WorkGate w{g, orig_of[g.id], orig_of[g.id] >= 0 ? sub0[orig_of[g.id]] : -1,
                       is_inserted[g.id] != 0};
            work.push_back(std::move(w));
        }
    }

    auto rebuild = [&]() {
        Circuit c;
        c.num_qubits = mapped.num_qubits;
        for (WorkGate& w : work) {
            Gate& ng = c.append(w.gate.kind, w.gate.operands, w.gate.param);
            ng.duration_ns = w.gate.duration_ns;
        }
        return c;
    };

    // Re-timing after barrier insertion can slide CZs from different layers
    // into overlap; serialize any unmitigated adjacent pair that remains.
    Circuit cur = rebuild();
    DagCircuit dag = build_dag(cur);
    double t_end = 0;
    std::vector<double> start = extract_gate_time(dag, &t_end);
    size_t cz_count = 0;
    for (const Gate& g : cur.gates) cz_count += g.kind == GateKind::CZ;
    size_t repair_cap = cz_count * cz_count + 1;
    for (size_t iter = 0; iter <= repair_cap; ++iter) {
        int vi = -1, vj = -1;
        for (int i = 0; i < static_cast<int>(cur.gates.size()) && vi < 0; ++i) {
            if (cur.gates[i].kind != GateKind::CZ) continue;
            for (int j = i + 1; j < static_cast<int>(cur.gates.size()); ++j) {
                if (cur.gates[j].kind != GateKind::CZ) continue;
                double ei = start[i] + cur.gates[i].duration_ns;
                double ej = start[j] + cur.gates[j].duration_ns;
                if (!(start[i] < ej && start[j] < ei)) continue;
                if (!cz_adjacent(ctx, cur.gates[i], cur.gates[j])) continue;
                if (mode == CompileMode::Camel && pair_mitigated(ctx, cur.gates[i], cur.gates[j]))
                    continue;
                vi = i;
                vj = j;
                break;
            }
        }
        if (vi < 0) break;
        if (iter == repair_cap)
            throw InternalInvariantViolation("crosstalk repair did not converge");
        std::set<int> qubits(cur.gates[vi].operands.begin(), cur.gates[vi].operands.end());
        qubits.insert(cur.gates[vj].operands.begin(), cur.gates[vj].operands.end());
        WorkGate b;
        b.gate.kind = GateKind::BARRIER;
        b.gate.operands.assign(qubits.begin(), qubits.end());
        b.gate.duration_ns = 0;
        b.orig_id = -1;
        b.sub = -1;
        b.inserted = true;
        work.insert(work.begin() + vj, std::move(b));
        cur = rebuild();
        dag = build_dag(cur);
        start = extract_gate_time(dag, &t_end);
    }

    ScheduleResult res;
    res.circuit = std::move(cur);
    res.dag = std::move(dag);
    res.schedule.start_ns = std::move(start);
    res.schedule.t_end_ns = t_end;
    res.schedule.sublayer.assign(res.circuit.gates.size(), -1);
    std::vector<int> final_of_orig(mapped.gates.size(), -1);
    for (int id = 0; id < static_cast<int>(work.size()); ++id) {
        if (work[id].orig_id >= 0) final_of_orig[work[id].orig_id] = id;
        res.schedule.sublayer[id] = work[id].sub;
        if (work[id].inserted) res.schedule.inserted_barriers.push_back(id);
    }
    for (const auto& layer : layers0) {
        std::vector<int> translated;
        for (int old : layer) translated.push_back(final_of_orig[old]);
        res.schedule.layers.push_back(std::move(translated));
    }
    res.schedule.n_cz_sublayers =
        count_cz_sublayers(res.circuit, res.schedule.layers, res.schedule.sublayer);
    return res;
}

} // namespace camel
