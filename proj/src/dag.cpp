#include "camel/dag.hpp"

#include <algorithm>

namespace camel {

DagCircuit build_dag(Circuit c) {
    check_circuit(c);
    DagCircuit d;
    d.circuit = std::move(c);
    int n = d.num_gates();
    d.preds.assign(n, {});
    d.succs.assign(n, {});
    std::vector<int> last_writer(d.circuit.num_qubits, -1);
    for (const Gate& g : d.circuit.gates) {
        std::vector<int> ps;
        for (int q : g.operands) {
            if (last_writer[q] >= 0) ps.push_back(last_writer[q]);
            last_writer[q] = g.id;
        }
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        for (int p : ps) {
            d.edges.emplace_back(p, g.id);
            d.preds[g.id].push_back(p);
            d.succs[p].push_back(g.id);
        }
    }
    return d;
}

std::set<int> top_layer(const DagCircuit& d, const std::set<int>& executed) {
    for (int id : executed)
        for (int p : d.preds[id])
            if (!executed.count(p))
                throw NotDownwardClosed("gate " + std::to_string(id) +
                                        " is executed but its predecessor " + std::to_string(p) +
                                        " is not");
    std::set<int> f;
    for (int id = 0; id < d.num_gates(); ++id) {
        if (executed.count(id)) continue;
        bool ready = true;
        for (int p : d.preds[id])
            if (!executed.count(p)) {
                ready = false;
                break;
            }
        if (ready) f.insert(id);
    }
    return f;
}

} // namespace camel
