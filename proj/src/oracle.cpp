#include "camel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace camel {
namespace oracle {

namespace {

using Mask = std::uint64_t;

struct MisSearch {
    const SimpleGraph* g;
    std::vector<Mask> nbr;  // neighborhood masks

    // returns (size, set mask) of a maximum independent set within `alive`
    std::pair<int, Mask> run(Mask alive) {
        if (!alive) return {0, 0};
        // pick the highest-degree vertex among alive, lowest id on ties
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < g->n; ++v) {
            if (!(alive >> v & 1)) continue;
            int deg = __builtin_popcountll(nbr[v] & alive);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        if (pick_deg <= 1) {
            // degree <= 1: taking the vertex is always optimal
            auto [s, m] = run(alive & ~(nbr[pick] | (Mask{1} << pick)));
            return {s + 1, m | (Mask{1} << pick)};
        }
        auto with = run(alive & ~(nbr[pick] | (Mask{1} << pick)));
        with.first += 1;
        with.second |= Mask{1} << pick;
        auto without = run(alive & ~(Mask{1} << pick));
        return with.first >= without.first ? with : without;
    }
};

} // namespace

std::vector<int> exact_mis(const SimpleGraph& g) {
    if (g.n > 30) throw TooLarge("exact_mis is limited to 30 nodes, got " + std::to_string(g.n));
    if (g.n == 0) return {};
    MisSearch s;
    s.g = &g;
    s.nbr.assign(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) s.nbr[u] |= Mask{1} << v;
    auto [size, mask] = s.run((Mask{1} << g.n) - 1);
    (void)size;
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (mask >> v & 1) out.push_back(v);
    return out;
}

namespace {

bool colorable_rec(const SimpleGraph& g, int v, int k, std::vector<int>& color, int used) {
    if (v == g.n) return true;
    int limit = std::min(used + 1, k);  // symmetry breaking: at most one new color
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable_rec(g, v + 1, k, color, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
}

} // namespace

int min_is_cover(const SimpleGraph& g) {
    if (g.n > 12)
        throw TooLarge("min_is_cover is limited to 12 nodes, got " + std::to_string(g.n));
    if (g.n == 0) return 0;
    for (int k = 1; k <= g.n; ++k) {
        std::vector<int> color(g.n, -1);
        if (colorable_rec(g, 0, k, color, 0)) return k;
    }
    return g.n;
}

namespace {

long long matchings_rec(std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) return 1;
    auto [a, b] = edges.back();
    edges.pop_back();
    long long without = matchings_rec(edges);
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : edges)
        if (u != a && u != b && v != a && v != b) rest.emplace_back(u, v);
    return without + matchings_rec(std::move(rest));
}

} // namespace

long long count_matchings(const SimpleGraph& g) {
    auto edges = g.edge_list();
    if (edges.size() > 26)
        throw TooLarge("count_matchings is limited to 26 edges, got " +
                       std::to_string(edges.size()));
    return matchings_rec(std::move(edges));
}

Circuit embed_circuit(const Circuit& logical, const Mapping& initial, int n_physical) {
    Circuit out;
    out.num_qubits = n_physical;
    for (const Gate& g : logical.gates) {
        std::vector<int> phys;
        for (int q : g.operands) phys.push_back(initial.physical(q));
        out.append(g.kind, std::move(phys), g.param);
    }
    return out;
}

namespace {

using Cx = std::complex<double>;

// applies gate g to every column of the dim x dim row-major matrix
void apply_to_matrix(std::vector<Cx>& u, int n, const Gate& g) {
    const long long dim = 1LL << n;
    auto at = [&](long long r, long long c) -> Cx& { return u[r * dim + c]; };
    switch (g.kind) {
        case GateKind::X: {
            long long m = 1LL << g.operands[0];
            for (long long r = 0; r < dim; ++r)
                if (!(r & m))
                    for (long long c = 0; c < dim; ++c) std::swap(at(r, c), at(r | m, c));
            break;
        }
        case GateKind::H: {
            const double s = 1.0 / std::sqrt(2.0);
            long long m = 1LL << g.operands[0];
            for (long long r = 0; r < dim; ++r)
                if (!(r & m))
                    for (long long c = 0; c < dim; ++c) {
                        Cx a = at(r, c), b = at(r | m, c);
                        at(r, c) = s * (a + b);
                        at(r | m, c) = s * (a - b);
                    }
            break;
        }
        case GateKind::RZ: {
            double th = g.param.value_or(0.0);
            Cx p0 = std::exp(Cx(0, -th / 2)), p1 = std::exp(Cx(0, th / 2));
            long long m = 1LL << g.operands[0];
            for (long long r = 0; r < dim; ++r) {
                Cx p = (r & m) ? p1 : p0;
                for (long long c = 0; c < dim; ++c) at(r, c) *= p;
            }
            break;
        }
        case GateKind::CZ: {
            long long ma = 1LL << g.operands[0], mb = 1LL << g.operands[1];
            for (long long r = 0; r < dim; ++r)
                if ((r & ma) && (r & mb))
                    for (long long c = 0; c < dim; ++c) at(r, c) = -at(r, c);
            break;
        }
        case GateKind::SWAP: {
            long long ma = 1LL << g.operands[0], mb = 1LL << g.operands[1];
            for (long long r = 0; r < dim; ++r)
                if ((r & ma) && !(r & mb))
                    for (long long c = 0; c < dim; ++c) std::swap(at(r, c), at((r ^ ma) | mb, c));
            break;
        }
        case GateKind::BARRIER:
        case GateKind::MEASURE: break;
    }
}

} // namespace

std::vector<Cx> circuit_unitary(const Circuit& c) {
    if (c.num_qubits > 8)
        throw TooLarge("circuit_unitary is limited to 8 qubits, got " +
                       std::to_string(c.num_qubits));
    const long long dim = 1LL << c.num_qubits;
    std::vector<Cx> u(dim * dim, 0.0);
    for (long long i = 0; i < dim; ++i) u[i * dim + i] = 1.0;
    for (const Gate& g : c.gates) apply_to_matrix(u, c.num_qubits, g);
    return u;
}

bool unitary_equiv(const Circuit& original, const Circuit& compiled,
                   const std::vector<int>& perm, double tol) {
    if (original.num_qubits != compiled.num_qubits)
        throw TooLarge("unitary_equiv expects circuits on the same wire count");
    int n = compiled.num_qubits;
    const long long dim = 1LL << n;
    std::vector<Cx> uo = circuit_unitary(original);
    std::vector<Cx> uc = circuit_unitary(compiled);

    // P * U_original: row r of the product is row sigma^{-1}(r)... permute rows
    // by moving row r of U_original to row image(r), where image permutes bits
    auto image = [&](long long r) {
        long long out = 0;
        for (int w = 0; w < n; ++w)
            if (r >> w & 1) out |= 1LL << perm[w];
        return out;
    };
    std::vector<Cx> pu(dim * dim);
    for (long long r = 0; r < dim; ++r) {
        long long pr = image(r);
        for (long long c = 0; c < dim; ++c) pu[pr * dim + c] = uo[r * dim + c];
    }

    // factor out a global phase at the largest-magnitude entry of U_compiled
    long long arg = 0;
    double best = -1;
    for (long long i = 0; i < dim * dim; ++i)
        if (std::abs(uc[i]) > best) {
            best = std::abs(uc[i]);
            arg = i;
        }
    if (std::abs(pu[arg]) < 1e-14) return false;
    Cx phase = uc[arg] / pu[arg];
    phase /= std::abs(phase);

    for (long long i = 0; i < dim * dim; ++i)
        if (std::abs(uc[i] - phase * pu[i]) > tol) return false;
    return true;
}

} // namespace oracle
} // namespace camel
