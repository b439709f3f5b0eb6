#include "camel/benchgen.hpp"

#include <cmath>
#include <random>

namespace camel {

namespace {

constexpr double kPi = 3.14159265358979323846;

// cx = h(t) cz(c,t) h(t)
void add_cx(Circuit& c, int control, int target) {
    c.append(GateKind::H, {target});
    c.append(GateKind::CZ, {control, target});
    c.append(GateKind::H, {target});
}

// controlled-phase diag(1,1,1,e^{i theta}) up to global phase
void add_cphase(Circuit& c, int a, int b, double theta) {
    c.append(GateKind::RZ, {a}, theta / 2);
    c.append(GateKind::RZ, {b}, theta / 2);
    add_cx(c, a, b);
    c.append(GateKind::RZ, {b}, -theta / 2);
    add_cx(c, a, b);
}

void add_rx(Circuit& c, int q, double theta) {
    c.append(GateKind::H, {q});
    c.append(GateKind::RZ, {q}, theta);
    c.append(GateKind::H, {q});
}

} // namespace

Circuit gen_ghz(int n) {
    Circuit c;
    c.num_qubits = n;
    c.append(GateKind::H, {0});
    for (int i = 1; i < n; ++i) add_cx(c, i - 1, i);
    return c;
}

Circuit gen_qft(int n) {
    Circuit c;
    c.num_qubits = n;
    for (int i = 0; i < n; ++i) {
        c.append(GateKind::H, {i});
        for (int j = i + 1; j < n; ++j) add_cphase(c, j, i, kPi / std::pow(2.0, j - i));
    }
    for (int i = 0; i < n / 2; ++i) c.append(GateKind::SWAP, {i, n - 1 - i});
    return c;
}

Circuit gen_simon(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0) throw Error("simon requires an even qubit count >= 2");
    int k = n / 2;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> bits(1, (1ull << k) - 1);
    std::uint64_t secret = bits(rng);

    Circuit c;
    c.num_qubits = n;
    for (int i = 0; i < k; ++i) c.append(GateKind::H, {i});
    for (int i = 0; i < k; ++i) add_cx(c, i, k + i);  // copy oracle
    int pivot = 0;
    while (!((secret >> pivot) & 1)) ++pivot;
    for (int i = 0; i < k; ++i)
        if ((secret >> i) & 1) add_cx(c, pivot, k + i);
    for (int i = 0; i < k; ++i) c.append(GateKind::H, {i});
    for (int i = 0; i < k; ++i) c.append(GateKind::MEASURE, {i});
    return c;
}

Circuit gen_qaoa(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> graph_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < 0.5) graph_edges.emplace_back(i, j);

    const double gamma = 0.7, beta = 0.3;
    Circuit c;
    c.num_qubits = n;
    for (int q = 0; q < n; ++q) c.append(GateKind::H, {q});
    for (auto [i, j] : graph_edges) {  // exp(-i gamma Z_i Z_j)
        add_cx(c, i, j);
        c.append(GateKind::RZ, {j}, 2 * gamma);
        add_cx(c, i, j);
    }
    for (int q = 0; q < n; ++q) add_rx(c, q, 2 * beta);
    return c;
}

Circuit gen_vqe_fragment() {
    Circuit c;
    c.num_qubits = 8;
    for (int q = 0; q < 8; ++q) c.append(GateKind::H, {q});
    for (int col = 0; col < 4; ++col) c.append(GateKind::CZ, {col, col + 4});
    c.append(GateKind::CZ, {1, 2});
    c.append(GateKind::CZ, {5, 6});
    return c;
}

std::vector<int> xeb_pattern_couplers(const CouplingGraph& chip, XebPatternSet set, int index) {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(chip.edges.size()); ++e) {
        auto [a, b] = chip.edges[e];
        int r = chip.row_of(a), c = chip.col_of(a);
        bool vertical = chip.row_of(b) != r;
        int cls;
        if (set == XebPatternSet::ABCD) {
            cls = vertical ? (r % 2 == 0 ? 0 : 1) : (c % 2 == 0 ? 2 : 3);
        } else {
            cls = vertical ? ((r + c) % 2 == 0 ? 0 : 1) : ((r + c) % 2 == 0 ? 2 : 3);
        }
        if (cls == index) out.push_back(e);
    }
    return out;
}

Circuit gen_xeb(const CouplingGraph& chip, int n, int p, XebPatternSet patterns,
                std::uint64_t seed) {
    if (n != chip.num_qubits())
        throw PatternMismatch("xeb spans the whole chip: expected n = " +
                              std::to_string(chip.num_qubits()) + ", got " + std::to_string(n));
    if (p < 1) throw PatternMismatch("xeb needs at least one cycle");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);

    Circuit c;
    c.num_qubits = n;
    for (int cycle = 0; cycle < p; ++cycle) {
        for (int q = 0; q < n; ++q) {
            switch (pick(rng)) {
                case 0: c.append(GateKind::X, {q}); break;
                case 1: c.append(GateKind::H, {q}); break;
                default: c.append(GateKind::RZ, {q}, angle(rng)); break;
            }
        }
        for (int e : xeb_pattern_couplers(chip, patterns, cycle % 4)) {
            auto [a, b] = chip.edges[e];
            c.append(GateKind::CZ, {a, b});
        }
    }
    return c;
}

Circuit gen_benchmark(const std::string& name, const CouplingGraph& chip, int n, int p,
                      std::uint64_t seed) {
    if (name == "ghz") return gen_ghz(n);
    if (name == "qft") return gen_qft(n);
    if (name == "simon") return gen_simon(n, seed);
    if (name == "qaoa") return gen_qaoa(n, seed);
    if (name == "vqe_fragment") return gen_vqe_fragment();
    if (name == "xeb") return gen_xeb(chip, n, p, XebPatternSet::ABCD, seed);
    throw UnknownBenchmark("unknown benchmark '" + name + "'");
}

} // namespace camel
