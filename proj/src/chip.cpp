#include "camel/chip.hpp"

#include <algorithm>
#include <queue>

namespace camel {

bool CouplingGraph::coupled(int a, int b) const {
    const auto& na = adj[a];
    return std::find(na.begin(), na.end(), b) != na.end();
}

CouplingGraph build_grid(int M, int N) {
    if (M < 1 || N < 1)
        throw InvalidDimensions("grid dimensions must be positive, got " + std::to_string(M) +
                                "x" + std::to_string(N));
    CouplingGraph g;
    g.rows = M;
    g.cols = N;
    g.adj.assign(M * N, {});
    for (int r = 0; r < M; ++r) {
        for (int c = 0; c < N; ++c) {
            int q = g.qubit_at(r, c);
            if (c + 1 < N) g.edges.emplace_back(q, g.qubit_at(r, c + 1));
            if (r + 1 < M) g.edges.emplace_back(q, g.qubit_at(r + 1, c));
        }
    }
    for (auto [a, b] : g.edges) {
        g.adj[a].push_back(b);
        g.adj[b].push_back(a);
    }
    return g;
}

namespace {

void bfs_from(const CouplingGraph& g, int src, int* out) {
    int n = g.num_qubits();
    std::fill(out, out + n, -1);
    std::queue<int> q;
    out[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (out[v] < 0) {
                out[v] = out[u] + 1;
                q.push(v);
            }
    }
}

} // namespace

DistanceMatrix distance_matrix(const CouplingGraph& g, ExecPolicy policy) {
    DistanceMatrix D;
    D.n = g.num_qubits();
    D.d.assign(static_cast<size_t>(D.n) * D.n, -1);
#ifdef CAMEL_HAS_OPENMP
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int s = 0; s < D.n; ++s) bfs_from(g, s, D.d.data() + static_cast<size_t>(s) * D.n);
    } else {
        for (int s = 0; s < D.n; ++s) bfs_from(g, s, D.d.data() + static_cast<size_t>(s) * D.n);
    }
#else
    (void)policy;
    for (int s = 0; s < D.n; ++s) bfs_from(g, s, D.d.data() + static_cast<size_t>(s) * D.n);
#endif
    for (int v : D.d)
        if (v < 0) throw DisconnectedGraph("coupling graph is not connected");
    return D;
}

bool Window::contains(int q, const CouplingGraph& g) const {
    int r = g.row_of(q), c = g.col_of(q);
    return r >= row && r < row + m && c >= col && c < col + n;
}

std::vector<Window> enumerate_windows(const CouplingGraph& g, int m, int n) {
    if (m < 1 || n < 1 || m > g.rows || n > g.cols)
        throw WindowTooLarge("window " + std::to_string(m) + "x" + std::to_string(n) +
                             " does not fit a " + std::to_string(g.rows) + "x" +
                             std::to_string(g.cols) + " chip");
    std::vector<Window> ws;
    for (int r = 0; r + m <= g.rows; ++r) {
        for (int c = 0; c + n <= g.cols; ++c) {
            Window w;
            w.row = r;
            w.col = c;
            w.m = m;
            w.n = n;
            for (int dr = 0; dr < m; ++dr)
                for (int dc = 0; dc < n; ++dc) w.qubits.push_back(g.qubit_at(r + dr, c + dc));
            ws.push_back(std::move(w));
        }
    }
    return ws;
}

bool windows_disjoint_far(const Window& a, const Window& b, const DistanceMatrix& D,
                          int threshold) {
    for (int qa : a.qubits)
        for (int qb : b.qubits)
            if (D(qa, qb) <= threshold) return false;
    return true;
}

} // namespace camel
