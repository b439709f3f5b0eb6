#pragma once

#include <utility>
#include <vector>

namespace camel {

/// Dense little graph used for crosstalk graphs and the brute-force oracles.
struct SimpleGraph {
    int n = 0;
    std::vector<char> a;  // n x n adjacency

    explicit SimpleGraph(int n_ = 0) : n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

    void add_edge(int u, int v) {
        a[static_cast<size_t>(u) * n + v] = 1;
        a[static_cast<size_t>(v) * n + u] = 1;
    }
    bool has_edge(int u, int v) const { return a[static_cast<size_t>(u) * n + v] != 0; }

    int degree(int v) const {
        int d = 0;
        for (int u = 0; u < n; ++u) d += has_edge(v, u);
        return d;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) es.emplace_back(u, v);
        return es;
    }

    std::vector<int> components() const {  // component id per node
        std::vector<int> comp(n, -1);
        int c = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v = 0; v < n; ++v)
                    if (has_edge(u, v) && comp[v] < 0) {
                        comp[v] = c;
                        stack.push_back(v);
                    }
            }
            ++c;
        }
        return comp;
    }
};

} // namespace camel
