#pragma once

#include <utility>
#include <vector>

#include "camel/errors.hpp"

namespace camel {

/// Whether data-parallel kernels run their OpenMP path or the serial
/// reference. Both paths produce bitwise-identical results.
enum class ExecPolicy { Serial, Parallel };

struct CouplingGraph {
    int rows = 0, cols = 0;
    // couplers in enumeration order; the index is the tie-break key everywhere
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;  // neighbor qubits per qubit

    int num_qubits() const { return rows * cols; }
    int qubit_at(int r, int c) const { return r * cols + c; }
    int row_of(int q) const { return q / cols; }
    int col_of(int q) const { return q % cols; }
    bool coupled(int a, int b) const;
};

/// M x N grid with 2MN - M - N couplers.
CouplingGraph build_grid(int M, int N);

struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;  // row-major n x n hop counts

    int operator()(int a, int b) const { return d[a * n + b]; }
};

/// All-pairs BFS hop counts. Parallel over source qubits.
DistanceMatrix distance_matrix(const CouplingGraph& g, ExecPolicy policy = ExecPolicy::Parallel);

struct Window {
    int row = 0, col = 0;   // origin
    int m = 0, n = 0;       // size
    std::vector<int> qubits;

    int diameter() const { return m + n - 2; }
    bool contains(int q, const CouplingGraph& g) const;
};

/// All axis-aligned m x n placements in row-major order;
/// count = (M - m + 1)(N - n + 1).
std::vector<Window> enumerate_windows(const CouplingGraph& g, int m, int n);

/// True iff every qubit pair across the two windows is more than
/// `threshold` hops apart.
bool windows_disjoint_far(const Window& a, const Window& b, const DistanceMatrix& D,
                          int threshold = 2);

} // namespace camel
