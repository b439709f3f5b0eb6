#pragma once

#include <complex>
#include <vector>

#include "camel/circuit.hpp"
#include "camel/graphs.hpp"
#include "camel/mapper.hpp"

namespace camel {
namespace oracle {

/// Maximum-cardinality independent set by branch and bound (<= 30 nodes).
std::vector<int> exact_mis(const SimpleGraph& g);

/// Minimum number of independent sets covering all nodes, i.e. the chromatic
/// number (<= 12 nodes, exhaustive).
int min_is_cover(const SimpleGraph& g);

/// Number of matchings of the graph including the empty matching
/// (<= 20 edges, edge-inclusion recursion).
long long count_matchings(const SimpleGraph& g);

/// Relabels a logical circuit onto physical wires under an initial mapping.
Circuit embed_circuit(const Circuit& logical, const Mapping& initial, int n_physical);

/// Brute-force unitary of a circuit (<= 8 qubits), little-endian basis.
std::vector<std::complex<double>> circuit_unitary(const Circuit& c);

/// True iff U(compiled) equals P(perm) * U(original) entrywise within tol,
/// after factoring out a global phase. `perm[w]` is the wire the content of
/// w ends on (the net permutation of the inserted swaps); both circuits must
/// be on the same wire count.
bool unitary_equiv(const Circuit& original, const Circuit& compiled,
                   const std::vector<int>& perm, double tol = 1e-9);

} // namespace oracle
} // namespace camel
