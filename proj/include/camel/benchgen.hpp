#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camel/chip.hpp"
#include "camel/circuit.hpp"

namespace camel {

/// GHZ state preparation via an H/CZ ladder.
Circuit gen_ghz(int n);

/// Quantum Fourier transform over {x, h, rz, cz, swap}, controlled phases
/// decomposed against CZ, final qubit-reversal swaps included.
Circuit gen_qft(int n);

/// Simon instance with a seeded secret string on n = 2k qubits.
Circuit gen_simon(int n, std::uint64_t seed);

/// One QAOA layer for MAX-CUT on a seeded Erdos-Renyi graph (p = 0.5).
Circuit gen_qaoa(int n, std::uint64_t seed);

/// Hardware-style ansatz fragment on 8 qubits: a column-entangling CZ layer
/// followed by two row couplings, matching a 2 x 4 chip one-to-one.
Circuit gen_vqe_fragment();

enum class XebPatternSet { ABCD, EFGH };

/// Cross-entropy benchmarking circuit spanning the whole chip: p cycles of a
/// random single-qubit layer plus one coupler activation pattern, the
/// patterns cycling deterministically.
Circuit gen_xeb(const CouplingGraph& chip, int n, int p, XebPatternSet patterns,
                std::uint64_t seed);

/// Couplers of one activation pattern (index 0..3 within the set).
std::vector<int> xeb_pattern_couplers(const CouplingGraph& chip, XebPatternSet set, int index);

/// Named suite entry point used by the CLI; name is one of
/// {simon, qft, qaoa, vqe_fragment, ghz, xeb}.
Circuit gen_benchmark(const std::string& name, const CouplingGraph& chip, int n, int p,
                      std::uint64_t seed);

} // namespace camel
