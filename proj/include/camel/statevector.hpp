#pragma once

#include <complex>
#include <vector>

#include "camel/chip.hpp"
#include "camel/circuit.hpp"
#include "camel/noise.hpp"

namespace camel {

using Amplitude = std::complex<double>;

/// Little-endian state vector: bit q of the basis index is qubit q.
struct StateVector {
    int num_qubits = 0;
    std::vector<Amplitude> amps;

    explicit StateVector(int n, ExecPolicy policy = ExecPolicy::Parallel);

    void apply_1q(int q, const Amplitude m[2][2]);
    void apply_gate(const Gate& g);  // X/H/RZ/CZ/SWAP; barriers and measures are no-ops
    /// Applies an 8x8 unitary on ordering |q2 q1 q0> (q2 the most significant).
    void apply_3q(int q0, int q1, int q2, const Unitary8& u);

    double norm() const;
    Amplitude inner(const StateVector& other) const;

    ExecPolicy policy = ExecPolicy::Parallel;
};

/// |<ideal|noisy>|^2 where the noisy run applies each event's population-swap
/// unitary right after its victim CZ. Events on one victim compose in
/// aggressor-id order. Limited to 12 qubits.
double simulate_statevector(const Circuit& c, const std::vector<CrosstalkEvent>& events,
                            const CouplingGraph& g, ExecPolicy policy = ExecPolicy::Parallel,
                            double* norm_drift = nullptr);

} // namespace camel
