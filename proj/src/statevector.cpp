#include "camel/statevector.hpp"

#include <cassert>
#include <cmath>
#include <map>

namespace camel {

StateVector::StateVector(int n, ExecPolicy policy_) : num_qubits(n), policy(policy_) {
    amps.assign(1ull << n, 0.0);
    amps[0] = 1.0;
}

void StateVector::apply_1q(int q, const Amplitude m[2][2]) {
    const long long n = static_cast<long long>(amps.size());
    const long long stride = 1LL << q;
    auto body = [&](long long i) {
        if (i & stride) return;
        Amplitude a0 = amps[i], a1 = amps[i | stride];
        amps[i] = m[0][0] * a0 + m[0][1] * a1;
        amps[i | stride] = m[1][0] * a0 + m[1][1] * a1;
    };
#ifdef CAMEL_HAS_OPENMP
    if (policy == ExecPolicy::Parallel && num_qubits >= 11) {
#pragma omp parallel for
        for (long long i = 0; i < n; ++i) body(i);
    } else {
        for (long long i = 0; i < n; ++i) body(i);
    }
#else
    for (long long i = 0; i < n; ++i) body(i);
#endif
}

void StateVector::apply_gate(const Gate& g) {
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::X: {
            Amplitude m[2][2] = {{0, 1}, {1, 0}};
            apply_1q(g.operands[0], m);
            break;
        }
        case GateKind::H: {
            Amplitude m[2][2] = {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
            apply_1q(g.operands[0], m);
            break;
        }
        case GateKind::RZ: {
            double th = g.param.value_or(0.0);
            Amplitude m[2][2] = {{std::exp(Amplitude(0, -th / 2)), 0},
                                 {0, std::exp(Amplitude(0, th / 2))}};
            apply_1q(g.operands[0], m);
            break;
        }
        case GateKind::CZ: {
            const long long a = 1LL << g.operands[0], b = 1LL << g.operands[1];
            const long long n = static_cast<long long>(amps.size());
            auto body = [&](long long i) {
                if ((i & a) && (i & b)) amps[i] = -amps[i];
            };
#ifdef CAMEL_HAS_OPENMP
            if (policy == ExecPolicy::Parallel && num_qubits >= 11) {
#pragma omp parallel for
                for (long long i = 0; i < n; ++i) body(i);
            } else {
                for (long long i = 0; i < n; ++i) body(i);
            }
#else
            for (long long i = 0; i < n; ++i) body(i);
#endif
            break;
        }
        case GateKind::SWAP: {
            const long long a = 1LL << g.operands[0], b = 1LL << g.operands[1];
            const long long n = static_cast<long long>(amps.size());
            auto body = [&](long long i) {
                if ((i & a) && !(i & b)) std::swap(amps[i], amps[(i ^ a) | b]);
            };
#ifdef CAMEL_HAS_OPENMP
            if (policy == ExecPolicy::Parallel && num_qubits >= 11) {
#pragma omp parallel for
                for (long long i = 0; i < n; ++i) body(i);
            } else {
                for (long long i = 0; i < n; ++i) body(i);
            }
#else
            for (long long i = 0; i < n; ++i) body(i);
#endif
            break;
        }
        case GateKind::BARRIER:
        case GateKind::MEASURE: break;
    }
}

void StateVector::apply_3q(int q0, int q1, int q2, const Unitary8& u) {
    const long long m0 = 1LL << q0, m1 = 1LL << q1, m2 = 1LL << q2;
    const long long n = static_cast<long long>(amps.size());
    auto body = [&](long long i) {
        if (i & (m0 | m1 | m2)) return;
        long long idx[8];
        Amplitude in[8];
        for (int l = 0; l < 8; ++l) {
            long long j = i;
            if (l & 1) j |= m0;
            if (l & 2) j |= m1;
            if (l & 4) j |= m2;
            idx[l] = j;
            in[l] = amps[j];
        }
        for (int r = 0; r < 8; ++r) {
            Amplitude acc = 0;
            for (int l = 0; l < 8; ++l) acc += u[r][l] * in[l];
            amps[idx[r]] = acc;
        }
    };
#ifdef CAMEL_HAS_OPENMP
    if (policy == ExecPolicy::Parallel && num_qubits >= 11) {
#pragma omp parallel for
        for (long long i = 0; i < n; ++i) body(i);
    } else {
        for (long long i = 0; i < n; ++i) body(i);
    }
#else
    for (long long i = 0; i < n; ++i) body(i);
#endif
}

double StateVector::norm() const {
    double s = 0;
    for (const Amplitude& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

Amplitude StateVector::inner(const StateVector& other) const {
    Amplitude s = 0;
    for (size_t i = 0; i < amps.size(); ++i) s += std::conj(amps[i]) * other.amps[i];
    return s;
}

double simulate_statevector(const Circuit& c, const std::vector<CrosstalkEvent>& events,
                            const CouplingGraph& g, ExecPolicy policy, double* norm_drift) {
    if (c.num_qubits > 12)
        throw TooManyQubits("state-vector simulation is limited to 12 qubits, got " +
                            std::to_string(c.num_qubits));
    std::map<int, std::vector<const CrosstalkEvent*>> by_victim;
    for (const CrosstalkEvent& e : events) by_victim[e.victim_gate].push_back(&e);
    for (auto& [victim, list] : by_victim)
        std::sort(list.begin(), list.end(), [](const CrosstalkEvent* a, const CrosstalkEvent* b) {
            return a->aggressor_gate < b->aggressor_gate;
        });

    StateVector ideal(c.num_qubits, policy), noisy(c.num_qubits, policy);
    double drift = 0;
    auto track = [&](const StateVector& sv) {
        drift = std::max(drift, std::abs(sv.norm() - 1.0));
    };
    for (const Gate& gate : c.gates) {
        ideal.apply_gate(gate);
        noisy.apply_gate(gate);
        auto it = by_victim.find(gate.id);
        if (it != by_victim.end()) {
            for (const CrosstalkEvent* e : it->second) {
                // Q_2 is the victim operand next to the spectator, Q_1 the other
                int qa = gate.operands[0], qb = gate.operands[1];
                int q2 = g.coupled(e->spectator_qubit, qa) ? qa : qb;
                int q1 = q2 == qa ? qb : qa;
                noisy.apply_3q(q1, q2, e->spectator_qubit, crosstalk_unitary(e->theta));
            }
        }
        track(ideal);
        track(noisy);
    }
    if (norm_drift) *norm_drift = drift;
    return std::norm(ideal.inner(noisy));
}

} // namespace camel
