#pragma once

#include "zx/phase.hpp"
#include "zx/tensor.hpp"

#include <string>
#include <vector>

namespace zx {

enum class GateType {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    RZ,
    RX,
    CX,
    CZ,
    SWAP,
    CCX,
    CCZ,
    PhaseGadget
};

struct Gate {
    GateType         type;
    std::vector<int> qubits; // CX: {control, target}; CCX: {c1, c2, target}
    Phase            phase = Phase::zero();

    static Gate make(GateType t, std::vector<int> qs,
                     Phase p = Phase::zero()) {
        Gate g;
        g.type   = t;
        g.qubits = std::move(qs);
        g.phase  = p;
        return g;
    }
};

struct Circuit {
    int               qubits = 0;
    std::vector<Gate> gates;

    void add(GateType t, std::vector<int> qs, Phase p = Phase::zero()) {
        gates.push_back(Gate::make(t, std::move(qs), p));
    }
    Circuit adjoint() const;
    bool    is_clifford() const;
};

// Conventions: RZ(a) = diag(1, e^{ia}), RX = H RZ H,
// PhaseGadget(qs, a) = diag over basis states of e^{ia * parity}.
// Qubit 0 is the most significant index bit.
void apply_gate(std::vector<Complex>& state, const Gate& g, int qubits);
std::vector<Complex> apply_circuit(const Circuit& c,
                                   std::vector<Complex> state);

// Exact unitary of the circuit; qubit cap 10.
Tensor circuit_matrix(const Circuit& c);

struct CircuitStats {
    int t_count         = 0;
    int two_qubit_count = 0;
    int total           = 0;
    int depth           = 0;
};
CircuitStats stats(const Circuit& c);

std::string gate_name(GateType t);

} // namespace zx
