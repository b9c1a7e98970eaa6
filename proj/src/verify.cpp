#include "zx/verify.hpp"

#include "zx/circuit_front.hpp"
#include "zx/extract.hpp"
#include "zx/graphlike.hpp"
#include "zx/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zx {

namespace {

// Qubit list with symmetric roles sorted, so CZ(a,b) pairs with CZ(b,a).
std::vector<int> canonical_qubits(const Gate& g) {
    std::vector<int> qs = g.qubits;
    switch (g.type) {
    case GateType::CZ:
    case GateType::SWAP:
    case GateType::CCZ:
    case GateType::PhaseGadget:
        std::sort(qs.begin(), qs.end());
        break;
    case GateType::CCX:
        std::sort(qs.begin(), qs.begin() + 2);
        break;
    default:
        break;
    }
    return qs;
}

bool inverse_pair(const Gate& a, const Gate& b) {
    if (canonical_qubits(a) != canonical_qubits(b))
        return false;
    auto self_inverse = [](GateType t) {
        return t == GateType::H || t == GateType::X || t == GateType::Y ||
               t == GateType::Z || t == GateType::CX || t == GateType::CZ ||
               t == GateType::SWAP || t == GateType::CCX ||
               t == GateType::CCZ;
    };
    if (a.type == b.type && self_inverse(a.type))
        return true;
    if ((a.type == GateType::S && b.type == GateType::Sdg) ||
        (a.type == GateType::Sdg && b.type == GateType::S) ||
        (a.type == GateType::T && b.type == GateType::Tdg) ||
        (a.type == GateType::Tdg && b.type == GateType::T))
        return true;
    if (a.type == b.type &&
        (a.type == GateType::RZ || a.type == GateType::RX ||
         a.type == GateType::PhaseGadget))
        return (a.phase + b.phase).is_zero();
    return false;
}

bool touches(const Gate& g, const std::vector<int>& qs) {
    for (int a : g.qubits)
        for (int b : qs)
            if (a == b)
                return true;
    return false;
}

} // namespace

Circuit cancel_inverse_pairs(const Circuit& in) {
    std::vector<Gate> gates   = in.gates;
    bool              changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < gates.size(); ++j) {
                if (inverse_pair(gates[i], gates[j])) {
                    gates.erase(gates.begin() + static_cast<long>(j));
                    gates.erase(gates.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
                if (touches(gates[j], gates[i].qubits))
                    break; // blocked; try the next left gate
            }
        }
    }
    Circuit out;
    out.qubits = in.qubits;
    out.gates  = std::move(gates);
    return out;
}

VerifyReport verify_circuits(const Circuit& a, const Circuit& b, double tol) {
    if (a.qubits != b.qubits)
        throw std::invalid_argument("verify_circuits: qubit count mismatch");
    VerifyReport rep;
    try {
        Diagram d = Diagram::compose(circuit_to_diagram(a),
                                     circuit_to_diagram(b.adjoint()));
        GraphLikeView g = full_reduce(d);
        Circuit       e = extract_circuit(g);
        if (cancel_inverse_pairs(e).gates.empty()) {
            rep.status = VerifyStatus::Proved;
            rep.detail = "composite with adjoint reduces to identity wires";
            return rep;
        }
    } catch (const std::invalid_argument&) {
        // not extractable (non-Clifford residue); fall through
    }
    if (a.qubits <= 10) {
        auto lam = proportional(circuit_matrix(a), circuit_matrix(b), tol);
        if (lam.has_value() &&
            std::abs(std::abs(*lam) - 1.0) < std::max(tol, 1e-9)) {
            rep.status = VerifyStatus::EqualNumeric;
            rep.detail = "unitaries proportional by dense comparison";
        } else {
            rep.status = VerifyStatus::Different;
            rep.detail = "unitaries differ";
        }
        return rep;
    }
    rep.status = VerifyStatus::Inconclusive;
    rep.detail = "not symbolically reducible and too wide for the dense check";
    return rep;
}

AmpResult amplitude(const Circuit& c, const std::vector<bool>& in,
                    const std::vector<bool>& out) {
    if (static_cast<int>(in.size()) != c.qubits ||
        static_cast<int>(out.size()) != c.qubits)
        throw std::invalid_argument("amplitude: bitstring length mismatch");
    // <out| C |in> = <0| X_out C X_in |0>
    Circuit framed;
    framed.qubits = c.qubits;
    for (int q = 0; q < c.qubits; ++q)
        if (in[static_cast<std::size_t>(q)])
            framed.add(GateType::X, {q});
    framed.gates.insert(framed.gates.end(), c.gates.begin(), c.gates.end());
    for (int q = 0; q < c.qubits; ++q)
        if (out[static_cast<std::size_t>(q)])
            framed.add(GateType::X, {q});
    if (framed.is_clifford())
        return {clifford_amplitude(framed), "clifford"};
    Tensor      m   = circuit_matrix(c); // throws WidthError beyond the cap
    std::size_t row = 0, col = 0;
    for (int q = 0; q < c.qubits; ++q) {
        row = (row << 1) | (out[static_cast<std::size_t>(q)] ? 1u : 0u);
        col = (col << 1) | (in[static_cast<std::size_t>(q)] ? 1u : 0u);
    }
    return {m.at(row, col), "dense"};
}

} // namespace zx
