#include "zx/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace zx {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void apply_single(std::vector<Complex>& state, int qubits, int q,
                  const Complex m[2][2]) {
    std::size_t bit = static_cast<std::size_t>(1) << (qubits - 1 - q);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (i & bit)
            continue;
        Complex a        = state[i];
        Complex b        = state[i | bit];
        state[i]         = m[0][0] * a + m[0][1] * b;
        state[i | bit]   = m[1][0] * a + m[1][1] * b;
    }
}
} // namespace

void apply_gate(std::vector<Complex>& state, const Gate& g, int qubits) {
    auto bit = [&](int q) {
        return static_cast<std::size_t>(1) << (qubits - 1 - q);
    };
    switch (g.type) {
    case GateType::H: {
        const Complex m[2][2] = {{kInvSqrt2, kInvSqrt2},
                                 {kInvSqrt2, -kInvSqrt2}};
        apply_single(state, qubits, g.qubits[0], m);
        return;
    }
    case GateType::X: {
        const Complex m[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
        apply_single(state, qubits, g.qubits[0], m);
        return;
    }
    case GateType::Y: {
        const Complex m[2][2] = {{Complex(0, 0), Complex(0, -1)},
                                 {Complex(0, 1), Complex(0, 0)}};
        apply_single(state, qubits, g.qubits[0], m);
        return;
    }
    case GateType::Z:
    case GateType::S:
    case GateType::Sdg:
    case GateType::T:
    case GateType::Tdg:
    case GateType::RZ: {
        Phase p = g.phase;
        if (g.type == GateType::Z)
            p = Phase::exact(1, 1);
        else if (g.type == GateType::S)
            p = Phase::exact(1, 2);
        else if (g.type == GateType::Sdg)
            p = Phase::exact(3, 2);
        else if (g.type == GateType::T)
            p = Phase::exact(1, 4);
        else if (g.type == GateType::Tdg)
            p = Phase::exact(7, 4);
        Complex e = std::polar(1.0, p.radians());
        std::size_t b = bit(g.qubits[0]);
        for (std::size_t i = 0; i < state.size(); ++i)
            if (i & b)
                state[i] *= e;
        return;
    }
    case GateType::RX: {
        Complex e = std::polar(1.0, g.phase.radians());
        Complex m[2][2] = {{0.5 * (1.0 + e), 0.5 * (1.0 - e)},
                           {0.5 * (1.0 - e), 0.5 * (1.0 + e)}};
        apply_single(state, qubits, g.qubits[0], m);
        return;
    }
    case GateType::CX: {
        std::size_t c = bit(g.qubits[0]), t = bit(g.qubits[1]);
        for (std::size_t i = 0; i < state.size(); ++i)
            if ((i & c) && !(i & t))
                std::swap(state[i], state[i | t]);
        return;
    }
    case GateType::CZ: {
        std::size_t a = bit(g.qubits[0]), b = bit(g.qubits[1]);
        for (std::size_t i = 0; i < state.size(); ++i)
            if ((i & a) && (i & b))
                state[i] = -state[i];
        return;
    }
    case GateType::SWAP: {
        std::size_t a = bit(g.qubits[0]), b = bit(g.qubits[1]);
        for (std::size_t i = 0; i < state.size(); ++i)
            if ((i & a) && !(i & b))
                std::swap(state[i], state[(i & ~a) | b]);
        return;
    }
    case GateType::CCX: {
        std::size_t c1 = bit(g.qubits[0]), c2 = bit(g.qubits[1]),
                    t = bit(g.qubits[2]);
        for (std::size_t i = 0; i < state.size(); ++i)
            if ((i & c1) && (i & c2) && !(i & t))
                std::swap(state[i], state[i | t]);
        return;
    }
    case GateType::CCZ: {
        std::size_t a = bit(g.qubits[0]), b = bit(g.qubits[1]),
                    c = bit(g.qubits[2]);
        for (std::size_t i = 0; i < state.size(); ++i)
            if ((i & a) && (i & b) && (i & c))
                state[i] = -state[i];
        return;
    }
    case GateType::PhaseGadget: {
        Complex e = std::polar(1.0, g.phase.radians());
        for (std::size_t i = 0; i < state.size(); ++i) {
            int parity = 0;
            for (int q : g.qubits)
                parity ^= static_cast<int>((i >> (qubits - 1 - q)) & 1);
            if (parity)
                state[i] *= e;
        }
        return;
    }
    }
    throw std::logic_error("unhandled gate");
}

std::vector<Complex> apply_circuit(const Circuit& c,
                                   std::vector<Complex> state) {
    for (const Gate& g : c.gates)
        apply_gate(state, g, c.qubits);
    return state;
}

Tensor circuit_matrix(const Circuit& c) {
    if (c.qubits > 10)
        throw WidthError("circuit_matrix qubit cap exceeded");
    std::size_t dim = static_cast<std::size_t>(1) << c.qubits;
    std::vector<std::vector<Complex>> cols(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        cols[j].assign(dim, Complex(0.0, 0.0));
        cols[j][j] = Complex(1.0, 0.0);
        cols[j]    = apply_circuit(c, std::move(cols[j]));
    }
    Tensor t(c.qubits, c.qubits);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t j = 0; j < dim; ++j)
            t.at(r, j) = cols[j][r];
    return t;
}

Circuit Circuit::adjoint() const {
    Circuit out;
    out.qubits = qubits;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        switch (g.type) {
        case GateType::S:
            g.type = GateType::Sdg;
            break;
        case GateType::Sdg:
            g.type = GateType::S;
            break;
        case GateType::T:
            g.type = GateType::Tdg;
            break;
        case GateType::Tdg:
            g.type = GateType::T;
            break;
        case GateType::RZ:
        case GateType::RX:
        case GateType::PhaseGadget:
            g.phase = -g.phase;
            break;
        default:
            break; // self-inverse
        }
        out.gates.push_back(g);
    }
    return out;
}

bool Circuit::is_clifford() const {
    for (const Gate& g : gates) {
        switch (g.type) {
        case GateType::T:
        case GateType::Tdg:
        case GateType::CCX:
        case GateType::CCZ:
            return false;
        case GateType::RZ:
        case GateType::RX:
        case GateType::PhaseGadget:
            if (!g.phase.is_clifford())
                return false;
            break;
        default:
            break;
        }
    }
    return true;
}

namespace {
bool is_t_like(const Phase& p) {
    return p.is_exact() && p.den() == 4; // odd multiple of pi/4 once reduced
}
} // namespace

CircuitStats stats(const Circuit& c) {
    CircuitStats s;
    std::vector<int> layer(static_cast<std::size_t>(c.qubits), 0);
    for (const Gate& g : c.gates) {
        ++s.total;
        if (g.qubits.size() == 2)
            ++s.two_qubit_count;
        switch (g.type) {
        case GateType::T:
        case GateType::Tdg:
            ++s.t_count;
            break;
        case GateType::RZ:
        case GateType::RX:
        case GateType::PhaseGadget:
            if (is_t_like(g.phase))
                ++s.t_count;
            break;
        case GateType::CCX:
        case GateType::CCZ:
            s.t_count += 7;
            break;
        default:
            break;
        }
        int l = 0;
        for (int q : g.qubits)
            l = std::max(l, layer[static_cast<std::size_t>(q)]);
        ++l;
        for (int q : g.qubits)
            layer[static_cast<std::size_t>(q)] = l;
        s.depth = std::max(s.depth, l);
    }
    return s;
}

std::string gate_name(GateType t) {
    switch (t) {
    case GateType::H:
        return "h";
    case GateType::X:
        return "x";
    case GateType::Y:
        return "y";
    case GateType::Z:
        return "z";
    case GateType::S:
        return "s";
    case GateType::Sdg:
        return "sdg";
    case GateType::T:
        return "t";
    case GateType::Tdg:
        return "tdg";
    case GateType::RZ:
        return "rz";
    case GateType::RX:
        return "rx";
    case GateType::CX:
        return "cx";
    case GateType::CZ:
        return "cz";
    case GateType::SWAP:
        return "swap";
    case GateType::CCX:
        return "ccx";
    case GateType::CCZ:
        return "ccz";
    case GateType::PhaseGadget:
        return "gadget";
    }
    return "?";
}

} // namespace zx
