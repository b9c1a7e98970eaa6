#pragma once

#include "zx/circuit.hpp"
#include "zx/diagram.hpp"
#include "zx/tensor.hpp"

#include <random>

namespace zxtest {

using namespace zx;

inline bool tensors_close(const Tensor& a, const Tensor& b,
                          double tol = 1e-9) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    return Tensor::max_diff(a, b) <= tol;
}

inline Phase random_phase(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(0, 7);
    return Phase::exact(num(rng), 4);
}

// Random small open ZX diagram with the requested boundary counts.
inline Diagram random_diagram(std::mt19937& rng, int in_count, int out_count,
                              int spiders = 4, int extra_edges = 4) {
    Diagram          d;
    std::vector<int> sp;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < spiders; ++i)
        sp.push_back(d.add_vertex(coin(rng) ? VertexType::Z : VertexType::X,
                                  random_phase(rng)));
    std::uniform_int_distribution<int> pick(0, spiders - 1);
    for (int i = 0; i < in_count; ++i) {
        int b = d.add_vertex(VertexType::Boundary);
        d.inputs().push_back(b);
        d.add_edge(b, sp[static_cast<std::size_t>(pick(rng))],
                   coin(rng) ? EdgeKind::Hadamard : EdgeKind::Plain);
    }
    for (int i = 0; i < out_count; ++i) {
        int b = d.add_vertex(VertexType::Boundary);
        d.outputs().push_back(b);
        d.add_edge(b, sp[static_cast<std::size_t>(pick(rng))],
                   coin(rng) ? EdgeKind::Hadamard : EdgeKind::Plain);
    }
    for (int i = 0; i < extra_edges; ++i)
        d.add_edge(sp[static_cast<std::size_t>(pick(rng))],
                   sp[static_cast<std::size_t>(pick(rng))],
                   coin(rng) ? EdgeKind::Hadamard : EdgeKind::Plain);
    return d;
}

// Random Clifford circuit over the standard generator set.
inline Circuit random_clifford_circuit(std::mt19937& rng, int qubits,
                                       int gate_count) {
    Circuit c;
    c.qubits = qubits;
    std::uniform_int_distribution<int> kind(0, 7);
    std::uniform_int_distribution<int> pick(0, qubits - 1);
    for (int i = 0; i < gate_count; ++i) {
        int q = pick(rng);
        switch (kind(rng)) {
        case 0:
            c.add(GateType::H, {q});
            break;
        case 1:
            c.add(GateType::S, {q});
            break;
        case 2:
            c.add(GateType::Sdg, {q});
            break;
        case 3:
            c.add(GateType::Z, {q});
            break;
        case 4:
            c.add(GateType::X, {q});
            break;
        default: {
            if (qubits < 2) {
                c.add(GateType::H, {q});
                break;
            }
            int r = pick(rng);
            while (r == q)
                r = pick(rng);
            int k = kind(rng);
            if (k <= 5)
                c.add(GateType::CX, {q, r});
            else if (k == 6)
                c.add(GateType::CZ, {q, r});
            else
                c.add(GateType::SWAP, {q, r});
            break;
        }
        }
    }
    return c;
}

} // namespace zxtest
