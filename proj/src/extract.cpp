#include "zx/extract.hpp"

#include "zx/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace zx {

std::pair<std::vector<RowOp>, BitMatrix> gauss_elim(const BitMatrix& input) {
    BitMatrix          m = input;
    std::vector<RowOp> ops;
    int                rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        if (!m.at(rank, c)) {
            int pivot = -1;
            for (int r = rank + 1; r < m.rows(); ++r)
                if (m.at(r, c)) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                continue;
            m.row_xor(rank, pivot);
            ops.push_back({rank, pivot});
        }
        for (int r = 0; r < m.rows(); ++r) {
            if (r != rank && m.at(r, c)) {
                m.row_xor(r, rank);
                ops.push_back({r, rank});
            }
        }
        ++rank;
    }
    return {ops, m};
}

Circuit cnot_circuit_of(const std::vector<RowOp>& ops, int n) {
    Circuit c;
    c.qubits = n;
    for (const RowOp& op : ops) {
        if (op.target < 0 || op.target >= n || op.source < 0 ||
            op.source >= n || op.target == op.source)
            throw std::invalid_argument("cnot_circuit_of: bad row index");
        // row op (t <- t xor s) transposes to the map x_s <- x_s xor x_t
        c.add(GateType::CX, {op.target, op.source});
    }
    return c;
}

namespace {

void emit_phase(Circuit& c, int q, const Phase& p) {
    if (p.is_zero())
        return;
    if (p == Phase::exact(1, 2))
        c.add(GateType::S, {q});
    else if (p == Phase::exact(3, 2))
        c.add(GateType::Sdg, {q});
    else if (p.is_pi())
        c.add(GateType::Z, {q});
    else
        c.add(GateType::RZ, {q}, p);
}

// Cancel adjacent H pairs on the same qubit (commuting past gates on other
// qubits), and drop nothing else.
Circuit cancel_h_pairs(const Circuit& in) {
    std::vector<Gate> gates = in.gates;
    bool              changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
            if (gates[i].type != GateType::H)
                continue;
            int q = gates[i].qubits[0];
            for (std::size_t j = i + 1; j < gates.size(); ++j) {
                bool touches = false;
                for (int g : gates[j].qubits)
                    touches = touches || g == q;
                if (!touches)
                    continue;
                if (gates[j].type == GateType::H) {
                    gates.erase(gates.begin() + static_cast<long>(j));
                    gates.erase(gates.begin() + static_cast<long>(i));
                    changed = true;
                }
                break;
            }
        }
    }
    Circuit out;
    out.qubits = in.qubits;
    out.gates  = std::move(gates);
    return out;
}

} // namespace

Circuit extract_circuit(const GraphLikeView& input) {
    GraphLikeView g = input;
    for (const auto& [v, p] : g.phases()) {
        if (g.is_internal(v))
            throw std::invalid_argument(
                "extract_circuit: internal spiders remain");
        if (!p.is_clifford())
            throw std::invalid_argument(
                "extract_circuit: non-Clifford phase");
    }
    if (g.inputs().size() != g.outputs().size())
        throw std::invalid_argument("extract_circuit: not a map");
    normalize_boundaries(g);

    int              n = static_cast<int>(g.inputs().size());
    std::vector<int> is, os;
    std::map<int, int> in_qubit, out_qubit;
    for (int q = 0; q < n; ++q) {
        int iv = g.attachments().at(g.inputs()[static_cast<std::size_t>(q)])
                     .spider;
        int ov = g.attachments().at(g.outputs()[static_cast<std::size_t>(q)])
                     .spider;
        is.push_back(iv);
        os.push_back(ov);
        in_qubit[iv]  = q;
        out_qubit[ov] = q;
    }

    Circuit c;
    c.qubits = n;
    // input-side wire Hadamards, phases, CZ layer
    for (int q = 0; q < n; ++q)
        if (g.attachments().at(g.inputs()[static_cast<std::size_t>(q)]).kind ==
            EdgeKind::Hadamard)
            c.add(GateType::H, {q});
    for (int q = 0; q < n; ++q)
        emit_phase(c, q, g.phase(is[static_cast<std::size_t>(q)]));
    for (int q = 0; q < n; ++q)
        for (int w : g.neighbors(is[static_cast<std::size_t>(q)]))
            if (in_qubit.count(w) && in_qubit.at(w) > q)
                c.add(GateType::CZ, {q, in_qubit.at(w)});

    // biadjacency between input and output spiders
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.connected(is[static_cast<std::size_t>(i)],
                            os[static_cast<std::size_t>(j)]))
                m.set(i, j, true);
    auto [ops, reduced] = gauss_elim(m);
    if (!reduced.is_identity())
        throw std::invalid_argument("extract_circuit: not extractable "
                                    "(singular biadjacency)");
    Circuit cnots = cnot_circuit_of(ops, n);
    for (const Gate& gate : cnots.gates)
        c.gates.push_back(gate);
    for (int q = 0; q < n; ++q)
        c.add(GateType::H, {q});

    // output-side CZ layer, phases, wire Hadamards
    for (int q = 0; q < n; ++q)
        for (int w : g.neighbors(os[static_cast<std::size_t>(q)]))
            if (out_qubit.count(w) && out_qubit.at(w) > q)
                c.add(GateType::CZ, {q, out_qubit.at(w)});
    for (int q = 0; q < n; ++q)
        emit_phase(c, q, g.phase(os[static_cast<std::size_t>(q)]));
    for (int q = 0; q < n; ++q)
        if (g.attachments().at(g.outputs()[static_cast<std::size_t>(q)])
                .kind == EdgeKind::Hadamard)
            c.add(GateType::H, {q});
    return cancel_h_pairs(c);
}

ExtractReport verify_extraction(const Circuit& original,
                                const Circuit& extracted) {
    if (original.qubits != extracted.qubits)
        throw std::invalid_argument("verify_extraction: qubit mismatch");
    Tensor a = circuit_matrix(original);
    Tensor b = circuit_matrix(extracted);
    ExtractReport rep;
    auto          lam = proportional(a, b, 1e-9);
    if (!lam.has_value())
        return rep;
    rep.lambda = *lam;
    Tensor scaled = b.scaled(rep.lambda);
    rep.max_dev   = Tensor::max_diff(a, scaled);
    rep.ok        = std::abs(std::abs(rep.lambda) - 1.0) < 1e-9 &&
             rep.max_dev < 1e-9;
    return rep;
}

} // namespace zx
