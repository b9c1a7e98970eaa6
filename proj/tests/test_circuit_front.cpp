#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "zx/circuit_front.hpp"
#include "zx/tensor.hpp"

#include <random>

using namespace zx;
using namespace zxtest;

namespace {

// Random circuit over the full gate set, biased toward cheap gates.
Circuit random_full_circuit(std::mt19937& rng, int qubits, int gate_count) {
    Circuit c;
    c.qubits = qubits;
    std::uniform_int_distribution<int> kind(0, 12);
    std::uniform_int_distribution<int> pick(0, qubits - 1);
    auto distinct = [&](int n) {
        std::vector<int> qs;
        while (static_cast<int>(qs.size()) < n) {
            int q  = pick(rng);
            bool dup = false;
            for (int u : qs)
                dup = dup || u == q;
            if (!dup)
                qs.push_back(q);
        }
        return qs;
    };
    for (int i = 0; i < gate_count; ++i) {
        switch (kind(rng)) {
        case 0: c.add(GateType::H, distinct(1)); break;
        case 1: c.add(GateType::X, distinct(1)); break;
        case 2: c.add(GateType::Y, distinct(1)); break;
        case 3: c.add(GateType::Z, distinct(1)); break;
        case 4: c.add(GateType::S, distinct(1)); break;
        case 5: c.add(GateType::T, distinct(1)); break;
        case 6: c.add(GateType::Tdg, distinct(1)); break;
        case 7: c.add(GateType::RZ, distinct(1), random_phase(rng)); break;
        case 8: c.add(GateType::RX, distinct(1), random_phase(rng)); break;
        case 9: c.add(GateType::CX, distinct(2)); break;
        case 10: c.add(GateType::CZ, distinct(2)); break;
        case 11: c.add(GateType::SWAP, distinct(2)); break;
        default:
            if (qubits >= 3)
                c.add(kind(rng) % 2 ? GateType::CCX : GateType::CCZ,
                      distinct(3));
            else
                c.add(GateType::Sdg, distinct(1));
            break;
        }
    }
    return c;
}

bool same_gates(const Circuit& a, const Circuit& b) {
    if (a.qubits != b.qubits || a.gates.size() != b.gates.size())
        return false;
    for (std::size_t i = 0; i < a.gates.size(); ++i) {
        if (a.gates[i].type != b.gates[i].type ||
            a.gates[i].qubits != b.gates[i].qubits ||
            !(a.gates[i].phase == b.gates[i].phase))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("parse_qasm handles the supported subset") {
    SUBCASE("basic program") {
        Circuit c = parse_qasm("OPENQASM 2.0;\n"
                               "include \"qelib1.inc\";\n"
                               "qreg q[2];\n"
                               "h q[0];\n"
                               "cx q[0],q[1];\n");
        CHECK(c.qubits == 2);
        REQUIRE(c.gates.size() == 2);
        CHECK(c.gates[0].type == GateType::H);
        CHECK(c.gates[0].qubits == std::vector<int>{0});
        CHECK(c.gates[1].type == GateType::CX);
        CHECK(c.gates[1].qubits == std::vector<int>{0, 1});
    }
    SUBCASE("header is optional and comments are skipped") {
        Circuit c = parse_qasm("qreg r[1]; // register\n"
                               "t r[0]; // a T gate\n");
        REQUIRE(c.gates.size() == 1);
        CHECK(c.gates[0].type == GateType::T);
    }
    SUBCASE("pi-rational angles stay exact") {
        Circuit c = parse_qasm("qreg q[1]; rz(pi/4) q[0]; rx(-pi/2) q[0]; "
                               "rz(pi*3/4) q[0]; rz(3*pi/4) q[0]; rz(pi) "
                               "q[0];");
        REQUIRE(c.gates.size() == 5);
        CHECK(c.gates[0].phase == Phase::exact(1, 4));
        CHECK(c.gates[1].phase == Phase::exact(-1, 2));
        CHECK(c.gates[2].phase == Phase::exact(3, 4));
        CHECK(c.gates[3].phase == Phase::exact(3, 4));
        CHECK(c.gates[4].phase == Phase::pi());
        for (const Gate& g : c.gates)
            CHECK(g.phase.is_exact());
    }
    SUBCASE("decimal angles become real phases") {
        Circuit c = parse_qasm("qreg q[1]; rz(0.75) q[0];");
        CHECK_FALSE(c.gates[0].phase.is_exact());
        CHECK(c.gates[0].phase.radians() == doctest::Approx(0.75));
    }
    SUBCASE("three-qubit gates") {
        Circuit c = parse_qasm("qreg q[3]; ccx q[0],q[1],q[2]; "
                               "ccz q[2],q[1],q[0];");
        CHECK(c.gates[0].type == GateType::CCX);
        CHECK(c.gates[1].type == GateType::CCZ);
    }
}

TEST_CASE("parse_qasm reports errors with line numbers") {
    auto message_of = [](const std::string& text) {
        try {
            parse_qasm(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("qreg q[2];\nbadgate q[0];\n").rfind("line 2:", 0) == 0);
    CHECK(message_of("qreg q[2];\nh q[0];\nh q[5];\n").rfind("line 3:", 0) ==
          0);
    CHECK(message_of("OPENQASM 3.0;\nqreg q[1];\n").rfind("line 1:", 0) == 0);
    CHECK(message_of("qreg q[2];\ncx q[0],q[0];\n").rfind("line 2:", 0) == 0);
    CHECK(message_of("h q[0];\n").rfind("line 1:", 0) == 0); // no qreg yet
    CHECK(message_of("qreg q[1];\nh q[0]\n") != "no error"); // missing ';'
    CHECK(message_of("qreg q[1];\nrz() q[0];\n") != "no error");
    CHECK(message_of("qreg q[1];\nh r[0];\n").rfind("line 2:", 0) == 0);
    CHECK(message_of("qreg q[1];\nmeasure q[0];\n").rfind("line 2:", 0) == 0);
}

TEST_CASE("emit and reparse is stable") {
    std::mt19937 rng(4242);
    for (int t = 0; t < 30; ++t) {
        Circuit c   = random_full_circuit(rng, 3, 20);
        Circuit c2  = parse_qasm(emit_qasm(c));
        Circuit c3  = parse_qasm(emit_qasm(c2));
        CHECK(same_gates(c2, c3));
        // emitted text is semantically faithful
        CHECK(tensors_close(circuit_matrix(c), circuit_matrix(c2)));
    }
}

TEST_CASE("circuit_to_diagram evaluates to exactly the circuit unitary") {
    std::mt19937 rng(99);
    SUBCASE("single gates") {
        for (GateType t : {GateType::H, GateType::X, GateType::Y, GateType::Z,
                           GateType::S, GateType::Sdg, GateType::T,
                           GateType::Tdg}) {
            Circuit c;
            c.qubits = 1;
            c.add(t, {0});
            CHECK(tensors_close(evaluate(circuit_to_diagram(c)),
                                circuit_matrix(c)));
        }
    }
    SUBCASE("random circuits in both Toffoli modes") {
        for (int t = 0; t < 25; ++t) {
            int     n = 2 + t % 3;
            Circuit c = random_full_circuit(rng, n, 12);
            Tensor  want = circuit_matrix(c);
            CHECK(tensors_close(evaluate(circuit_to_diagram(c, "hbox")),
                                want));
            CHECK(tensors_close(evaluate(circuit_to_diagram(c, "gadgets")),
                                want));
        }
    }
    SUBCASE("phase gadget gate") {
        Circuit c;
        c.qubits = 3;
        c.add(GateType::PhaseGadget, {0, 1, 2}, Phase::exact(1, 4));
        Tensor got  = evaluate(circuit_to_diagram(c));
        Tensor want = circuit_matrix(c);
        CHECK(tensors_close(got, want));
    }
    SUBCASE("unknown mode throws") {
        Circuit c;
        c.qubits = 1;
        CHECK_THROWS_AS(circuit_to_diagram(c, "nope"), std::invalid_argument);
    }
}

TEST_CASE("renderers are deterministic and structurally sensible") {
    Circuit c;
    c.qubits = 2;
    c.add(GateType::CX, {0, 1});
    Diagram d = circuit_to_diagram(c);
    SUBCASE("dot output") {
        std::string dot = diagram_to_dot(d);
        CHECK(dot == diagram_to_dot(d));
        // 2 spiders + 4 boundary points, 5 edges
        CHECK(std::count(dot.begin(), dot.end(), '[') >= 6);
        std::size_t edges = 0;
        for (std::size_t p = dot.find("--"); p != std::string::npos;
             p = dot.find("--", p + 1))
            ++edges;
        CHECK(edges == 5);
        CHECK(dot.find("shape=circle") != std::string::npos);
        CHECK(dot.find("rankdir=LR") != std::string::npos);
    }
    SUBCASE("hadamard edges are dashed") {
        Circuit cz;
        cz.qubits = 2;
        cz.add(GateType::CZ, {0, 1});
        std::string dot = diagram_to_dot(circuit_to_diagram(cz));
        CHECK(dot.find("style=dashed") != std::string::npos);
    }
    SUBCASE("tikz output") {
        std::string tikz = diagram_to_tikz(d);
        CHECK(tikz == diagram_to_tikz(d));
        CHECK(tikz.find("\\begin{tikzpicture}") != std::string::npos);
        CHECK(tikz.find("\\end{tikzpicture}") != std::string::npos);
        CHECK(tikz.find("zdot") != std::string::npos);
        CHECK(tikz.find("xdot") != std::string::npos);
    }
    SUBCASE("h-boxes render as boxes") {
        Circuit ccz;
        ccz.qubits = 3;
        ccz.add(GateType::CCZ, {0, 1, 2});
        std::string dot = diagram_to_dot(circuit_to_diagram(ccz, "hbox"));
        CHECK(dot.find("shape=box") != std::string::npos);
    }
    SUBCASE("empty diagram renders headers only") {
        Diagram     e;
        std::string dot = diagram_to_dot(e);
        CHECK(dot.find("graph zx {") != std::string::npos);
        CHECK(dot.find("--") == std::string::npos);
    }
}

TEST_CASE("gate statistics") {
    SUBCASE("T-like counting") {
        Circuit c;
        c.qubits = 3;
        c.add(GateType::T, {0});
        c.add(GateType::Tdg, {1});
        c.add(GateType::RZ, {0}, Phase::exact(3, 4));
        c.add(GateType::RZ, {0}, Phase::exact(1, 2)); // S: not T-like
        c.add(GateType::CCZ, {0, 1, 2});
        CircuitStats s = stats(c);
        CHECK(s.t_count == 3 + 7);
        CHECK(s.total == 5);
    }
    SUBCASE("empty circuit") {
        Circuit      c;
        CircuitStats s = stats(c);
        CHECK(s.t_count == 0);
        CHECK(s.total == 0);
        CHECK(s.depth == 0);
    }
    SUBCASE("depth and two-qubit count") {
        Circuit c;
        c.qubits = 3;
        c.add(GateType::H, {0});
        c.add(GateType::H, {1});
        c.add(GateType::CX, {0, 1});
        c.add(GateType::H, {2});
        CircuitStats s = stats(c);
        CHECK(s.two_qubit_count == 1);
        CHECK(s.depth == 2);
    }
}
