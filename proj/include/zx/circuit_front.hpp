#pragma once

#include "zx/circuit.hpp"
#include "zx/diagram.hpp"

#include <string>

namespace zx {

// QASM 2.0 subset (qreg, plus the gate set of GateType). Parse errors throw
// std::invalid_argument with a line number.
Circuit     parse_qasm(const std::string& text);
std::string emit_qasm(const Circuit& c);

// Build a diagram that evaluates to exactly the circuit unitary (scalar
// bookkeeping included). toffoli_mode selects how CCZ/CCX are encoded:
// "hbox" (one labeled H-box) or "gadgets" (phase-gadget expansion).
Diagram circuit_to_diagram(const Circuit&     c,
                           const std::string& toffoli_mode = "hbox");

// Deterministic renderings.
std::string diagram_to_dot(const Diagram& d);
std::string diagram_to_tikz(const Diagram& d);

} // namespace zx
