#pragma once

#include "zx/circuit.hpp"
#include "zx/diagram.hpp"
#include "zx/rules.hpp"

#include <vector>

namespace zx {

// Semi-Boolean function f : {0,1}^vars -> R stored as 2^vars coefficients
// (radians), indexed by variable bitmask. With and_terms false, entry y is the
// coefficient of XOR(x & y) (entry 0 is the constant term); with and_terms
// true, entry y is the coefficient of AND(x & y).
struct FourierTable {
    int                 vars = 0;
    bool                and_terms = false;
    std::vector<double> coeffs;
};

// Exact change of basis between the XOR-term and AND-term encodings; the two
// transforms are mutually inverse.
FourierTable xor_to_and(const FourierTable& t);
FourierTable and_to_xor(const FourierTable& t);

// H-box rewrite rules. Matchers return all sites ascending; appliers mutate
// and throw std::invalid_argument on stale or ill-formed matches, tracking the
// exact global-scalar correction.

// Two H-boxes bridged by an arity-2 label -1 H-box (or directly by a Hadamard
// edge) merge into one box; for a bridge to a default -1 box the label is
// kept, and in general the merged label is (1 + a + b - a*b)/2.
std::vector<Match> find_fuse_hbox(const Diagram& d);
RewriteStep        apply_fuse_hbox(Diagram& d, const Match& m);

// An arity-1 X(pi) state plugged into an H-box deletes that leg.
std::vector<Match> find_absorb_one(const Diagram& d);
RewriteStep        apply_absorb_one(Diagram& d, const Match& m);

// An arity-1 X(0) state plugged into an H-box disconnects it, leaving an
// arity-1 Z(0) spider on every other leg.
std::vector<Match> find_explode_zero(const Diagram& d);
RewriteStep        apply_explode_zero(Diagram& d, const Match& m);

// A phase-0 X-spider pushes through a label +-1 H-box as a complete bipartite
// pattern of Z-spiders and H-boxes.
std::vector<Match> find_zh_bialgebra(const Diagram& d);
RewriteStep        apply_zh_bialgebra(Diagram& d, const Match& m);

// A label-1 H-box of any arity splits into disconnected Z(0) states.
std::vector<Match> find_unit_decompose(const Diagram& d);
RewriteStep        apply_unit_decompose(Diagram& d, const Match& m);

// Two H-boxes plainly attached to the same set of Z-spiders merge,
// multiplying labels.
std::vector<Match> find_multiply_hboxes(const Diagram& d);
RewriteStep        apply_multiply_hboxes(Diagram& d, const Match& m);

// Two H-boxes with the same Z-spider neighbours whose spare legs meet in an
// arity-2 X(pi) spider merge into a single box labelled (a+b)/2.
std::vector<Match> find_average_hboxes(const Diagram& d);
RewriteStep        apply_average_hboxes(Diagram& d, const Match& m);

// Two equal-label H-boxes on the same Z-spiders, one connection differing by
// an arity-2 X(pi), merge into one box that drops that connection entirely.
std::vector<Match> find_intro_rule(const Diagram& d);
RewriteStep        apply_intro_rule(Diagram& d, const Match& m);

// Multiply-controlled X on controls+1 qubits (last qubit is the target):
// control Z-spiders feed an H-box that couples to the target X-spider through
// a Hadamard edge. Evaluates exactly to the C^controls X matrix.
Diagram toffoli_diagram(int controls);

// Appends a fresh control qubit whose Z-spider is wired to the given H-box
// (through a NOT when activating is false). Purely a constructor; whether the
// result is the intended controlled gate must be checked by the caller.
Diagram add_control(const Diagram& d, int hbox, bool activating = true);

// Replaces an arity-2 or arity-3 H-box carrying a unit-modulus label by phase
// gates and phase gadgets on its Z-spider neighbours, preserving evaluation
// exactly. For arity 3 and label -1 this yields the seven +-pi/4 terms.
std::vector<RewriteStep> ccz_decompose(Diagram& d, int hbox);

// A diagram with one extra output wire meant to be post-selected with an
// arity-1 X-spider effect: X(0) selects the intended branch and X(pi) the
// branch needing the correction circuit.
struct PostSelected {
    Diagram diagram;
    Circuit correction;
};

// Toffoli from four +-pi/4 phase gadgets and a measured ancilla wire.
// X(0) branch is proportional to the Toffoli on qubits (0,1,2); the X(pi)
// branch additionally needs CZ(0,1).
PostSelected build_jones_toffoli();

// Compute-uncompute Toffoli pair sharing one AND ancilla, four +-pi/4 phases
// total. Qubits: 0,1 controls; input 2 is the first target, input 3 the
// returning wire; output 2 is the mid-circuit target, output 3 the final one.
// X(0) branch is proportional to the pair CCX(0,1,2); CCX(0,1,3); the X(pi)
// branch additionally needs CZ(0,1) and Z(3).
PostSelected build_gidney_pair();

// Fixpoint cleanup for AND/Toffoli-style diagrams: H-box fusion, multiply,
// unit decomposition, state absorption, arity-1 phase-label boxes folded into
// neighbouring Z-spiders, plus the basic spider rules.
std::vector<RewriteStep> zh_pass(Diagram& d);

// Dispatch by rule name over the H-box rules, falling back to the core rules.
RewriteStep apply_rule_zh(Diagram& d, const Match& m);

} // namespace zx
