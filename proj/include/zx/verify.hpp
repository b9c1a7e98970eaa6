#pragma once

#include "zx/circuit.hpp"

#include <string>
#include <vector>

namespace zx {

enum class VerifyStatus { Proved, EqualNumeric, Different, Inconclusive };

struct VerifyReport {
    VerifyStatus status = VerifyStatus::Inconclusive;
    std::string  detail;
};

// Equality of two circuits up to global phase. First tries the rewriting
// route: compose a with the adjoint of b, fully reduce, extract, and cancel
// inverse gate pairs; an empty residue proves equality symbolically. If that
// route does not decide, falls back to a dense unitary comparison when the
// circuits are at most 10 qubits wide, else reports Inconclusive. Throws
// std::invalid_argument on a qubit-count mismatch.
VerifyReport verify_circuits(const Circuit& a, const Circuit& b,
                             double tol = 1e-9);

struct AmpResult {
    Complex     value;
    std::string method; // "clifford" or "dense"
};

// Amplitude <out| c |in> for computational basis bitstrings (entry i is
// qubit i). Uses the diagrammatic Clifford path when every gate is Clifford,
// otherwise a dense product capped at 10 qubits (WidthError beyond that).
AmpResult amplitude(const Circuit& c, const std::vector<bool>& in,
                    const std::vector<bool>& out);

// Remove adjacent inverse gate pairs, commuting past gates on disjoint
// qubits, until no pair remains.
Circuit cancel_inverse_pairs(const Circuit& c);

} // namespace zx
