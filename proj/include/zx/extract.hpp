#pragma once

#include "zx/circuit.hpp"
#include "zx/graphlike.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace zx {

// Dense GF(2) matrix; row operations are the only mutators.
class BitMatrix {
public:
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          bits_(static_cast<std::size_t>(rows) *
                static_cast<std::size_t>(cols), 0) {}

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool at(int r, int c) const { return bits_[index(r, c)] != 0; }
    void set(int r, int c, bool v) { bits_[index(r, c)] = v ? 1 : 0; }

    // target row <- target row xor source row
    void row_xor(int target, int source) {
        for (int c = 0; c < cols_; ++c)
            bits_[index(target, c)] ^= bits_[index(source, c)];
    }

    bool is_identity() const {
        if (rows_ != cols_)
            return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (at(r, c) != (r == c))
                    return false;
        return true;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    int                  rows_, cols_;
    std::vector<uint8_t> bits_;
};

struct RowOp {
    int target = 0; // target <- target xor source
    int source = 0;
};

// Full row reduction with deterministic lowest-row pivot choice. Replaying
// the returned ops on the input reproduces the reduced matrix; invertible
// square inputs reduce to the identity.
std::pair<std::vector<RowOp>, BitMatrix> gauss_elim(const BitMatrix& m);

// CNOT circuit whose linear action on basis states is the transpose of the
// matrix those row operations eliminate.
Circuit cnot_circuit_of(const std::vector<RowOp>& ops, int n);

// Turn a fully reduced Clifford diagram back into a circuit over
// {H, S, Sdg, Z, CZ, CX}; the result is proportional to the diagram with a
// unit-modulus factor. Throws if internal spiders or non-Clifford phases
// remain, or the biadjacency is singular.
Circuit extract_circuit(const GraphLikeView& g);

struct ExtractReport {
    bool    ok = false;
    Complex lambda = Complex(0, 0);
    double  max_dev = 0.0;
};

// Proportionality check of the two circuit unitaries (<= 10 qubits).
ExtractReport verify_extraction(const Circuit& original,
                                const Circuit& extracted);

} // namespace zx
